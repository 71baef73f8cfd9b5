#include <stdio.h>
#include <string.h>

static char composite[10001];

int main(void)
{
    int n, i, j, count = 0;

    if (scanf("%d", &n) != 1 || n < 2 || n > 10000)
        return 3;
    memset(composite, 0, sizeof(composite));
    for (i = 2; i * i <= n; i++) {
        if (composite[i])
            continue;
        for (j = i * i; j <= n; j += i)
            composite[j] = 1;
    }
    for (i = 2; i <= n; i++)
        if (!composite[i])
            count++;
    printf("%d\n", count);
    return 0;
}
