#include <stdio.h>

int main(void)
{
    int v, i, sum = 0, odd = 0;
    int vals[32];
    int n = 0;

    while (n < 32 && scanf("%d", &v) == 1)
        vals[n++] = v;
    for (i = 0; i < n; i++) {
        if (vals[i] % 2 == 0)
            continue;
        odd++;
        sum += vals[i];
    }
    i = 0;
    while (i < n) {
        if (vals[i] < 0) {
            i++;
            continue;
        }
        sum -= 1;
        i++;
    }
    printf("%d %d\n", sum, odd);
    return 0;
}
