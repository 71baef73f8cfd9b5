#include <stdio.h>
#include <stdlib.h>

static int process(int n)
{
    int *a = NULL, *b = NULL;
    int i, sum = 0, rc = -1;

    a = malloc(sizeof(int) * (n + 1));
    if (a == NULL)
        goto out;
    b = malloc(sizeof(int) * (n + 1));
    if (b == NULL)
        goto out;
    for (i = 0; i <= n; i++) {
        a[i] = i * i;
        b[i] = a[i] - i;
    }
    for (i = 0; i <= n; i++)
        sum += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    rc = sum;
out:
    free(a);
    free(b);
    return rc;
}

int main(void)
{
    int n;

    while (scanf("%d", &n) == 1) {
        if (n < 0 || n > 1000)
            printf("skip\n");
        else
            printf("%d\n", process(n));
    }
    return 0;
}
