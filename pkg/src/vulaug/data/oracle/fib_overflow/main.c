#include <stdio.h>
#include <limits.h>

int main(void)
{
    int n, i;
    long a, b, t;

    while (scanf("%d", &n) == 1) {
        a = 0;
        b = 1;
        for (i = 0; i < n; i++) {
            if (b > LONG_MAX - a) {
                printf("overflow at %d\n", i);
                break;
            }
            t = a + b;
            a = b;
            b = t;
        }
        if (i == n)
            printf("%ld\n", a);
    }
    return 0;
}
