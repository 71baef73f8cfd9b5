#include <stdio.h>

int main(void)
{
    long v;

    while (scanf("%ld", &v) == 1) {
        long r = 0, s = 0, n = v < 0 ? -v : v;
        int digits = 0;
        do {
            s += n % 10;
            r = r * 10 + n % 10;
            n /= 10;
            digits++;
        } while (n > 0);
        if (s % 3 == 0)
            printf("%ld %ld %d div3\n", r, s, digits);
        else
            printf("%ld %ld %d\n", r, s, digits);
    }
    return 0;
}
