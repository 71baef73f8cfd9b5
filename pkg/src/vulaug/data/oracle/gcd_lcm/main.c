#include <stdio.h>

static long gcd(long a, long b)
{
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int main(void)
{
    long a, b, g, l;

    while (scanf("%ld %ld", &a, &b) == 2) {
        g = gcd(a, b);
        if (g == 0) {
            printf("undef\n");
        } else {
            l = a / g * b;
            printf("%ld %ld\n", g, l);
        }
    }
    return 0;
}
