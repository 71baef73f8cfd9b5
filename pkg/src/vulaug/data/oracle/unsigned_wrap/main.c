#include <stdio.h>

int main(void)
{
    unsigned int a, b;
    unsigned int r, s;
    unsigned char c;

    while (scanf("%u %u", &a, &b) == 2) {
        r = a - b + 7 * b;
        s = a;
        s -= b;
        s *= 3;
        s ^= a;
        s >>= 1;
        c = a;
        c += b * 3 + 1;
        if (a - b > a)
            printf("wrap %u %u %u\n", r, s, c);
        else
            printf("nowrap %u %u %u\n", r, s, c);
    }
    return 0;
}
