#include <stdio.h>
#include <stdint.h>

int main(void)
{
    unsigned int x, y;

    while (scanf("%u %u", &x, &y) == 2) {
        uint8_t a = x;
        uint8_t b = y;
        short s = x;
        uint16_t w;
        int r = a * b + b;
        int q = s * 2 - a;
        w = a + b * b;
        a += b;
        b <<= 2;
        printf("%d %d %u %u %u\n", r, q, w, a, b);
    }
    return 0;
}
