#include <stdio.h>

int main(void)
{
    unsigned long v;

    while (scanf("%lu", &v) == 1) {
        unsigned long x = v;
        int pop = 0, lead = 0, i;
        while (x != 0) {
            x &= x - 1;
            pop++;
        }
        for (i = 63; i >= 0; i--) {
            if ((v >> i) & 1)
                break;
            lead++;
        }
        x = v;
        x |= x >> 1;
        x |= x >> 2;
        x |= x >> 4;
        x |= x >> 8;
        x |= x >> 16;
        x |= x >> 32;
        printf("%d %d %lu\n", pop, lead, x);
    }
    return 0;
}
