#include <stdio.h>

volatile int ticks;
static int total;
static unsigned short mask = 0xff;

static void tick(int n)
{
    ticks += n;
    total += n * 2 + 1;
    if (total > 1000)
        total -= 1000;
}

int main(void)
{
    int n;

    while (scanf("%d", &n) == 1) {
        tick(n);
        mask ^= n;
        mask &= 0xfff;
    }
    if (ticks > total && mask != 0)
        printf("a %d %d %u\n", ticks, total, mask);
    else
        printf("b %d %d %u\n", ticks, total, mask);
    return 0;
}
