#include <stdio.h>

int main(void)
{
    unsigned long v;
    int base;
    char buf[72];
    int i;

    while (scanf("%lu %d", &v, &base) == 2) {
        if (base < 2 || base > 16) {
            printf("badbase\n");
            continue;
        }
        i = 71;
        buf[i] = '\0';
        do {
            buf[--i] = "0123456789abcdef"[v % base];
            v /= base;
        } while (v > 0);
        printf("%s\n", buf + i);
    }
    return 0;
}
