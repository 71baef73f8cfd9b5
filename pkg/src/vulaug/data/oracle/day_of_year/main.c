#include <stdio.h>

static int is_leap(int y)
{
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int main(void)
{
    static const int mdays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int y, m, d, i, doy;

    while (scanf("%d %d %d", &y, &m, &d) == 3) {
        if (m < 1 || m > 12) {
            printf("bad\n");
            continue;
        }
        doy = d;
        for (i = 0; i < m - 1; i++)
            doy += mdays[i];
        if (m > 2 && is_leap(y))
            doy += 1;
        printf("%d\n", doy);
    }
    return 0;
}
