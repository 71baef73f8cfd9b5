#include <stdio.h>
#include <math.h>

static int classify(double x, double lo, double hi)
{
    int r;

    if (x < lo)
        r = -1;
    else if (x > hi)
        r = 1;
    else
        r = 0;
    return r;
}

int main(void)
{
    double x, lo, hi;
    int n = 0;

    while (scanf("%lf %lf %lf", &x, &lo, &hi) == 3) {
        if (x != x) {
            printf("nan\n");
        } else {
            printf("%d\n", classify(x, lo, hi));
        }
        if (x >= 0.0 && hi > lo)
            n++;
    }
    printf("n=%d\n", n);
    return n % 3;
}
