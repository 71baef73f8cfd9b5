#include <stdio.h>

int main(void)
{
    double a, b;
    float f;
    int k = 0;

    while (scanf("%lf %lf", &a, &b) == 2) {
        f = (float)a;
        if (a < b) {
            printf("lt ");
        } else {
            printf("nlt ");
        }
        if (a <= b)
            k += 1;
        else
            k += 2;
        if (f > 1.0f)
            printf("big\n");
        else
            printf("small\n");
    }
    printf("%d\n", k);
    return 0;
}
