#include <stdio.h>

int main(void)
{
    long n;
    int steps, maxsteps = 0;

    while (scanf("%ld", &n) == 1) {
        steps = 0;
        if (n <= 0)
            continue;
        while (n != 1) {
            if (n % 2 == 0)
                n = n / 2;
            else
                n = 3 * n + 1;
            steps++;
        }
        if (steps > maxsteps)
            maxsteps = steps;
        printf("%d\n", steps);
    }
    printf("max %d\n", maxsteps);
    return 0;
}
