#include <stdio.h>

static int bins[10];

int main(void)
{
    int v, i, j, total = 0;

    while (scanf("%d", &v) == 1) {
        if (v < 0 || v >= 100)
            continue;
        bins[v / 10] += 1;
        total++;
    }
    for (i = 0; i < 10; i++) {
        printf("%2d: ", i * 10);
        for (j = 0; j < bins[i]; j++)
            printf("#");
        printf("\n");
    }
    return total > 5;
}
