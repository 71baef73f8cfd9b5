#include <stdio.h>

#define DIM 4

int main(void)
{
    int a[DIM][DIM], b[DIM][DIM], c[DIM][DIM];
    int i, j, k, v;

    for (i = 0; i < DIM; i++)
        for (j = 0; j < DIM; j++) {
            if (scanf("%d", &v) != 1)
                v = i + j;
            a[i][j] = v;
            b[j][i] = v - 1;
        }
    for (i = 0; i < DIM; i++) {
        for (j = 0; j < DIM; j++) {
            int s = 0;
            for (k = 0; k < DIM; k++)
                s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    }
    for (i = 0; i < DIM; i++)
        printf("%d %d %d %d\n", c[i][0], c[i][1], c[i][2], c[i][3]);
    return 0;
}
