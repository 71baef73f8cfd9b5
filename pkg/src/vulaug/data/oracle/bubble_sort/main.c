#include <stdio.h>

static void bubble_sort(int *a, int n)
{
    int i, j, t;

    for (i = 0; i < n - 1; i++) {
        for (j = 0; j < n - 1 - i; j++) {
            if (a[j] > a[j + 1]) {
                t = a[j];
                a[j] = a[j + 1];
                a[j + 1] = t;
            }
        }
    }
}

int main(void)
{
    int a[64];
    int n = 0, i;

    while (n < 64 && scanf("%d", &a[n]) == 1)
        n++;
    bubble_sort(a, n);
    for (i = 0; i < n; i++) {
        if (i > 0)
            printf(" ");
        else
            printf("sorted: ");
        printf("%d", a[i]);
    }
    printf("\n");
    return n == 0 ? 1 : 0;
}
