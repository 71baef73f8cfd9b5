#include <stdio.h>

int main(void)
{
    long a[64];
    int n = 0, i, j;

    while (n < 64 && scanf("%ld", &a[n]) == 1)
        n++;
    for (i = 1; i < n; i++) {
        long v = a[i];
        j = i - 1;
        while (j >= 0 && a[j] > v) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = v;
    }
    for (i = 0; i < n; i++)
        printf("%ld\n", a[i]);
    return 0;
}
