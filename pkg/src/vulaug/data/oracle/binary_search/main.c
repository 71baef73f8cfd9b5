#include <stdio.h>

static int bsearch_int(const int *a, int n, int key)
{
    int lo = 0;
    int hi = n - 1;

    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (a[mid] == key)
            return mid;
        else if (a[mid] < key)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return -1;
}

int main(void)
{
    int a[100];
    int i, key;

    for (i = 0; i < 100; i++)
        a[i] = i * 3 + 1;
    while (scanf("%d", &key) == 1)
        printf("%d\n", bsearch_int(a, 100, key));
    return 0;
}
