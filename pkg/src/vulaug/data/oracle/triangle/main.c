#include <stdio.h>

static int kind(int a, int b, int c)
{
    if (a <= 0 || b <= 0 || c <= 0)
        return -2;
    if (a + b <= c || a + c <= b || b + c <= a)
        return -1;
    if (a == b && b == c)
        return 0;
    else if (a == b || b == c || a == c)
        return 1;
    else
        return 2;
}

int main(void)
{
    int a, b, c;

    while (scanf("%d %d %d", &a, &b, &c) == 3)
        printf("%d\n", kind(a, b, c));
    return 0;
}
