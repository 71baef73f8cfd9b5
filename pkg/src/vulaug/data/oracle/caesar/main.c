#include <stdio.h>

int main(void)
{
    int shift, c;

    if (scanf("%d", &shift) != 1)
        return 1;
    shift %= 26;
    if (shift < 0)
        shift += 26;
    while ((c = getchar()) != EOF) {
        if (c >= 'a' && c <= 'z')
            c = 'a' + (c - 'a' + shift) % 26;
        else if (c >= 'A' && c <= 'Z')
            c = 'A' + (c - 'A' + shift) % 26;
        putchar(c);
    }
    return 0;
}
