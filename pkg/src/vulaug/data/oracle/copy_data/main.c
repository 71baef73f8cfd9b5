#include <stdio.h>
#include <string.h>

void copy_data(char *dst, const char *src, int cnt)
{
    int i;
    i = 0;
    while (cnt) { dst[i] = src[i]; i++; cnt -= 1; }
    dst[i] = '\0';
}

int main(void)
{
    char src[128], dst[128];
    int cnt;

    if (scanf("%127s %d", src, &cnt) != 2)
        return 2;
    if (cnt > (int)strlen(src))
        cnt = strlen(src);
    copy_data(dst, src, cnt);
    printf("%s|%d\n", dst, cnt);
    return 0;
}
