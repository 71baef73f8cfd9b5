#include <stdio.h>
#include <string.h>

static int count_vowels(const char *p, const char *end)
{
    int n = 0;

    while (p < end) {
        if (*p == 'a' || *p == 'e' || *p == 'i' || *p == 'o' || *p == 'u')
            n++;
        p++;
    }
    return n;
}

int main(void)
{
    char buf[256];
    char *q;
    int total = 0;

    while (fgets(buf, sizeof(buf), stdin)) {
        size_t len = strlen(buf);
        q = buf + len;
        total += count_vowels(buf, q);
        if (len > 0 && buf[len - 1] == '\n')
            len -= 1;
        printf("%lu\n", (unsigned long)len);
    }
    printf("%d\n", total);
    return 0;
}
