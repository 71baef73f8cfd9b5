#include <stdio.h>
#include <string.h>

int main(void)
{
    char s[256];
    int i, n, run;

    while (scanf("%255s", s) == 1) {
        n = strlen(s);
        i = 0;
        while (i < n) {
            run = 1;
            while (i + run < n && s[i + run] == s[i] && run < 9)
                run += 1;
            printf("%d%c", run, s[i]);
            i += run;
        }
        printf("\n");
    }
    return 0;
}
