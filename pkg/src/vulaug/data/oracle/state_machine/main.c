#include <stdio.h>

int main(void)
{
    int c, state = 0, words = 0, lines = 0, comments = 0;

    while ((c = getchar()) != EOF) {
        switch (state) {
        case 0:
            if (c == '/')
                state = 1;
            else if (c != ' ' && c != '\n')
                state = 3;
            break;
        case 1:
            if (c == '/') {
                state = 2;
                comments++;
            } else {
                state = 3;
            }
            break;
        case 2:
            if (c == '\n')
                state = 0;
            break;
        default:
            if (c == ' ' || c == '\n') {
                words += 1;
                state = 0;
            }
            break;
        }
        if (c == '\n')
            lines++;
    }
    printf("%d %d %d\n", words, lines, comments);
    return 0;
}
