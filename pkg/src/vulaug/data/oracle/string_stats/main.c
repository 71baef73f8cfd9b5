#include <stdio.h>

int main(void)
{
    char line[256];
    int upper = 0, lower = 0, digit = 0, other = 0;
    int i;

    while (fgets(line, sizeof(line), stdin) != NULL) {
        i = 0;
        while (line[i] != '\0') {
            if (line[i] >= 'A' && line[i] <= 'Z')
                upper++;
            else if (line[i] >= 'a' && line[i] <= 'z')
                lower++;
            else if (line[i] >= '0' && line[i] <= '9')
                digit++;
            else
                other += 1;
            i++;
        }
    }
    printf("%d %d %d %d\n", upper, lower, digit, other);
    return 0;
}
