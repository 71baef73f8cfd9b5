#include <stdio.h>

int main(void)
{
    char tok[32];
    long st[64];
    int sp = 0;

    while (scanf("%31s", tok) == 1) {
        if (tok[0] == '+' && sp >= 2) {
            st[sp - 2] += st[sp - 1];
            sp--;
        } else if (tok[0] == '-' && tok[1] == '\0' && sp >= 2) {
            st[sp - 2] -= st[sp - 1];
            sp--;
        } else if (tok[0] == '*' && sp >= 2) {
            st[sp - 2] *= st[sp - 1];
            sp--;
        } else if (sp < 64) {
            long v = 0;
            int i = 0, neg = 0;
            if (tok[0] == '-') {
                neg = 1;
                i = 1;
            }
            for (; tok[i] >= '0' && tok[i] <= '9'; i++)
                v = v * 10 + (tok[i] - '0');
            st[sp++] = neg ? -v : v;
        }
    }
    if (sp != 1)
        return 1;
    printf("%ld\n", st[0]);
    return 0;
}
