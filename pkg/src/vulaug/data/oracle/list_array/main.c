#include <stdio.h>

static int next[128];
static int val[128];

int main(void)
{
    int head = -1, n = 0, v, p, prev, count = 0;

    while (n < 128 && scanf("%d", &v) == 1) {
        val[n] = v;
        prev = -1;
        p = head;
        while (p != -1 && val[p] < v) {
            prev = p;
            p = next[p];
        }
        next[n] = p;
        if (prev == -1)
            head = n;
        else
            next[prev] = n;
        n++;
    }
    for (p = head; p != -1; p = next[p]) {
        printf("%d ", val[p]);
        count += 1;
    }
    printf("| %d\n", count);
    return 0;
}
