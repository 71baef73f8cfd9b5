#include <stdio.h>

struct point { int x; int y; };

static long dist2(const struct point *a, const struct point *b)
{
    long dx = a->x - b->x;
    long dy = a->y - b->y;
    return dx * dx + dy * dy;
}

int main(void)
{
    struct point pts[32];
    int n = 0, i, j, bi = 0, bj = 0;
    long best = -1;

    while (n < 32 && scanf("%d %d", &pts[n].x, &pts[n].y) == 2)
        n++;
    for (i = 0; i < n; i++) {
        for (j = i + 1; j < n; j++) {
            long d = dist2(&pts[i], &pts[j]);
            if (best < 0 || d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    pts[0].x += 1;
    printf("%ld %d %d %d\n", best, bi, bj, pts[0].x);
    return 0;
}
