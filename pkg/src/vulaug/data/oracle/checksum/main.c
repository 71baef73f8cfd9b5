#include <stdio.h>
#include <stdint.h>

int main(void)
{
    int c, k;
    uint32_t crc = 0xffffffffu;
    unsigned int a = 1, b = 0;

    while ((c = getchar()) != EOF) {
        crc ^= (uint32_t)c;
        for (k = 0; k < 8; k++) {
            if (crc & 1)
                crc = (crc >> 1) ^ 0xedb88320u;
            else
                crc >>= 1;
        }
        a = (a + c) % 65521;
        b = (b + a) % 65521;
    }
    printf("%08x %08x\n", ~crc, (b << 16) | a);
    return 0;
}
