void copy_data(char *dst, const char *src, int cnt)
{
    int i;
    i = 0;
    while (cnt) { dst[i] = src[i]; i++; cnt -= 1; }
    dst[i] = '\0';
}
