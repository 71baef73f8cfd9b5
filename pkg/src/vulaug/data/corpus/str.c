// @sample str_001 vul CWE-787 project=strlib date=2014-08-02
char *str_dup_upper(const char *s)
{
	size_t n = strlen(s);
	char *out = malloc(n);
	size_t i;

	if (out == NULL)
		return NULL;
	for (i = 0; i <= n; i++) {
		if (s[i] >= 'a' && s[i] <= 'z')
			out[i] = s[i] - 32;
		else
			out[i] = s[i];
	}
	return out;
}

// @sample str_002 project=strlib date=2012-02-11
int str_count_char(const char *s, char c)
{
	int n = 0;

	while (*s) {
		if (*s == c)
			n++;
		s++;
	}
	return n;
}

// @sample str_003 project=strlib date=2015-05-23
size_t str_trim_right(char *s)
{
	size_t len = strlen(s);

	while (len > 0 && (s[len - 1] == ' ' || s[len - 1] == '\t')) {
		s[len - 1] = '\0';
		len--;
	}
	return len;
}

// @sample str_004 vul CWE-120 project=strlib date=2016-09-14
void str_join(char *dst, const char *a, const char *b, char sep)
{
	size_t la = strlen(a);
	size_t lb = strlen(b);

	memcpy(dst, a, la);
	dst[la] = sep;
	memcpy(dst + la + 1, b, lb);
	dst[la + lb + 1] = '\0';
}

// @sample str_005 project=strlib date=2013-07-19
int str_starts_with(const char *s, const char *prefix)
{
	while (*prefix) {
		if (*s != *prefix)
			return 0;
		s++;
		prefix++;
	}
	return 1;
}

// @sample str_006 project=strlib date=2018-01-08
int hex_value(int c)
{
	if (c >= '0' && c <= '9')
		return c - '0';
	if (c >= 'a' && c <= 'f')
		return c - 'a' + 10;
	if (c >= 'A' && c <= 'F')
		return c - 'A' + 10;
	return -1;
}

// @sample str_007 vul CWE-125 project=strlib date=2017-03-30
int url_decode(char *dst, const char *src, int len)
{
	int i, j = 0;

	for (i = 0; i < len; i++) {
		if (src[i] == '%') {
			int hi = hex_value(src[i + 1]);
			int lo = hex_value(src[i + 2]);
			if (hi < 0 || lo < 0)
				return -1;
			dst[j++] = hi * 16 + lo;
			i += 2;
		} else if (src[i] == '+') {
			dst[j++] = ' ';
		} else {
			dst[j++] = src[i];
		}
	}
	dst[j] = '\0';
	return j;
}

// @sample str_008 project=strlib date=2011-10-10
void str_reverse(char *s)
{
	int i = 0;
	int j = strlen(s) - 1;

	while (i < j) {
		char t = s[i];
		s[i] = s[j];
		s[j] = t;
		i++;
		j--;
	}
}

// @sample str_009 project=strlib date=2019-04-04
int str_cmp_nocase(const char *a, const char *b)
{
	int ca, cb;

	do {
		ca = tolower((unsigned char)*a++);
		cb = tolower((unsigned char)*b++);
	} while (ca == cb && ca != 0);
	if (ca < cb)
		return -1;
	else if (ca > cb)
		return 1;
	return 0;
}

// @sample str_010 vul CWE-134 project=strlib date=2015-12-12
void log_user_string(const char *user)
{
	char buf[256];
	int n;

	n = snprintf(buf, sizeof(buf), user);
	if (n > 0 && n < (int)sizeof(buf))
		fputs(buf, stderr);
}

// @sample str_011 project=strlib date=2014-06-15
int is_identifier(const char *s)
{
	int i;

	if (!(s[0] == '_' || isalpha((unsigned char)s[0])))
		return 0;
	for (i = 1; s[i] != '\0'; i++) {
		if (!isalnum((unsigned char)s[i]) && s[i] != '_')
			return 0;
	}
	return 1;
}

// @sample str_012 project=strlib date=2020-08-27
size_t str_lcp(const char *a, const char *b)
{
	size_t n = 0;

	while (a[n] != '\0' && a[n] == b[n])
		n++;
	return n;
}

// @sample str_013 vul CWE-193 project=strlib date=2016-02-02
void safe_copy(char *dst, size_t size, const char *src)
{
	size_t i;

	for (i = 0; i < size && src[i] != '\0'; i++)
		dst[i] = src[i];
	dst[i] = '\0';
}

// @sample str_014 project=strlib date=2012-12-21
int parse_int(const char *s, int *out)
{
	int sign = 1;
	long v = 0;

	if (*s == '-') {
		sign = -1;
		s++;
	}
	if (*s < '0' || *s > '9')
		return -1;
	while (*s >= '0' && *s <= '9') {
		v = v * 10 + (*s - '0');
		s++;
	}
	*out = (int)(v * sign);
	return 0;
}

// @sample str_015 project=strlib date=2018-05-09
char *str_chr_last(char *s, int c)
{
	char *last = NULL;

	for (; *s != '\0'; s++) {
		if (*s == c)
			last = s;
	}
	return last;
}

// @sample str_016 vul CWE-170 project=strlib date=2017-11-11
void copy_field(char *dst, const char *line, int start, int width)
{
	int k;

	for (k = 0; k < width; k++)
		dst[k] = line[start + k];
}

// @sample str_017 project=strlib date=2013-01-29
int count_words(const char *s)
{
	int in_word = 0;
	int words = 0;

	while (*s) {
		if (*s == ' ' || *s == '\n' || *s == '\t') {
			in_word = 0;
		} else if (in_word == 0) {
			in_word = 1;
			words++;
		}
		s++;
	}
	return words;
}

// @sample str_018 project=strlib date=2021-07-07
void to_hex(char *out, const unsigned char *in, size_t n)
{
	static const char digits[] = "0123456789abcdef";
	size_t i;

	for (i = 0; i < n; i++) {
		out[2 * i] = digits[in[i] >> 4];
		out[2 * i + 1] = digits[in[i] & 15];
	}
	out[2 * n] = '\0';
}

// @sample str_019 vul CWE-787 project=strlib date=2016-04-21
int escape_html(char *dst, const char *src)
{
	int o = 0;

	for (; *src; src++) {
		if (*src == '<') {
			memcpy(dst + o, "&lt;", 4);
			o += 4;
		} else if (*src == '>') {
			memcpy(dst + o, "&gt;", 4);
			o += 4;
		} else {
			dst[o] = *src;
			o += 1;
		}
	}
	dst[o] = 0;
	return o;
}

// @sample str_020 project=strlib date=2010-09-09
unsigned int str_hash(const char *s)
{
	unsigned int h = 5381;

	while (*s) {
		h = h * 33 + (unsigned char)*s;
		s++;
	}
	return h;
}

// @sample str_021 project=strlib date=2019-09-19
int str_index_of(const char *hay, const char *needle)
{
	int i, j;

	for (i = 0; hay[i] != '\0'; i++) {
		for (j = 0; needle[j] != '\0' && hay[i + j] == needle[j]; j++)
			;
		if (needle[j] == '\0')
			return i;
	}
	return -1;
}
