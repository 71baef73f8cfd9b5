// @sample utl_001 project=misc date=2013-01-01
int isqrt(int n)
{
	int x = n;
	int y = (x + 1) / 2;

	while (y < x) {
		x = y;
		y = (x + n / x) / 2;
	}
	return x;
}

// @sample utl_002 vul CWE-190 project=misc date=2016-06-14
int factorial(int n)
{
	int r = 1;

	while (n > 1) {
		r *= n;
		n--;
	}
	return r;
}

// @sample utl_003 project=misc date=2018-04-09
int digits_sum(long v)
{
	int s = 0;

	if (v < 0)
		v = -v;
	while (v > 0) {
		s += v % 10;
		v /= 10;
	}
	return s;
}

// @sample utl_004 project=misc date=2012-10-02
int is_prime(int n)
{
	int d;

	if (n < 2)
		return 0;
	for (d = 2; d * d <= n; d++) {
		if (n % d == 0)
			return 0;
	}
	return 1;
}

// @sample utl_005 vul CWE-369 project=misc date=2017-09-12
int average(const int *a, int n)
{
	long s = 0;
	int i;

	for (i = 0; i < n; i++)
		s += a[i];
	return s / n;
}

// @sample utl_006 project=misc date=2014-04-17
int ipow(int base, int exp)
{
	int r = 1;

	while (exp > 0) {
		if (exp & 1)
			r *= base;
		base *= base;
		exp >>= 1;
	}
	return r;
}

// @sample utl_007 project=misc date=2020-05-25
int collatz_steps(long n)
{
	int steps = 0;

	while (n != 1) {
		if (n % 2 == 0)
			n = n / 2;
		else
			n = 3 * n + 1;
		steps++;
	}
	return steps;
}

// @sample utl_008 project=misc date=2011-07-19
int fib(int n)
{
	int a = 0, b = 1, i;

	for (i = 0; i < n; i++) {
		int t = a + b;
		a = b;
		b = t;
	}
	return a;
}

// @sample utl_009 vul CWE-682 project=misc date=2015-11-02
int percent_of(int part, int whole)
{
	int p = part * 100 / whole;

	if (p > 100)
		p = 100;
	return p;
}

// @sample utl_010 project=misc date=2019-02-11
int abs_diff(int a, int b)
{
	if (a > b)
		return a - b;
	else
		return b - a;
}

// @sample utl_011 project=misc date=2013-08-26
int sign(long v)
{
	if (v > 0)
		return 1;
	else if (v < 0)
		return -1;
	else
		return 0;
}

// @sample utl_012 project=misc date=2016-12-30
int leap_years_between(int y0, int y1)
{
	int y, n = 0;

	for (y = y0; y <= y1; y++) {
		if (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0))
			n++;
	}
	return n;
}

// @sample utl_013 vul CWE-191 project=misc date=2018-08-03
unsigned int remaining(unsigned int total, unsigned int used)
{
	unsigned int left = total - used;

	if (left > total)
		return 0;
	return left;
}

// @sample utl_014 project=misc date=2012-05-14
int reverse_digits(int v)
{
	int r = 0;

	while (v != 0) {
		r = r * 10 + v % 10;
		v /= 10;
	}
	return r;
}

// @sample utl_015 project=misc date=2021-10-10
int max3(int a, int b, int c)
{
	int m = a;

	if (b > m)
		m = b;
	if (c > m)
		m = c;
	return m;
}

// @sample utl_016 project=misc date=2014-09-29
int triangle_kind(int a, int b, int c)
{
	if (a + b <= c || a + c <= b || b + c <= a)
		return -1;
	if (a == b && b == c)
		return 0;
	else if (a == b || b == c || a == c)
		return 1;
	else
		return 2;
}

// @sample utl_017 vul CWE-835 project=misc date=2017-03-06
int count_down(unsigned int from, unsigned int step)
{
	int n = 0;

	while (from != 0) {
		from -= step;
		n++;
	}
	return n;
}

// @sample utl_018 project=misc date=2010-12-24
int bit_reverse8(int v)
{
	int r = 0, i;

	for (i = 0; i < 8; i++) {
		r = (r << 1) | (v & 1);
		v >>= 1;
	}
	return r;
}

// @sample utl_019 project=misc date=2015-05-18
double poly_eval(const double *c, int n, double x)
{
	double r = 0.0;
	int i;

	for (i = n - 1; i >= 0; i--)
		r = r * x + c[i];
	return r;
}

// @sample utl_020 project=misc date=2019-07-30
int lcm(int a, int b)
{
	int g = a, h = b;

	while (h != 0) {
		int t = g % h;
		g = h;
		h = t;
	}
	if (g == 0)
		return 0;
	return a / g * b;
}

// @sample utl_021 vul CWE-476 project=misc date=2016-01-21
int safe_div(const int *num, int den, int *out)
{
	if (den == 0)
		return -1;
	*out = *num / den;
	return 0;
}

// @sample utl_022 project=misc date=2013-03-17
int round_div(int a, int b)
{
	if ((a < 0) != (b < 0))
		return (a - b / 2) / b;
	else
		return (a + b / 2) / b;
}

// @sample utl_023 project=misc date=2018-10-08
int kr_style_sum(a, n)
	int *a;
	int n;
{
	int s = 0;

	while (n > 0) {
		s += a[n - 1];
		n--;
	}
	return s;
}

// @sample utl_024 project=misc date=2020-11-27
int count_bits_set(unsigned long v)
{
	int c;

	for (c = 0; v; c++)
		v &= v - 1;
	return c;
}

// @sample utl_025 vul CWE-787 project=misc date=2017-06-19
void itoa_base(int v, char *out, int base)
{
	char tmp[16];
	int i = 0, j = 0;

	do {
		tmp[i++] = "0123456789abcdef"[v % base];
		v /= base;
	} while (v > 0);
	while (i > 0) {
		out[j] = tmp[i - 1];
		j++;
		i--;
	}
	out[j] = '\0';
}
