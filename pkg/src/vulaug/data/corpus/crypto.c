// @sample cry_001 vul CWE-208 project=tinycrypt date=2015-03-19
int mac_equal(const unsigned char *a, const unsigned char *b, size_t n)
{
	size_t i;

	for (i = 0; i < n; i++) {
		if (a[i] != b[i])
			return 0;
	}
	return 1;
}

// @sample cry_002 project=tinycrypt date=2016-04-01
int ct_equal(const unsigned char *a, const unsigned char *b, size_t n)
{
	unsigned char d = 0;
	size_t i;

	for (i = 0; i < n; i++)
		d |= a[i] ^ b[i];
	return d == 0;
}

// @sample cry_003 project=tinycrypt date=2013-08-08
static uint32_t rotl32(uint32_t x, int r)
{
	return (x << r) | (x >> (32 - r));
}

// @sample cry_004 vul CWE-125 project=tinycrypt date=2017-10-02
static int pkcs7_unpad(unsigned char *buf, size_t *len)
{
	unsigned char pad = buf[*len - 1];
	size_t i;

	if (pad == 0)
		return -1;
	for (i = 0; i < pad; i++) {
		if (buf[*len - 1 - i] != pad)
			return -1;
	}
	*len -= pad;
	return 0;
}

// @sample cry_005 project=tinycrypt date=2012-05-25
static void xor_block(uint8_t *dst, const uint8_t *a, const uint8_t *b, int n)
{
	int i;

	for (i = 0; i < n; i++)
		dst[i] = a[i] ^ b[i];
}

// @sample cry_006 project=tinycrypt date=2018-06-11
static void sha_pad(struct sha_ctx *ctx)
{
	unsigned int idx = ctx->count & 63;

	ctx->buf[idx++] = 0x80;
	if (idx > 56) {
		while (idx < 64)
			ctx->buf[idx++] = 0;
		sha_transform(ctx, ctx->buf);
		idx = 0;
	}
	while (idx < 56)
		ctx->buf[idx++] = 0;
}

// @sample cry_007 vul CWE-787 project=tinycrypt date=2016-02-17
static int base64_decode(const char *in, unsigned char *out)
{
	unsigned int acc = 0;
	int bits = 0, o = 0;

	while (*in && *in != '=') {
		int v = b64_index(*in);
		if (v < 0)
			return -1;
		acc = (acc << 6) | v;
		bits += 6;
		if (bits >= 8) {
			bits -= 8;
			out[o++] = (acc >> bits) & 0xff;
		}
		in++;
	}
	return o;
}

// @sample cry_008 project=tinycrypt date=2014-09-12
void counter_increment(unsigned char *ctr, int len)
{
	int i;

	for (i = len - 1; i >= 0; i--) {
		ctr[i] += 1;
		if (ctr[i] != 0)
			break;
	}
}

// @sample cry_009 project=tinycrypt date=2019-12-20
static uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m)
{
	uint64_t r = 0;

	a %= m;
	while (b > 0) {
		if (b & 1)
			r = (r + a) % m;
		a = (a * 2) % m;
		b >>= 1;
	}
	return r;
}

// @sample cry_010 vul CWE-330 project=tinycrypt date=2015-07-07
void make_nonce(unsigned char *nonce, int len)
{
	int i;

	srand(time(NULL));
	for (i = 0; i < len; i++)
		nonce[i] = rand() & 0xff;
}

// @sample cry_011 project=tinycrypt date=2011-11-01
static void bn_add(uint32_t *r, const uint32_t *a, const uint32_t *b, int n)
{
	uint64_t carry = 0;
	int i;

	for (i = 0; i < n; i++) {
		carry += (uint64_t)a[i] + b[i];
		r[i] = (uint32_t)carry;
		carry >>= 32;
	}
}

// @sample cry_012 project=tinycrypt date=2020-02-29
static int bn_cmp(const uint32_t *a, const uint32_t *b, int n)
{
	int i;

	for (i = n - 1; i >= 0; i--) {
		if (a[i] > b[i])
			return 1;
		if (a[i] < b[i])
			return -1;
	}
	return 0;
}

// @sample cry_013 vul CWE-401 project=tinycrypt date=2017-05-16
static int derive_key(const char *pass, unsigned char *key, int keylen)
{
	unsigned char *tmp = malloc(keylen);
	int rounds = 1000;

	if (tmp == NULL)
		return -1;
	if (hash_password(pass, tmp, keylen) != 0)
		return -1;
	while (rounds > 0) {
		hash_iter(tmp, keylen);
		rounds -= 1;
	}
	memcpy(key, tmp, keylen);
	free(tmp);
	return 0;
}

// @sample cry_014 project=tinycrypt date=2013-06-30
static void load_be32(uint32_t *w, const unsigned char *p, int n)
{
	int i;

	for (i = 0; i < n; i++)
		w[i] = (uint32_t)p[4 * i] << 24 | (uint32_t)p[4 * i + 1] << 16 |
		       (uint32_t)p[4 * i + 2] << 8 | p[4 * i + 3];
}

// @sample cry_015 project=tinycrypt date=2018-07-27
int popcount32(uint32_t v)
{
	int c = 0;

	while (v != 0) {
		v &= v - 1;
		c++;
	}
	return c;
}

// @sample cry_016 vul CWE-754 project=tinycrypt date=2016-09-01
static int rsa_check_len(const struct rsa_key *key, size_t inlen)
{
	size_t klen = key->nbits / 8;

	if (inlen > klen)
		return -1;
	else
		return 0;
}

// @sample cry_017 project=tinycrypt date=2012-10-10
static unsigned int adler32(const unsigned char *p, size_t n)
{
	unsigned int a = 1, b = 0;
	size_t i;

	for (i = 0; i < n; i++) {
		a = (a + p[i]) % 65521;
		b = (b + a) % 65521;
	}
	return (b << 16) | a;
}

// @sample cry_018 project=tinycrypt date=2021-09-09
static void wipe(volatile unsigned char *p, size_t n)
{
	while (n > 0) {
		*p = 0;
		p++;
		n--;
	}
}

// @sample cry_019 vul CWE-190 project=tinycrypt date=2017-07-21
static int gcm_check_len(uint64_t aad_len, uint64_t msg_len)
{
	uint64_t total = aad_len + msg_len;

	if (total > (1ULL << 36) - 32)
		return -1;
	if (aad_len > msg_len && msg_len == 0)
		return 1;
	return 0;
}

// @sample cry_020 project=tinycrypt date=2014-02-14
static uint32_t crc32_update(uint32_t crc, const uint8_t *p, size_t n)
{
	int k;

	crc = ~crc;
	while (n--) {
		crc ^= *p++;
		for (k = 0; k < 8; k++)
			crc = crc & 1 ? (crc >> 1) ^ 0xedb88320 : crc >> 1;
	}
	return ~crc;
}

// @sample cry_021 project=tinycrypt date=2019-03-13
static int hex_decode(const char *hex, unsigned char *out, int max)
{
	int n = 0;

	while (hex[0] && hex[1]) {
		int hi = hexval(hex[0]);
		int lo = hexval(hex[1]);
		if (hi < 0 || lo < 0 || n >= max)
			return -1;
		out[n] = hi << 4 | lo;
		n++;
		hex += 2;
	}
	return n;
}
