// @sample med_001 vul CWE-190 project=imgcodec date=2016-03-15
static int alloc_image(struct image *img, int width, int height, int bpp)
{
	int stride = width * bpp + 3;
	size_t size;

	stride &= ~3;
	size = stride * height;
	if (width <= 0 || height <= 0)
		return AVERROR(EINVAL);
	img->data = av_malloc(size);
	if (!img->data)
		return AVERROR(ENOMEM);
	img->stride = stride;
	return 0;
}

// @sample med_002 project=imgcodec date=2014-10-01
static void rgb_to_gray(const uint8_t *src, uint8_t *dst, int npix)
{
	int i;

	for (i = 0; i < npix; i++) {
		int r = src[3 * i];
		int g = src[3 * i + 1];
		int b = src[3 * i + 2];
		dst[i] = (r * 77 + g * 150 + b * 29) >> 8;
	}
}

// @sample med_003 vul CWE-125 project=imgcodec date=2017-06-06
static int decode_rle(const uint8_t *src, int srclen, uint8_t *dst, int dstlen)
{
	int si = 0, di = 0;

	while (si < srclen && di < dstlen) {
		int run = src[si];
		uint8_t val = src[si + 1];
		int k;
		for (k = 0; k < run; k++)
			dst[di++] = val;
		si += 2;
	}
	return di;
}

// @sample med_004 project=imgcodec date=2013-02-17
static int clip_uint8(int a)
{
	if (a < 0)
		return 0;
	else if (a > 255)
		return 255;
	else
		return a;
}

// @sample med_005 project=imgcodec date=2018-09-09
static void box_blur_row(const uint8_t *in, uint8_t *out, int w)
{
	int x;

	out[0] = in[0];
	for (x = 1; x < w - 1; x++)
		out[x] = (in[x - 1] + in[x] + in[x + 1]) / 3;
	out[w - 1] = in[w - 1];
}

// @sample med_006 vul CWE-787 project=imgcodec date=2015-11-24
static int read_palette(GetByteContext *gb, uint32_t *pal, int count)
{
	int i;

	if (count > 256)
		count = 256;
	for (i = 0; i <= count; i++) {
		unsigned r = bytestream2_get_byte(gb);
		unsigned g = bytestream2_get_byte(gb);
		unsigned b = bytestream2_get_byte(gb);
		pal[i] = 0xFFU << 24 | r << 16 | g << 8 | b;
	}
	return 0;
}

// @sample med_007 project=imgcodec date=2012-04-04
int audio_mix(short *a, const short *b, int n)
{
	int i;
	int clipped = 0;

	for (i = 0; i < n; i++) {
		int s = a[i] + b[i];
		if (s > 32767) {
			s = 32767;
			clipped++;
		} else if (s < -32768) {
			s = -32768;
			clipped++;
		}
		a[i] = s;
	}
	return clipped;
}

// @sample med_008 project=imgcodec date=2019-02-28
static int64_t rescale(int64_t a, int64_t b, int64_t c)
{
	int64_t r = c / 2;

	if (c <= 0)
		return INT64_MIN;
	if (b <= INT_MAX && c <= INT_MAX) {
		if (a <= INT_MAX)
			return (a * b + r) / c;
		else
			return a / c * b + (a % c * b + r) / c;
	}
	return av_rescale_rnd(a, b, c, AV_ROUND_NEAR_INF);
}

// @sample med_009 vul CWE-369 project=imgcodec date=2016-12-16
static int compute_fps(struct stream_info *si)
{
	int fps;

	fps = si->time_base_den / si->time_base_num;
	if (fps > 1000)
		fps = 1000;
	si->fps = fps;
	return fps;
}

// @sample med_010 project=imgcodec date=2014-05-05
static void yuv_clamp(uint8_t *y, int n)
{
	while (n > 0) {
		if (*y < 16)
			*y = 16;
		else if (*y > 235)
			*y = 235;
		y++;
		n--;
	}
}

// @sample med_011 project=imgcodec date=2020-06-30
static int count_keyframes(const struct packet *pkts, int n)
{
	int i, k = 0;

	for (i = 0; i < n; i++)
		if (pkts[i].flags & PKT_FLAG_KEY)
			k++;
	return k;
}

// @sample med_012 vul CWE-122 project=imgcodec date=2017-01-13
static int unpack_bits(const uint8_t *src, int len, uint8_t *dst)
{
	int pos = 0, out = 0;

	while (pos < len) {
		int8_t n = src[pos++];
		if (n >= 0) {
			memcpy(dst + out, src + pos, n + 1);
			pos += n + 1;
			out += n + 1;
		} else if (n != -128) {
			memset(dst + out, src[pos], 1 - n);
			pos++;
			out += 1 - n;
		}
	}
	return out;
}

// @sample med_013 project=imgcodec date=2011-08-08
int gcd(int a, int b)
{
	while (b != 0) {
		int t = a % b;
		a = b;
		b = t;
	}
	return a;
}

// @sample med_014 project=imgcodec date=2018-03-03
static void downmix_stereo(const float *in, float *out, int frames)
{
	int i;

	for (i = 0; i < frames; i++)
		out[i] = (in[2 * i] + in[2 * i + 1]) * 0.5f;
}

// @sample med_015 vul CWE-125 project=imgcodec date=2015-04-09
static int parse_sps(const uint8_t *buf, int size, struct sps *sps)
{
	int i;

	if (size < 4)
		return -1;
	sps->profile = buf[0];
	sps->level = buf[2];
	sps->num_ref = buf[3] & 0x1f;
	for (i = 0; i < sps->num_ref; i++)
		sps->ref_offset[i] = buf[4 + i];
	return 0;
}

// @sample med_016 project=imgcodec date=2013-12-12
static int bits_needed(unsigned v)
{
	int n = 0;

	do {
		n++;
		v >>= 1;
	} while (v);
	return n;
}

// @sample med_017 project=imgcodec date=2019-07-22
static int find_start_code(const uint8_t *p, int len)
{
	int i;

	for (i = 0; i + 3 < len; i++) {
		if (p[i] == 0 && p[i + 1] == 0 && p[i + 2] == 1)
			return i;
	}
	return -1;
}

// @sample med_018 vul CWE-476 project=imgcodec date=2016-07-01
static void free_frames(struct frame_pool *pool)
{
	int i;

	for (i = 0; i < pool->count; i++) {
		av_free(pool->frames[i]->buf);
		av_free(pool->frames[i]);
	}
	pool->count = 0;
}

// @sample med_019 project=imgcodec date=2012-11-11
static int lerp(int a, int b, int t)
{
	int d = b - a;

	return a + (d * t + 128) / 256;
}

// @sample med_020 project=imgcodec date=2021-01-21
static void sample_rate_convert(const short *in, int n_in, short *out, int n_out)
{
	int i;

	for (i = 0; i < n_out; i++) {
		long pos = (long)i * n_in / n_out;
		out[i] = in[pos];
	}
}

// @sample med_021 vul CWE-190 project=imgcodec date=2018-12-01
static int tile_count(int w, int h, int tw, int th)
{
	int cols = (w + tw - 1) / tw;
	int rows = (h + th - 1) / th;

	if (cols * rows > MAX_TILES)
		return -1;
	return cols * rows;
}
