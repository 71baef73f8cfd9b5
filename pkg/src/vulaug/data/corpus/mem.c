// @sample mem_001 vul CWE-190 project=arena date=2016-01-05
void *xcalloc(size_t n, size_t size)
{
	void *p;
	size_t total = n * size;

	p = malloc(total);
	if (p != NULL)
		memset(p, 0, total);
	return p;
}

// @sample mem_002 project=arena date=2014-03-08
static size_t align_up(size_t v, size_t a)
{
	size_t mask = a - 1;

	return (v + mask) & ~mask;
}

// @sample mem_003 project=arena date=2018-11-02
static void *arena_alloc(struct arena *ar, size_t n)
{
	void *p;

	n = (n + 7) & ~7UL;
	if (ar->used + n > ar->cap)
		return NULL;
	p = ar->base + ar->used;
	ar->used += n;
	return p;
}

// @sample mem_004 vul CWE-415 project=arena date=2015-05-30
static void buffer_release(struct buffer *b)
{
	if (b->refs > 1) {
		b->refs -= 1;
		return;
	}
	free(b->data);
	free(b);
	b->refs = 0;
}

// @sample mem_005 project=arena date=2012-08-20
int vec_push(struct vec *v, int value)
{
	if (v->len == v->cap) {
		int ncap = v->cap ? v->cap * 2 : 8;
		int *nd = realloc(v->data, ncap * sizeof(int));
		if (nd == NULL)
			return -1;
		v->data = nd;
		v->cap = ncap;
	}
	v->data[v->len] = value;
	v->len += 1;
	return 0;
}

// @sample mem_006 vul CWE-787 project=arena date=2017-04-04
static int ring_write(struct ring *r, const char *src, int n)
{
	int i;

	for (i = 0; i < n; i++) {
		r->buf[r->head] = src[i];
		r->head = (r->head + 1) & (r->size - 1);
	}
	r->count += n;
	return n;
}

// @sample mem_007 project=arena date=2013-10-13
static int pool_index(const struct pool *p, const void *obj)
{
	const char *c = obj;
	long off = c - p->mem;

	if (off < 0 || off >= p->nobj * p->objsize)
		return -1;
	if (off % p->objsize != 0)
		return -1;
	return off / p->objsize;
}

// @sample mem_008 project=arena date=2019-08-08
void mem_swap(unsigned char *a, unsigned char *b, size_t n)
{
	size_t i;

	for (i = 0; i < n; i++) {
		unsigned char t = a[i];
		a[i] = b[i];
		b[i] = t;
	}
}

// @sample mem_009 vul CWE-125 project=arena date=2016-10-26
static int slab_find(const struct slab *s, int key)
{
	int lo = 0, hi = s->n;

	while (lo <= hi) {
		int mid = (lo + hi) / 2;
		if (s->keys[mid] == key)
			return mid;
		if (s->keys[mid] < key)
			lo = mid + 1;
		else
			hi = mid - 1;
	}
	return -1;
}

// @sample mem_010 project=arena date=2011-02-28
static void bitset_clear_all(unsigned int *bits, int nbits)
{
	int words = (nbits + 31) / 32;

	while (words > 0) {
		bits[words - 1] = 0;
		words--;
	}
}

// @sample mem_011 project=arena date=2020-04-17
static long heap_parent(long i)
{
	if (i <= 0)
		return -1;
	return (i - 1) / 2;
}

// @sample mem_012 vul CWE-416 project=arena date=2018-01-19
static void cache_evict(struct cache *c, struct entry *e)
{
	list_del(&e->lru);
	free_entry(e);
	c->bytes -= e->size;
	c->count--;
}

// @sample mem_013 project=arena date=2014-07-24
static void heap_sift_down(int *h, int n, int i)
{
	for (;;) {
		int l = 2 * i + 1;
		int m = i;
		int t;
		if (l < n && h[l] > h[m])
			m = l;
		if (l + 1 < n && h[l + 1] > h[m])
			m = l + 1;
		if (m == i)
			break;
		t = h[i];
		h[i] = h[m];
		h[m] = t;
		i = m;
	}
}

// @sample mem_014 project=arena date=2012-12-12
size_t mem_count_byte(const void *p, int c, size_t n)
{
	const unsigned char *s = p;
	size_t k = 0;

	while (n > 0) {
		if (*s == (unsigned char)c)
			k++;
		s++;
		n--;
	}
	return k;
}

// @sample mem_015 vul CWE-131 project=arena date=2017-09-29
static char **split_lines(char *text, int *count)
{
	int n = 1;
	char **lines;
	char *p;

	for (p = text; *p; p++)
		if (*p == '\n')
			n++;
	lines = malloc(n);
	*count = n;
	return lines;
}

// @sample mem_016 project=arena date=2015-12-31
static void stack_grow(struct stack *s)
{
	size_t ncap = s->cap + s->cap / 2 + 16;
	void **nd = realloc(s->items, ncap * sizeof(*nd));

	if (nd != NULL) {
		s->items = nd;
		s->cap = ncap;
	}
}

// @sample mem_017 project=arena date=2021-11-11
static int region_overlap(unsigned long a, unsigned long alen, unsigned long b, unsigned long blen)
{
	unsigned long aend = a + alen;
	unsigned long bend = b + blen;

	if (aend <= b || bend <= a)
		return 0;
	else
		return 1;
}

// @sample mem_018 vul CWE-125 project=arena date=2016-03-23
static int table_get(const struct table *t, int idx, int *out)
{
	if (idx > t->len)
		return -1;
	*out = t->vals[idx];
	return 0;
}

// @sample mem_019 project=arena date=2013-05-05
static void zero_tail(unsigned char *buf, size_t used, size_t cap)
{
	while (used < cap) {
		buf[used] = 0;
		used++;
	}
}

// @sample mem_020 project=arena date=2019-10-31
static int freelist_len(const struct node *n)
{
	int len = 0;

	for (; n != NULL; n = n->next)
		len++;
	return len;
}

// @sample mem_021 vul CWE-401 project=arena date=2018-06-26
static int dup_strings(char **dst, char *const *src, int n)
{
	int i;

	for (i = 0; i < n; i++) {
		dst[i] = strdup(src[i]);
		if (dst[i] == NULL)
			return -1;
	}
	return 0;
}
