// @sample lst_001 vul CWE-476 project=containers date=2015-02-02
struct node *list_find(struct node *head, int key)
{
	struct node *n = head;

	while (n->key != key)
		n = n->next;
	return n;
}

// @sample lst_002 project=containers date=2012-03-03
int list_length(const struct node *n)
{
	int len = 0;

	while (n != NULL) {
		len++;
		n = n->next;
	}
	return len;
}

// @sample lst_003 project=containers date=2016-06-06
struct node *list_reverse(struct node *head)
{
	struct node *prev = NULL;

	while (head != NULL) {
		struct node *next = head->next;
		head->next = prev;
		prev = head;
		head = next;
	}
	return prev;
}

// @sample lst_004 vul CWE-416 project=containers date=2017-07-17
void list_remove_all(struct node **head, int key)
{
	struct node *n = *head;

	while (n != NULL) {
		if (n->key == key) {
			unlink_node(head, n);
			free(n);
		}
		n = n->next;
	}
}

// @sample lst_005 project=containers date=2013-04-14
static unsigned int hash_bucket(unsigned int key, unsigned int nbuckets)
{
	unsigned int h = key * 2654435761u;

	return h % nbuckets;
}

// @sample lst_006 project=containers date=2019-01-25
int array_max_index(const int *a, int n)
{
	int best = 0;
	int i;

	if (n <= 0)
		return -1;
	for (i = 1; i < n; i++) {
		if (a[i] > a[best])
			best = i;
	}
	return best;
}

// @sample lst_007 vul CWE-787 project=containers date=2016-11-08
int array_insert(int *a, int *n, int pos, int value)
{
	int i;

	for (i = *n; i > pos; i--)
		a[i] = a[i - 1];
	a[pos] = value;
	*n += 1;
	return 0;
}

// @sample lst_008 project=containers date=2014-12-19
void insertion_sort(int *a, int n)
{
	int i, j;

	for (i = 1; i < n; i++) {
		int v = a[i];
		j = i - 1;
		while (j >= 0 && a[j] > v) {
			a[j + 1] = a[j];
			j--;
		}
		a[j + 1] = v;
	}
}

// @sample lst_009 project=containers date=2011-09-01
int binary_search(const int *a, int n, int key)
{
	int lo = 0;
	int hi = n - 1;

	while (lo <= hi) {
		int mid = lo + (hi - lo) / 2;
		if (a[mid] == key)
			return mid;
		else if (a[mid] < key)
			lo = mid + 1;
		else
			hi = mid - 1;
	}
	return -1;
}

// @sample lst_010 vul CWE-129 project=containers date=2018-08-28
int ring_get(const struct ring *r, int idx)
{
	if (idx < 0)
		return -1;
	return r->items[(r->head + idx) % RING_CAP];
}

// @sample lst_011 project=containers date=2020-12-12
void bubble_sort(int *a, int n)
{
	int i, j, t;

	for (i = 0; i < n - 1; i++) {
		for (j = 0; j < n - 1 - i; j++) {
			if (a[j] > a[j + 1]) {
				t = a[j];
				a[j] = a[j + 1];
				a[j + 1] = t;
			}
		}
	}
}

// @sample lst_012 project=containers date=2013-08-18
static int tree_height(const struct tnode *t)
{
	int hl, hr;

	if (t == NULL)
		return 0;
	hl = tree_height(t->left);
	hr = tree_height(t->right);
	if (hl > hr)
		return hl + 1;
	else
		return hr + 1;
}

// @sample lst_013 vul CWE-674 project=containers date=2017-02-22
static void tree_free(struct tnode *t)
{
	if (t != NULL) {
		tree_free(t->left);
		tree_free(t->right);
		free(t);
	}
}

// @sample lst_014 project=containers date=2015-09-09
int queue_pop(struct queue *q, int *out)
{
	if (q->count == 0)
		return -1;
	*out = q->data[q->front];
	q->front = (q->front + 1) % q->cap;
	q->count -= 1;
	return 0;
}

// @sample lst_015 project=containers date=2012-06-21
void array_fill(int *a, int n, int v)
{
	int *end = a + n;

	while (a < end) {
		*a = v;
		a++;
	}
}

// @sample lst_016 vul CWE-125 project=containers date=2016-04-30
int array_sum_window(const int *a, int n, int start, int w)
{
	int s = 0;
	int i;

	if (start < 0 || w < 0)
		return 0;
	for (i = start; i < start + w; i++)
		s += a[i];
	return s;
}

// @sample lst_017 project=containers date=2019-05-27
static int cmp_int(const void *pa, const void *pb)
{
	int a = *(const int *)pa;
	int b = *(const int *)pb;

	if (a < b)
		return -1;
	if (a > b)
		return 1;
	return 0;
}

// @sample lst_018 project=containers date=2014-10-10
int dedup_sorted(int *a, int n)
{
	int w = 0;
	int r;

	for (r = 0; r < n; r++) {
		if (w == 0 || a[r] != a[w - 1]) {
			a[w] = a[r];
			w += 1;
		}
	}
	return w;
}

// @sample lst_019 vul CWE-122 project=containers date=2018-03-15
int *array_concat(const int *a, int na, const int *b, int nb)
{
	int *out = malloc(na + nb);
	int i;

	for (i = 0; i < na; i++)
		out[i] = a[i];
	for (i = 0; i < nb; i++)
		out[na + i] = b[i];
	return out;
}

// @sample lst_020 project=containers date=2021-06-18
int count_greater(const int *a, int n, int x)
{
	int c = 0;

	while (n > 0) {
		if (a[n - 1] > x)
			c++;
		n -= 1;
	}
	return c;
}

// @sample lst_021 project=containers date=2010-11-30
void matrix_transpose(int *dst, const int *src, int rows, int cols)
{
	int r, c;

	for (r = 0; r < rows; r++)
		for (c = 0; c < cols; c++)
			dst[c * rows + r] = src[r * cols + c];
}
