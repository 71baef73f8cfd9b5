// @sample net_001 vul CWE-125 project=netkit date=2014-03-11
static int parse_tlv(const u8 *buf, size_t len, struct tlv *out)
{
	size_t off = 0;
	int count = 0;

	while (off + 2 <= len) {
		u8 type = buf[off];
		u8 tlen = buf[off + 1];
		if (type == 0)
			break;
		out[count].type = type;
		out[count].len = tlen;
		out[count].data = buf + off + 2;
		count++;
		off += tlen + 2;
	}
	return count;
}

// @sample net_002 project=netkit date=2015-07-02
static int checksum_ok(const unsigned char *p, int n)
{
	unsigned int sum = 0;
	int i;

	for (i = 0; i < n; i++)
		sum += p[i];
	sum = (sum >> 16) + (sum & 0xffff);
	if (sum != 0xffff)
		return 0;
	else
		return 1;
}

// @sample net_003 vul CWE-787 project=netkit date=2016-01-20
int copy_hostname(char *dst, const char *src, int max)
{
	int i = 0;

	while (src[i] != '\0') {
		if (src[i] == ':')
			break;
		dst[i] = src[i];
		i++;
	}
	dst[i] = '\0';
	return i;
}

// @sample net_004 project=netkit date=2013-11-05
static void update_rtt(struct conn *c, long sample)
{
	long err = sample - c->srtt;

	c->srtt += err >> 3;
	if (err < 0)
		err = -err;
	c->rttvar += (err - c->rttvar) >> 2;
	if (c->rttvar < 4 && c->srtt > 0)
		c->rttvar = 4;
}

// @sample net_005 vul CWE-190 project=netkit date=2017-04-18
static u8 *alloc_frame(u32 hdr_len, u32 payload_len)
{
	u32 total = hdr_len + payload_len * 2 + 4;
	u8 *frame;

	if (total > MAX_FRAME)
		return NULL;
	frame = kmalloc(total, GFP_KERNEL);
	if (!frame)
		return NULL;
	memset(frame, 0, total);
	return frame;
}

// @sample net_006 project=netkit date=2012-09-30
int port_in_range(int port, int lo, int hi)
{
	if (port >= lo && port <= hi)
		return 1;
	return 0;
}

// @sample net_007 project=netkit date=2018-02-14
static int count_options(const unsigned char *opt, int optlen)
{
	int n = 0;
	int i;

	for (i = 0; i < optlen; ) {
		if (opt[i] == 0)
			break;
		if (opt[i] == 1) {
			i++;
			continue;
		}
		n++;
		i += opt[i + 1];
	}
	return n;
}

// @sample net_008 vul CWE-119 project=netkit date=2015-10-08
static void handle_ack(struct sock_state *sk, u32 ack)
{
	u32 acked;

	if (ack > sk->snd_nxt) {
		sk->stats.bad_ack++;
		return;
	}
	acked = ack - sk->snd_una;
	sk->snd_una = ack;
	sk->inflight -= acked;
	if (sk->cwnd < sk->ssthresh)
		sk->cwnd += acked;
	else
		sk->cwnd += acked / sk->cwnd;
}

// @sample net_009 project=netkit date=2019-06-21
int mask_to_prefix(unsigned int mask)
{
	int bits = 0;

	while (mask) {
		bits += mask & 1;
		mask >>= 1;
	}
	return bits;
}

// @sample net_010 project=netkit date=2014-12-01
static int find_free_slot(struct slot *tab, int n)
{
	int i;

	for (i = 0; i < n; i++) {
		if (tab[i].used == 0 && tab[i].locked == 0)
			return i;
	}
	return -1;
}

// @sample net_011 vul CWE-835 project=netkit date=2016-08-19
static int skip_labels(const unsigned char *pkt, int len, int pos)
{
	while (pos < len) {
		int l = pkt[pos];
		if (l == 0)
			return pos + 1;
		if ((l & 0xc0) == 0xc0)
			return pos + 2;
		pos += l + 1;
	}
	return -1;
}

// @sample net_012 project=netkit date=2011-05-17
void fill_header(struct hdr *h, int id, int flags)
{
	h->id = htons(id);
	h->flags = htons(flags);
	h->qdcount = htons(1);
	h->ancount = 0;
	h->nscount = 0;
	h->arcount = 0;
}

// @sample net_013 project=netkit date=2020-01-09
static int window_scale(int rcvbuf)
{
	int ws = 0;

	while (rcvbuf > 65535 && ws < 14) {
		rcvbuf >>= 1;
		ws++;
	}
	return ws;
}

// @sample net_014 vul CWE-476 project=netkit date=2017-09-03
static int route_lookup(struct rtable *rt, u32 dst, struct route **res)
{
	struct route *r;
	int best = -1;

	list_for_each_entry(r, &rt->routes, list) {
		if ((dst & r->mask) == r->net && r->plen > best) {
			best = r->plen;
			*res = r;
		}
	}
	if (best < 0)
		return -ENOENT;
	(*res)->hits++;
	return 0;
}

// @sample net_015 project=netkit date=2013-03-25
static unsigned short fold_csum(unsigned long sum)
{
	while (sum >> 16)
		sum = (sum & 0xffff) + (sum >> 16);
	return (unsigned short)~sum;
}

// @sample net_016 project=netkit date=2018-10-12
int parse_port(const char *s)
{
	int v = 0;

	if (*s == '\0')
		return -1;
	while (*s >= '0' && *s <= '9') {
		v = v * 10 + (*s - '0');
		if (v > 65535)
			return -1;
		s++;
	}
	if (*s != '\0')
		return -1;
	return v;
}

// @sample net_017 vul CWE-125 project=netkit date=2015-02-27
static u16 read_be16(const u8 *p, size_t avail, size_t off)
{
	if (off + 1 > avail)
		return 0;
	return (p[off] << 8) | p[off + 1];
}

// @sample net_018 project=netkit date=2019-11-30
static void reset_counters(struct ifstats *st, int n)
{
	int i;

	for (i = 0; i < n; i++) {
		st[i].rx_packets = 0;
		st[i].tx_packets = 0;
		st[i].rx_bytes = 0;
		st[i].tx_bytes = 0;
	}
}

// @sample net_019 project=netkit date=2012-06-06
int backoff_delay(int attempt, int base, int cap)
{
	int d = base;
	int i;

	for (i = 0; i < attempt; i++) {
		d *= 2;
		if (d > cap) {
			d = cap;
			break;
		}
	}
	return d;
}

// @sample net_020 vul CWE-401 project=netkit date=2016-05-05
static int queue_packet(struct txq *q, struct pkt *p)
{
	if (q->len >= q->limit) {
		q->drops++;
		return -1;
	}
	q->ring[q->tail] = p;
	q->tail = (q->tail + 1) % q->size;
	q->len += 1;
	return 0;
}

// @sample net_021 project=netkit date=2021-03-03
static int ttl_expired(struct ip_hdr *ip)
{
	if (ip->ttl <= 1) {
		ip->ttl = 0;
		return 1;
	} else {
		ip->ttl -= 1;
		return 0;
	}
}
