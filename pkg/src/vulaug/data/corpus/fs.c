// @sample fs_001 vul CWE-22 project=fsutil date=2015-09-17
int build_path(char *out, size_t outlen, const char *root, const char *name)
{
	size_t rl = strlen(root);
	size_t nl = strlen(name);

	if (rl + nl + 2 > outlen)
		return -1;
	memcpy(out, root, rl);
	out[rl] = '/';
	memcpy(out + rl + 1, name, nl + 1);
	return 0;
}

// @sample fs_002 project=fsutil date=2013-04-22
static int count_entries(DIR *d)
{
	struct dirent *ent;
	int n = 0;

	while ((ent = readdir(d)) != NULL) {
		if (ent->d_name[0] == '.')
			continue;
		n++;
	}
	return n;
}

// @sample fs_003 vul CWE-362 project=fsutil date=2016-06-28
int safe_unlink(const char *path)
{
	struct stat st;

	if (lstat(path, &st) < 0)
		return -1;
	if (S_ISLNK(st.st_mode))
		return -1;
	return unlink(path);
}

// @sample fs_004 project=fsutil date=2018-08-18
static u32 block_of(struct inode *inode, u64 offset)
{
	u32 bsize = inode->i_sb->s_blocksize;
	u32 idx = offset / bsize;

	if (idx < EXT_NDIR_BLOCKS)
		return inode->i_data[idx];
	idx -= EXT_NDIR_BLOCKS;
	if (idx < bsize / 4)
		return read_indirect(inode, inode->i_data[EXT_IND_BLOCK], idx);
	return 0;
}

// @sample fs_005 vul CWE-787 project=fsutil date=2017-02-09
static int read_name(struct buf *b, char *name, int max)
{
	int len = buf_get_u8(b);
	int i;

	for (i = 0; i < len; i++)
		name[i] = buf_get_u8(b);
	name[len] = '\0';
	return len;
}

// @sample fs_006 project=fsutil date=2012-07-14
static int mode_to_type(unsigned int mode)
{
	if ((mode & 0170000) == 0040000)
		return DT_DIR;
	else if ((mode & 0170000) == 0100000)
		return DT_REG;
	else
		return DT_UNKNOWN;
}

// @sample fs_007 project=fsutil date=2014-01-31
static void bitmap_set_range(unsigned long *map, int start, int len)
{
	int i;

	for (i = start; i < start + len; i++)
		map[i / BITS_PER_LONG] |= 1UL << (i % BITS_PER_LONG);
}

// @sample fs_008 vul CWE-416 project=fsutil date=2016-10-10
static void put_inode(struct inode *inode)
{
	inode->i_count -= 1;
	if (inode->i_count == 0) {
		evict(inode);
		kfree(inode);
	}
	inode->i_state |= I_DIRTY;
}

// @sample fs_009 project=fsutil date=2019-05-15
static int find_zero_bit(const unsigned char *map, int nbits)
{
	int i;

	for (i = 0; i < nbits; i++) {
		if ((map[i >> 3] & (1 << (i & 7))) == 0)
			return i;
	}
	return -1;
}

// @sample fs_010 project=fsutil date=2011-03-03
long file_size(FILE *fp)
{
	long cur, end;

	cur = ftell(fp);
	if (fseek(fp, 0, SEEK_END) != 0)
		return -1;
	end = ftell(fp);
	fseek(fp, cur, SEEK_SET);
	return end;
}

// @sample fs_011 vul CWE-770 project=fsutil date=2017-08-24
static int load_xattrs(struct inode *inode, char **out)
{
	int size = inode->xattr_size;
	char *buf;

	buf = kmalloc(size + 1, GFP_NOFS);
	if (buf == NULL)
		return -ENOMEM;
	if (read_xattr_block(inode, buf, size) != size) {
		kfree(buf);
		return -EIO;
	}
	buf[size] = 0;
	*out = buf;
	return size;
}

// @sample fs_012 project=fsutil date=2015-01-01
static int path_depth(const char *p)
{
	int depth = 0;

	for (; *p; p++)
		if (*p == '/' && p[1] != '/' && p[1] != '\0')
			depth++;
	return depth;
}

// @sample fs_013 project=fsutil date=2020-10-20
static void journal_advance(struct journal *j, unsigned int blocks)
{
	j->head += blocks;
	if (j->head >= j->last)
		j->head -= j->last - j->first;
	j->free -= blocks;
}

// @sample fs_014 vul CWE-125 project=fsutil date=2018-04-14
static int dir_lookup(const u8 *blk, int bsize, const char *name, int nlen)
{
	int off = 0;

	while (off < bsize) {
		const struct dirent2 *de = (const void *)(blk + off);
		if (de->name_len == nlen && memcmp(de->name, name, nlen) == 0)
			return de->inode;
		off += de->rec_len;
	}
	return 0;
}

// @sample fs_015 project=fsutil date=2012-02-02
int is_abs_path(const char *p)
{
	if (p[0] == '/')
		return 1;
	if (p[0] != '\0' && p[1] == ':' && p[2] == '\\')
		return 1;
	return 0;
}

// @sample fs_016 project=fsutil date=2013-09-09
static unsigned int blocks_for(unsigned long long bytes, unsigned int bsize)
{
	unsigned long long n = bytes + bsize - 1;

	n /= bsize;
	if (n > UINT_MAX)
		return UINT_MAX;
	return (unsigned int)n;
}

// @sample fs_017 vul CWE-200 project=fsutil date=2016-11-29
static int fill_stat(struct kstat *ks, struct user_stat __user *ustat)
{
	struct user_stat tmp;

	tmp.dev = ks->dev;
	tmp.ino = ks->ino;
	tmp.mode = ks->mode;
	tmp.size = ks->size;
	if (copy_to_user(ustat, &tmp, sizeof(tmp)))
		return -EFAULT;
	return 0;
}

// @sample fs_018 project=fsutil date=2021-05-05
static int strip_trailing_slashes(char *path)
{
	int n = strlen(path);

	while (n > 1 && path[n - 1] == '/') {
		path[n - 1] = '\0';
		n--;
	}
	return n;
}

// @sample fs_019 project=fsutil date=2014-11-19
static int cluster_chain_len(const u32 *fat, u32 start, u32 max)
{
	u32 c = start;
	int len = 0;

	while (c >= 2 && c < max) {
		c = fat[c];
		len++;
		if (len > max)
			return -1;
	}
	return len;
}

// @sample fs_020 vul CWE-59 project=fsutil date=2017-12-24
int open_log(const char *dir)
{
	char path[PATH_MAX];
	int fd;

	snprintf(path, sizeof(path), "%s/app.log", dir);
	fd = open(path, O_WRONLY | O_CREAT | O_APPEND, 0644);
	if (fd < 0)
		return -errno;
	return fd;
}

// @sample fs_021 project=fsutil date=2010-06-16
static int timestamps_equal(const struct timespec *a, const struct timespec *b)
{
	if (a->tv_sec != b->tv_sec)
		return 0;
	else
		return a->tv_nsec == b->tv_nsec;
}
