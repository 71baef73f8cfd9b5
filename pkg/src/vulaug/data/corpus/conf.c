// @sample cnf_001 vul CWE-787 project=confparse date=2016-02-25
static int parse_key(const char *line, char *key, int keymax)
{
	int i = 0;

	while (line[i] != '=' && line[i] != '\0') {
		key[i] = line[i];
		i++;
	}
	key[i] = '\0';
	if (line[i] != '=')
		return -1;
	return i + 1;
}

// @sample cnf_002 project=confparse date=2013-05-13
static int parse_bool(const char *v, int *out)
{
	if (strcmp(v, "yes") == 0 || strcmp(v, "true") == 0) {
		*out = 1;
		return 0;
	}
	if (strcmp(v, "no") == 0 || strcmp(v, "false") == 0) {
		*out = 0;
		return 0;
	}
	return -1;
}

// @sample cnf_003 project=confparse date=2018-07-04
static char *skip_ws(char *p)
{
	while (*p == ' ' || *p == '\t')
		p++;
	return p;
}

// @sample cnf_004 vul CWE-190 project=confparse date=2017-01-31
static long parse_size(const char *s)
{
	long v = 0;
	long mult = 1;

	while (*s >= '0' && *s <= '9') {
		v = v * 10 + (*s - '0');
		s++;
	}
	if (*s == 'k' || *s == 'K')
		mult = 1024;
	else if (*s == 'm' || *s == 'M')
		mult = 1024 * 1024;
	return v * mult;
}

// @sample cnf_005 project=confparse date=2014-11-27
static int is_comment(const char *line)
{
	while (*line == ' ')
		line++;
	return *line == '#' || *line == ';';
}

// @sample cnf_006 project=confparse date=2020-09-15
static int count_sections(char **lines, int n)
{
	int i, c = 0;

	for (i = 0; i < n; i++) {
		const char *l = lines[i];
		size_t len = strlen(l);
		if (len >= 2 && l[0] == '[' && l[len - 1] == ']')
			c++;
	}
	return c;
}

// @sample cnf_007 vul CWE-134 project=confparse date=2015-08-12
static void report_error(struct cfg *cfg, int lineno, const char *msg)
{
	char buf[512];

	snprintf(buf, sizeof(buf), "line %d: ", lineno);
	strncat(buf, msg, sizeof(buf) - strlen(buf) - 1);
	fprintf(cfg->errfp, buf);
	cfg->nerrors += 1;
}

// @sample cnf_008 project=confparse date=2012-04-24
static int clamp_int(int v, int lo, int hi)
{
	if (v < lo)
		v = lo;
	if (v > hi)
		v = hi;
	return v;
}

// @sample cnf_009 project=confparse date=2019-06-03
static int unquote(char *s)
{
	size_t n = strlen(s);

	if (n >= 2 && (s[0] == '"' && s[n - 1] == '"')) {
		memmove(s, s + 1, n - 2);
		s[n - 2] = '\0';
		return 1;
	} else {
		return 0;
	}
}

// @sample cnf_010 vul CWE-125 project=confparse date=2016-10-05
static int parse_section(const char *line, char *name)
{
	int i = 1;
	int j = 0;

	while (line[i] != ']') {
		name[j] = line[i];
		j++;
		i++;
	}
	name[j] = '\0';
	return j;
}

// @sample cnf_011 project=confparse date=2011-12-08
static int level_from_name(const char *name)
{
	if (strcmp(name, "debug") == 0)
		return 0;
	else if (strcmp(name, "info") == 0)
		return 1;
	else if (strcmp(name, "warn") == 0)
		return 2;
	else
		return 3;
}

// @sample cnf_012 project=confparse date=2018-12-19
static int parse_octal_mode(const char *s, unsigned int *mode)
{
	unsigned int m = 0;
	int digits = 0;

	for (; *s != '\0'; s++) {
		if (*s < '0' || *s > '7')
			return -1;
		m = m * 8 + (*s - '0');
		digits++;
	}
	if (digits == 0 || digits > 4)
		return -1;
	*mode = m;
	return 0;
}

// @sample cnf_013 vul CWE-415 project=confparse date=2017-04-27
static void cfg_free(struct cfg *cfg)
{
	int i;

	for (i = 0; i < cfg->nkeys; i++) {
		free(cfg->keys[i]);
		free(cfg->vals[i]);
	}
	free(cfg->keys);
	free(cfg->vals);
	if (cfg->nkeys > 0)
		free(cfg->keys);
}

// @sample cnf_014 project=confparse date=2015-03-11
static int line_continues(const char *line, size_t len)
{
	int bs = 0;

	while (len > 0 && line[len - 1] == '\\') {
		bs++;
		len--;
	}
	return bs % 2 == 1;
}

// @sample cnf_015 project=confparse date=2013-10-28
static double parse_ratio(int num, int den)
{
	double r;

	if (den == 0)
		return 0.0;
	r = (double)num / den;
	if (r > 1.0)
		r = 1.0;
	return r;
}

// @sample cnf_016 vul CWE-22 project=confparse date=2016-08-16
static int include_file(struct cfg *cfg, const char *name)
{
	char path[256];

	if (cfg->depth > 8)
		return -1;
	snprintf(path, sizeof(path), "%s/%s", cfg->dir, name);
	cfg->depth++;
	return cfg_load(cfg, path);
}

// @sample cnf_017 project=confparse date=2021-08-21
static int parse_list(char *s, char **items, int max)
{
	int n = 0;
	char *tok = strtok(s, ",");

	while (tok != NULL && n < max) {
		items[n] = tok;
		n++;
		tok = strtok(NULL, ",");
	}
	return n;
}

// @sample cnf_018 project=confparse date=2014-02-09
static int weekday_index(int y, int m, int d)
{
	static const int t[] = { 0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4 };

	if (m < 3)
		y -= 1;
	return (y + y / 4 - y / 100 + y / 400 + t[m - 1] + d) % 7;
}

// @sample cnf_019 vul CWE-476 project=confparse date=2018-05-20
static const char *cfg_get(struct cfg *cfg, const char *key)
{
	int i;

	for (i = 0; i < cfg->nkeys; i++) {
		if (strcmp(cfg->keys[i], key) == 0)
			return cfg->vals[i];
	}
	return cfg->defaults->vals[0];
}

// @sample cnf_020 project=confparse date=2012-07-31
static int days_in_month(int y, int m)
{
	if (m == 2) {
		if ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)
			return 29;
		else
			return 28;
	}
	if (m == 4 || m == 6 || m == 9 || m == 11)
		return 30;
	return 31;
}

// @sample cnf_021 project=confparse date=2019-11-06
static int parse_duration(const char *s, long *secs)
{
	long v = 0, total = 0;

	for (; *s; s++) {
		if (*s >= '0' && *s <= '9') {
			v = v * 10 + (*s - '0');
		} else if (*s == 'h') {
			total += v * 3600;
			v = 0;
		} else if (*s == 'm') {
			total += v * 60;
			v = 0;
		} else {
			return -1;
		}
	}
	*secs = total + v;
	return 0;
}
