# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled C scanner; token-for-token twin of ``vulaug._scan``."""

import hashlib

DEF K_IDENT = 0
DEF K_NUMBER = 1
DEF K_STRING = 2
DEF K_CHAR = 3
DEF K_PUNCT = 4
DEF K_PP = 5
DEF K_OTHER = 6

cdef inline bint _is_ident_start(Py_UCS4 c):
    return (c >= u'a' and c <= u'z') or (c >= u'A' and c <= u'Z') or c == u'_' or c == u'$'

cdef inline bint _is_digit(Py_UCS4 c):
    return c >= u'0' and c <= u'9'

cdef inline bint _is_ident_char(Py_UCS4 c):
    return _is_ident_start(c) or _is_digit(c)

cdef inline bint _is_space(Py_UCS4 c):
    return c == u' ' or c == u'\t' or c == u'\r' or c == u'\n' or c == u'\f' or c == u'\v'

cdef inline bint _is_punct1(Py_UCS4 c):
    return (c == u'[' or c == u']' or c == u'(' or c == u')' or c == u'{' or c == u'}'
            or c == u'.' or c == u',' or c == u';' or c == u':' or c == u'?' or c == u'~'
            or c == u'!' or c == u'%' or c == u'^' or c == u'&' or c == u'|' or c == u'*' or c == u'+'
            or c == u'-' or c == u'/' or c == u'<' or c == u'>' or c == u'=' or c == u'#')

cdef Py_ssize_t _punct_len(str src, Py_ssize_t i, Py_ssize_t n):
    cdef Py_UCS4 a = src[i]
    cdef Py_UCS4 b = src[i + 1] if i + 1 < n else 0
    cdef Py_UCS4 c = src[i + 2] if i + 2 < n else 0
    if (a == u'>' and b == u'>' and c == u'=') or (a == u'<' and b == u'<' and c == u'='):
        return 3
    if a == u'.' and b == u'.' and c == u'.':
        return 3
    if b == u'=' and (a == u'*' or a == u'/' or a == u'%' or a == u'+' or a == u'-'
                      or a == u'&' or a == u'^' or a == u'|' or a == u'<' or a == u'>'
                      or a == u'=' or a == u'!'):
        return 2
    if ((a == u'-' and b == u'>') or (a == u'+' and b == u'+') or (a == u'-' and b == u'-')
            or (a == u'<' and b == u'<') or (a == u'>' and b == u'>')
            or (a == u'&' and b == u'&') or (a == u'|' and b == u'|')
            or (a == u'#' and b == u'#') or (a == u':' and b == u':')):
        return 2
    if _is_punct1(a):
        return 1
    return 0

cdef Py_ssize_t _quoted_end(str src, Py_ssize_t i, Py_ssize_t n, Py_UCS4 q):
    # i points just past the opening quote
    cdef Py_UCS4 c
    while i < n:
        c = src[i]
        if c == q:
            return i + 1
        if c == u'\n':
            return i
        if c == u'\\':
            if i + 1 < n and src[i + 1] != u'\n':
                i += 2
                continue
            return i
        i += 1
    return i

cdef Py_ssize_t _directive_end(str src, Py_ssize_t i, Py_ssize_t n):
    cdef Py_UCS4 c
    cdef Py_ssize_t j
    while i < n:
        c = src[i]
        if c == u'\n':
            return i
        if c == u'\\' and i + 1 < n and src[i + 1] == u'\n':
            i += 2
        elif c == u'\\' and i + 2 < n and src[i + 1] == u'\r' and src[i + 2] == u'\n':
            i += 3
        elif c == u'/' and i + 1 < n and src[i + 1] == u'*':
            j = src.find(u'*/', i + 2)
            i = n if j < 0 else j + 2
        elif c == u'/' and i + 1 < n and src[i + 1] == u'/':
            j = src.find(u'\n', i)
            return n if j < 0 else j
        else:
            i += 1
    return n


def tokenize(str src, bint pp=True):
    cdef list kinds = []
    cdef list starts = []
    cdef list ends = []
    cdef Py_ssize_t n = len(src)
    cdef Py_ssize_t i = 0, j, k
    cdef Py_UCS4 c, d
    cdef bint line_start = True
    cdef int kind
    while i < n:
        c = src[i]
        d = src[i + 1] if i + 1 < n else 0
        if _is_space(c):
            if c == u'\n':
                line_start = True
            i += 1
            continue
        if c == u'\\' and d == u'\n':
            line_start = True
            i += 2
            continue
        if c == u'\\' and d == u'\r' and i + 2 < n and src[i + 2] == u'\n':
            line_start = True
            i += 3
            continue
        if c == u'/' and d == u'/':
            while i < n and src[i] != u'\n':
                i += 1
            continue
        if c == u'/' and d == u'*':
            j = src.find(u'*/', i + 2)
            i = n if j < 0 else j + 2
            continue
        j = i
        # optional encoding prefix on string and character literals
        if c == u'u' and d == u'8' and i + 2 < n and (src[i + 2] == u'"' or src[i + 2] == u"'"):
            j = i + 2
        elif (c == u'u' or c == u'U' or c == u'L') and (d == u'"' or d == u"'"):
            j = i + 1
        c = src[j]
        if c == u'"' or c == u"'":
            k = _quoted_end(src, j + 1, n, c)
            kind = K_STRING if c == u'"' else K_CHAR
        elif _is_ident_start(c):
            k = i + 1
            while k < n and _is_ident_char(src[k]):
                k += 1
            kind = K_IDENT
        elif _is_digit(c) or (c == u'.' and i + 1 < n and _is_digit(src[i + 1])):
            k = i + 1
            while k < n:
                d = src[k]
                if (d == u'e' or d == u'E' or d == u'p' or d == u'P') and k + 1 < n and (src[k + 1] == u'+' or src[k + 1] == u'-'):
                    k += 2
                elif _is_ident_char(d) or d == u'.':
                    k += 1
                else:
                    break
            kind = K_NUMBER
        else:
            k = _punct_len(src, i, n)
            if k:
                if pp and line_start and k == 1 and c == u'#':
                    k = _directive_end(src, i + 1, n)
                    kind = K_PP
                else:
                    k = i + k
                    kind = K_PUNCT
            else:
                k = i + 1
                kind = K_OTHER
        kinds.append(kind)
        starts.append(i)
        ends.append(k)
        line_start = False
        i = k
    return kinds, starts, ends


def normalized_tokens(str src):
    cdef list kinds, starts, ends, out = []
    cdef Py_ssize_t idx, a, b
    kinds, starts, ends = tokenize(src)
    for idx in range(len(kinds)):
        a = starts[idx]
        b = ends[idx]
        if kinds[idx] == K_PP:
            out.append(u"#")
            body = src[a + 1:b]
            _, bs, be = tokenize(body, False)
            for a, b in zip(bs, be):
                out.append(body[a:b])
        else:
            out.append(src[a:b])
    return out


def fingerprint(str src):
    data = u" ".join(normalized_tokens(src)).encode("utf-8", "surrogatepass")
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "big")
