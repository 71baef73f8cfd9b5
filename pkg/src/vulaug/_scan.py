"""Pure-Python C scanner.

Reference implementation of the scanning kernel. ``vulaug.scan`` picks the
compiled twin (``_cscan``) when it is importable; both must produce identical
token streams and fingerprints.
"""

import hashlib
import re

IDENT, NUMBER, STRING, CHAR, PUNCT, PP, OTHER = range(7)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n\f\v]+|\\\r?\n)
  | (?P<lc>//[^\n]*)
  | (?P<bc>/\*(?s:.*?)(?:\*/|\Z))
  | (?P<str>(?:u8|[uUL])?"(?:[^"\\\n]|\\.)*"?)
  | (?P<chr>(?:u8|[uUL])?'(?:[^'\\\n]|\\.)*'?)
  | (?P<id>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<num>\.?[0-9](?:[eEpP][+-]|[0-9A-Za-z_.$])*)
  | (?P<punct>>>=|<<=|\.\.\.|->|\+\+|--|<<|>>|<=|>=|==|!=|&&|\|\||[*/%+\-&^|]=|\#\#|::
               |[\]\[(){}.,;:?~!%^&|*+\-/<>=\#])
  | (?P<other>(?s:.))
    """,
    re.VERBOSE,
)

_GROUP_KIND = {
    "str": STRING,
    "chr": CHAR,
    "id": IDENT,
    "num": NUMBER,
    "punct": PUNCT,
    "other": OTHER,
}


def _directive_end(src, i):
    n = len(src)
    while i < n:
        c = src[i]
        if c == "\n":
            return i
        if c == "\\" and i + 1 < n and src[i + 1] == "\n":
            i += 2
        elif c == "\\" and i + 2 < n and src[i + 1] == "\r" and src[i + 2] == "\n":
            i += 3
        elif c == "/" and i + 1 < n and src[i + 1] == "*":
            j = src.find("*/", i + 2)
            i = n if j < 0 else j + 2
        elif c == "/" and i + 1 < n and src[i + 1] == "/":
            j = src.find("\n", i)
            return n if j < 0 else j
        else:
            i += 1
    return n


def tokenize(src, pp=True):
    """Split ``src`` into tokens, dropping whitespace and comments.

    Returns three parallel lists ``(kinds, starts, ends)``. With ``pp`` a ``#``
    that opens a line swallows the whole directive (continuations included)
    as a single ``PP`` token.
    """
    kinds, starts, ends = [], [], []
    pos = 0
    n = len(src)
    line_start = True
    match = _TOKEN_RE.match
    while pos < n:
        m = match(src, pos)
        group = m.lastgroup
        end = m.end()
        if group == "ws":
            if "\n" in m.group():
                line_start = True
        elif group == "lc" or group == "bc":
            pass
        elif pp and line_start and src[pos] == "#" and group == "punct" and end == pos + 1:
            end = _directive_end(src, pos + 1)
            kinds.append(PP)
            starts.append(pos)
            ends.append(end)
            line_start = False
        else:
            kinds.append(_GROUP_KIND[group])
            starts.append(pos)
            ends.append(end)
            line_start = False
        pos = end
    return kinds, starts, ends


def normalized_tokens(src):
    kinds, starts, ends = tokenize(src)
    out = []
    for kind, s, e in zip(kinds, starts, ends):
        if kind == PP:
            out.append("#")
            body = src[s + 1:e]
            _, bs, be = tokenize(body, pp=False)
            out.extend(body[a:b] for a, b in zip(bs, be))
        else:
            out.append(src[s:e])
    return out


def fingerprint(src):
    """64-bit digest of the token sequence with whitespace and comments removed."""
    data = " ".join(normalized_tokens(src)).encode("utf-8", "surrogatepass")
    return int.from_bytes(hashlib.blake2b(data, digest_size=8).digest(), "big")
