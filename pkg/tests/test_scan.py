import random

import pytest
from hypothesis import given, strategies as st

from vulaug import _scan, scan

try:
    from vulaug import _cscan
except ImportError:
    _cscan = None

needs_ext = pytest.mark.skipif(_cscan is None, reason="compiled kernel not built")

C_ALPHABET = "ab_x1 0.9e+\t\n\r\\\"'/*#<>=!&|^~?:;,(){}[]%-Lu\x80\xff@$`"
c_text = st.text(alphabet=C_ALPHABET, max_size=120)


@needs_ext
@given(c_text)
def test_backends_tokenize_identically(src):
    assert _cscan.tokenize(src) == _scan.tokenize(src)
    assert _cscan.tokenize(src, False) == _scan.tokenize(src, False)


@needs_ext
@given(c_text)
def test_backends_fingerprint_identically(src):
    assert _cscan.normalized_tokens(src) == _scan.normalized_tokens(src)
    assert _cscan.fingerprint(src) == _scan.fingerprint(src)


@given(c_text)
def test_tokens_cover_source_in_order(src):
    kinds, starts, ends = scan.tokenize(src)
    prev = 0
    for s, e in zip(starts, ends):
        assert prev <= s < e <= len(src)
        assert src[prev:s].strip() == "" or "/" in src[prev:s]  # only trivia in gaps
        prev = e


def test_backend_selected():
    assert scan.BACKEND in ("cython", "python")


@pytest.mark.parametrize("a,b,equal", [
    ("a = 1;", "a=1 ;", True),
    ("a = 1;", "a = 2;", False),
    ("x+=1; // note", "x += 1;", True),
    ("x /* c */ + y", "x+y", True),
    ("a + +b", "a ++b", False),
    ("#define A 1\nint x;", "#  define A   1\nint x;", True),
])
def test_fingerprint_examples(a, b, equal):
    assert (scan.fingerprint(a) == scan.fingerprint(b)) is equal


def _perturb(tokens, rng):
    out = []
    for tok in tokens:
        out.append(tok)
        out.append(rng.choice([" ", "  ", "\t", "\n", " /* z */ ", "\n  ", " // c\n"]))
    return "".join(out)


def test_whitespace_perturbations_share_one_fingerprint(listing):
    # perturbation harness: every rendering of the same token sequence
    kinds, starts, ends = scan.tokenize(listing.source, pp=False)
    tokens = [listing.source[s:e] for s, e in zip(starts, ends)]
    rng = random.Random(1234)
    prints = {scan.fingerprint(_perturb(tokens, rng)) for _ in range(1000)}
    assert prints == {scan.fingerprint(listing.source)}


def test_fingerprint_is_64_bit_and_stable():
    fp = scan.fingerprint("int f(void){return 0;}")
    assert 0 <= fp < 2 ** 64
    assert fp == scan.fingerprint("int f(void){return 0;}")


def test_unknown_bytes_lex_as_single_tokens():
    kinds, starts, ends = scan.tokenize("a \x01 b")
    assert len(kinds) == 3
    assert kinds[1] == scan.OTHER
