import pytest
from hypothesis import given, strategies as st

from vulaug.syntax import (ERROR, FRAGMENT, UNIT, Edit, OverlappingEdits, ParseError, Span,
                           decode_source, emit, encode_source, fingerprint, parse_unit, try_parse)


def kinds(tree):
    return [n.kind for n in tree.walk()]


def test_minimal_function():
    tree = parse_unit("int f(void){return 0;}")
    fns = tree.functions()
    assert len(fns) == 1 and fns[0]["name"] == "f"
    assert "ReturnStmt" in kinds(tree)


def test_if_condition_is_binary_gt():
    tree = parse_unit("int f(){ if(a>b) x=1; else x=2; }")
    ifs = [n for n in tree.walk() if n.kind == "IfStmt"]
    assert len(ifs) == 1
    cond = ifs[0]["cond"]
    assert (cond.kind, cond.op) == ("BinaryExpr", ">")
    assert ifs[0]["else"] is not None


def test_macro_statement_is_flagged_and_lossless():
    src = "void f(int x)\n{\n\tFOO_MACRO(x);\n\tx++;\n}\n"
    tree = parse_unit(src)
    flagged = [n for n in tree.flagged if n.contains_macro_token]
    assert flagged
    assert any(tree.text(n).startswith("FOO_MACRO") for n in flagged)
    assert emit(src, []) == src
    assert tree.relex_lossless() == src


def test_parse_error_without_function():
    with pytest.raises(ParseError):
        parse_unit("x = 1 + ;")
    assert try_parse("x = 1 + ;") is None


def test_garbage_inside_body_becomes_error_node():
    src = "int f(int a)\n{\n\tint b = a;\n\t@@ ]] weird;\n\treturn b;\n}\n"
    tree = parse_unit(src)
    assert any(n.flags & ERROR for n in tree.flagged)
    assert "ReturnStmt" in kinds(tree)
    assert tree.relex_lossless() == src


def test_unit_mode_sees_every_function():
    src = "static int g;\nint a(void){return g;}\nint main(void){return a();}\n"
    tree = parse_unit(src, UNIT)
    assert [fn["name"] for fn in tree.functions()] == ["a", "main"]


def test_latin1_bytes_round_trip():
    raw = b"int f(void){ return '\xe9'; } /* \xff\x80 */\n"
    src = decode_source(raw)
    tree = parse_unit(src)
    assert encode_source(emit(tree.source, [])) == raw


def test_corpus_is_lossless_and_well_formed(corpus):
    for sample in corpus:
        tree = parse_unit(sample.source, FRAGMENT)
        tree.check_invariants()
        assert tree.relex_lossless() == sample.source, sample.id
        assert emit(sample.source, []) == sample.source


def test_emit_identity():
    assert emit("abc", []) == "abc"


def test_emit_statement_rewrite():
    src = "a+=1;"
    assert emit(src, [Edit.replace(0, 4, "a = a + 1")]) == "a = a + 1;"


@pytest.mark.parametrize("spans", [
    [(0, 3), (2, 4)],
    [(1, 5), (0, 2)],
    [(2, 2), (2, 2)],
])
def test_emit_rejects_overlap(spans):
    with pytest.raises(OverlappingEdits):
        emit("abcdef", [Edit.replace(a, b, "x") for a, b in spans])


def test_emit_allows_touching_edits():
    assert emit("abcd", [Edit.replace(0, 2, "X"), Edit.replace(2, 4, "Y")]) == "XY"


def test_span_validation():
    with pytest.raises(ValueError):
        Span(3, 1)
    assert Span(0, 4).contains(Span(1, 2))
    assert not Span(0, 2).intersects(Span(2, 3))


@st.composite
def disjoint_edits(draw):
    src = draw(st.text(alphabet="abc xyz;{}()", min_size=1, max_size=60))
    cuts = sorted(draw(st.lists(st.integers(0, len(src)), min_size=0, max_size=8)))
    edits = []
    for a, b in zip(cuts[::2], cuts[1::2]):
        if edits and a <= edits[-1].span.end:
            continue
        edits.append(Edit.replace(a, b, draw(st.text(alphabet="QRS", max_size=5))))
    return src, edits


@given(disjoint_edits())
def test_batch_emit_matches_descending_sequential(case):
    src, edits = case
    expect = src
    for e in sorted(edits, key=lambda e: e.span.start, reverse=True):
        expect = expect[:e.span.start] + e.replacement + expect[e.span.end:]
    assert emit(src, edits) == expect
    assert emit(src, list(reversed(edits))) == expect


@given(disjoint_edits())
def test_bytes_outside_edits_untouched(case):
    src, edits = case
    out = emit(src, edits)
    if edits:
        first, last = edits[0], edits[-1]
        assert out.startswith(src[:first.span.start])
        assert out.endswith(src[last.span.end:])


@pytest.mark.parametrize("a,b,equal", [
    ("a = 1;", "a=1 ;", True),
    ("a = 1;", "a = 2;", False),
    ("a = 1; // note", "a = 1;", True),
    ("a = /* x */ 1;", "a = 1;", True),
    ("a = b;", "a = c;", False),
    ("x = a+ +b;", "x = a++b;", False),
])
def test_fingerprint_examples(a, b, equal):
    assert (fingerprint(a) == fingerprint(b)) is equal


def test_fingerprint_stable_across_threads(corpus):
    from concurrent.futures import ThreadPoolExecutor
    srcs = [s.source for s in corpus[:40]]
    serial = [fingerprint(s) for s in srcs]
    with ThreadPoolExecutor(4) as pool:
        assert list(pool.map(fingerprint, srcs)) == serial
