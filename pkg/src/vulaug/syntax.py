"""Lossless concrete syntax trees for C functions.

Sources are plain ``str`` objects. Byte-oriented data is decoded as latin-1
(see :func:`decode_source`), which maps every byte to exactly one code point,
so string offsets are byte offsets and undecodable bytes round-trip verbatim.

Nodes cover token ranges; whitespace, comments and line continuations live in
the gaps between tokens, so re-emitting never has to reconstruct anything.
Regions the parser cannot analyze become opaque leaves flagged with
``ERROR`` or ``MACRO`` instead of failing the parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import scan
from .scan import CHAR, IDENT, NUMBER, PP, PUNCT, STRING

MACRO = 1
ERROR = 2

FRAGMENT = "function-fragment"
UNIT = "translation-unit"


class ParseError(ValueError):
    """No function definition could be recognized in the source."""


class OverlappingEdits(ValueError):
    pass


def decode_source(data: bytes) -> str:
    return data.decode("latin-1")


def encode_source(src: str) -> bytes:
    return src.encode("latin-1")


@dataclass(frozen=True, order=True)
class Span:
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"invalid span {self.start}:{self.end}")

    def intersects(self, other: Span) -> bool:
        return self.start < other.end and other.start < self.end

    def contains(self, other: Span) -> bool:
        return self.start <= other.start and other.end <= self.end


@dataclass(frozen=True)
class Edit:
    span: Span
    replacement: str

    @classmethod
    def replace(cls, start: int, end: int, text: str) -> Edit:
        return cls(Span(start, end), text)


@dataclass(frozen=True)
class TypeInfo:
    """Declared type of one declarator, as far as a syntactic reading gets."""

    specs: tuple[str, ...]
    spec_text: str
    stars: int = 0
    arrays: int = 0
    complex: bool = False
    volatile: bool = False
    storage: frozenset = frozenset()


class Node:
    __slots__ = ("id", "kind", "op", "start", "end", "t0", "t1", "children",
                 "fields", "flags", "parent")

    def __init__(self, kind, start, end, t0, t1, children=(), op=None, fields=None, flags=0):
        self.id = -1
        self.kind = kind
        self.op = op
        self.start = start
        self.end = end
        self.t0 = t0
        self.t1 = t1
        self.children = tuple(c for c in children if c is not None)
        self.fields = fields or {}
        self.flags = flags
        self.parent = None

    @property
    def span(self) -> Span:
        return Span(self.start, self.end)

    @property
    def label(self) -> str:
        return f"{self.kind}:{self.op}" if self.op else self.kind

    @property
    def contains_macro_token(self) -> bool:
        return bool(self.flags & MACRO)

    @property
    def contains_error(self) -> bool:
        return bool(self.flags & ERROR)

    def __getitem__(self, name):
        return self.fields.get(name)

    def walk(self) -> Iterator[Node]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def __repr__(self):
        return f"<{self.label} {self.start}:{self.end}>"


class SyntaxTree:
    def __init__(self, source, root, nodes, kinds, starts, ends, texts, mode):
        self.source = source
        self.root = root
        self.nodes = nodes
        self.kinds = kinds
        self.starts = starts
        self.ends = ends
        self.texts = texts
        self.mode = mode
        self._identifiers = None
        self._flagged = None

    def text(self, node: Node) -> str:
        return self.source[node.start:node.end]

    def walk(self) -> Iterator[Node]:
        return self.root.walk()

    def functions(self) -> list[Node]:
        return [n for n in self.walk() if n.kind == "FunctionDef"]

    def kind_sequence(self) -> tuple[str, ...]:
        return tuple(n.label for n in self.walk())

    def leaves(self) -> list[Node]:
        return [n for n in self.walk() if not n.children]

    @property
    def identifiers(self) -> frozenset:
        if self._identifiers is None:
            self._identifiers = frozenset(
                t for k, t in zip(self.kinds, self.texts) if k == IDENT)
        return self._identifiers

    @property
    def flagged(self) -> list[Node]:
        """Nodes carrying a MACRO or ERROR flag, in document order."""
        if self._flagged is None:
            self._flagged = [n for n in self.walk() if n.flags]
        return self._flagged

    def line_of(self, offset: int) -> int:
        return self.source.count("\n", 0, offset) + 1

    def check_invariants(self) -> None:
        """Assert span containment and sibling disjointness for every node."""
        n = len(self.source)
        for node in self.walk():
            assert 0 <= node.start <= node.end <= n, node
            prev = node.start
            for child in node.children:
                assert child.parent is node, (node, child)
                assert node.start <= child.start and child.end <= node.end, (node, child)
                assert child.start >= prev, (node, child)
                prev = child.end

    def relex_lossless(self) -> str:
        """Rebuild the source from leaf spans and the gap bytes between them."""
        out = []
        pos = 0
        for leaf in self.leaves():
            out.append(self.source[pos:leaf.start])
            out.append(self.source[leaf.start:leaf.end])
            pos = leaf.end
        out.append(self.source[pos:])
        return "".join(out)


def emit(src: str, edits: Sequence[Edit]) -> str:
    """Apply non-overlapping span replacements to ``src``."""
    if not edits:
        return src
    ordered = sorted(edits, key=lambda e: (e.span.start, e.span.end))
    for a, b in zip(ordered, ordered[1:]):
        if a.span.end > b.span.start or (a.span == b.span and a.span.start == a.span.end):
            raise OverlappingEdits(f"edits {a.span} and {b.span} overlap")
    if ordered[-1].span.end > len(src):
        raise ValueError("edit span past end of source")
    out = []
    pos = 0
    for e in ordered:
        out.append(src[pos:e.span.start])
        out.append(e.replacement)
        pos = e.span.end
    out.append(src[pos:])
    return "".join(out)


def fingerprint(src: str) -> int:
    return scan.fingerprint(src)


# --- grammar tables ------------------------------------------------------

BINARY_PREC = {
    "*": 10, "/": 10, "%": 10,
    "+": 9, "-": 9,
    "<<": 8, ">>": 8,
    "<": 7, ">": 7, "<=": 7, ">=": 7,
    "==": 6, "!=": 6,
    "&": 5, "^": 4, "|": 3, "&&": 2, "||": 1,
}
ASSIGN_OPS = frozenset(["=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", "&=", "^=", "|="])

TYPE_WORDS = frozenset("""
void char short int long float double signed unsigned _Bool _Complex _Imaginary
__int128 __signed__ __signed bool
""".split())
QUALIFIERS = frozenset("""
const volatile restrict __restrict __restrict__ __const __const__ __volatile__
_Atomic __extension__
""".split())
STORAGE = frozenset("""
static extern register auto typedef inline __inline __inline__ _Thread_local
__thread _Noreturn
""".split())
TAG_WORDS = frozenset(["struct", "union", "enum"])
ATTRIBUTE_WORDS = frozenset(["__attribute__", "__attribute", "__declspec", "_Alignas",
                             "alignas", "__aligned"])
DECL_START = TYPE_WORDS | QUALIFIERS | STORAGE | TAG_WORDS | frozenset(["_Static_assert"])
STMT_KEYWORDS = frozenset("""
if else while do for switch case default return break continue goto sizeof
_Alignof alignof
""".split())
KNOWN_TYPEDEFS = frozenset("""
size_t ssize_t ptrdiff_t intptr_t uintptr_t intmax_t uintmax_t off_t off64_t
time_t clock_t pid_t uid_t gid_t mode_t dev_t ino_t socklen_t wchar_t wint_t
int8_t int16_t int32_t int64_t uint8_t uint16_t uint32_t uint64_t
u_int8_t u_int16_t u_int32_t u_int64_t u_char u_short u_int u_long
u8 u16 u32 u64 s8 s16 s32 s64 __u8 __u16 __u32 __u64 __s8 __s16 __s32 __s64
__le16 __le32 __le64 __be16 __be32 __be64 gfp_t loff_t
FILE va_list jmp_buf sig_atomic_t fd_set
gint guint gchar guchar gboolean gsize gssize gpointer gconstpointer
guint8 guint16 guint32 guint64 gint8 gint16 gint32 gint64
BYTE WORD DWORD BOOL UINT ULONG LONG
""".split())

_MACRO_NAME = re.compile(r"[A-Z_][A-Z0-9_]*\Z")


def looks_like_macro(name: str) -> bool:
    return len(name) > 1 and bool(_MACRO_NAME.match(name)) and any(c.isalpha() for c in name)


class _Fail(Exception):
    pass


_OPEN = {"(": ")", "[": "]", "{": "}"}


class _Parser:
    def __init__(self, src, kinds, starts, ends):
        self.src = src
        self.kinds = kinds
        self.starts = starts
        self.ends = ends
        self.texts = [src[s:e] for s, e in zip(starts, ends)]
        self.n = len(kinds)
        self.pos = 0
        self.nodes = []
        self.typedefs = set(KNOWN_TYPEDEFS)

    # -- token helpers --

    def peek(self, k=0):
        i = self.pos + k
        return self.texts[i] if i < self.n else ""

    def kind(self, k=0):
        i = self.pos + k
        return self.kinds[i] if i < self.n else -1

    def expect(self, text):
        if self.pos < self.n and self.texts[self.pos] == text:
            self.pos += 1
            return self.pos - 1
        raise _Fail(text)

    def match_close(self, i):
        """Index of the bracket closing the one at ``i`` (or ``n`` if unbalanced)."""
        texts = self.texts
        stack = []
        while i < self.n:
            t = texts[i]
            if t in _OPEN:
                stack.append(_OPEN[t])
            elif t in (")", "]", "}"):
                if not stack or stack[-1] != t:
                    return self.n
                stack.pop()
                if not stack:
                    return i
            i += 1
        return self.n

    def newline_before(self, i):
        if i <= 0 or i >= self.n:
            return True
        return "\n" in self.src[self.ends[i - 1]:self.starts[i]]

    def make(self, kind, t0, t1, children=(), op=None, flags=0, **fields):
        if t1 <= t0:
            raise _Fail("empty node")
        node = Node(kind, self.starts[t0], self.ends[t1 - 1], t0, t1, children, op, fields, flags)
        node.id = len(self.nodes)
        self.nodes.append(node)
        for c in node.children:
            c.parent = node
        return node

    # -- top level --

    def parse_unit(self):
        items = []
        while self.pos < self.n:
            items.append(self.top_item())
        return items

    def top_item(self):
        p = self.pos
        t = self.texts[p]
        if self.kinds[p] == PP:
            self.pos += 1
            return self.make("PPDirective", p, p + 1, flags=MACRO)
        if t == ";":
            self.pos += 1
            return self.make("NullStmt", p, p + 1)
        brace = self.function_header_end(p)
        if brace is not None:
            try:
                return self.function_def(p, brace)
            except _Fail:
                self.pos = p
        try:
            node = self.declaration()
            if node is not None:
                return node
        except _Fail:
            pass
        self.pos = p
        return self.recover(p, top=True)

    def function_header_end(self, i):
        texts, kinds = self.texts, self.kinds
        saw_params = False
        knr = False
        last = None
        while i < self.n:
            t = texts[i]
            if kinds[i] == PP:
                return None
            if t == "(":
                j = self.match_close(i)
                if j >= self.n:
                    return None
                if not saw_params and i > 0 and kinds[i - 1] == IDENT:
                    saw_params = True
                    inner = texts[i + 1:j]
                    knr = bool(inner) and inner != ["void"] and all(
                        (x == ",") if k % 2 else (kinds[i + 1 + k] == IDENT and x not in DECL_START)
                        for k, x in enumerate(inner))
                last = ")"
                i = j + 1
                continue
            if t == "[":
                i = self.match_close(i) + 1
                last = "]"
                continue
            if t == "=":
                return None
            if t == ";":
                if not (saw_params and knr):
                    return None
            if t == "{":
                if saw_params and last is not None and (last in (")", ";") or kinds[i - 1] == IDENT):
                    return i
                return None
            if t == "}":
                return None
            last = t
            i += 1
        return None

    def function_def(self, p, brace):
        header = self.make("FunctionHeader", p, brace)
        name, params = self.function_params(p, brace)
        self.pos = brace
        body = self.compound()
        return self.make("FunctionDef", p, self.pos, [header, body], name=name,
                         params=params, body=body)

    def function_params(self, p, brace):
        texts, kinds = self.texts, self.kinds
        name = None
        params = {}
        i = p
        while i < brace:
            if texts[i] == "(" and i > p and kinds[i - 1] == IDENT and name is None:
                name = texts[i - 1]
                j = self.match_close(i)
                seg_start = i + 1
                depth = 0
                for k in range(i + 1, j + 1):
                    t = texts[k]
                    if t in ("(", "[", "{"):
                        depth += 1
                    elif t in (")", "]", "}") and k < j:
                        depth -= 1
                    if (t == "," and depth == 0) or k == j:
                        self.param_decl(seg_start, k, params)
                        seg_start = k + 1
                i = j + 1
                # K&R parameter declarations
                save = self.pos
                self.pos = i
                while self.pos < brace:
                    try:
                        decl = self.declaration()
                    except _Fail:
                        break
                    if decl is None:
                        break
                    params.update(decl.fields.get("declared", {}))
                self.pos = save
                break
            i += 1
        return name, params

    def param_decl(self, a, b, params):
        if a >= b:
            return
        save = self.pos
        self.pos = a
        try:
            specs = self.decl_specifiers()
            if specs is None:
                return
            info = self.declarator(specs, make_nodes=False)
            if info is not None and info[0] and self.pos == b:
                params[info[0]] = info[1]
        except _Fail:
            pass
        finally:
            self.pos = save

    # -- declarations --

    def is_decl_start(self):
        t = self.peek()
        k = self.kind()
        if k != IDENT:
            return False
        if t in DECL_START or t in ATTRIBUTE_WORDS:
            return True
        if t in STMT_KEYWORDS:
            return False
        nxt = self.peek(1)
        nk = self.kind(1)
        if nk == IDENT and nxt not in STMT_KEYWORDS:
            return True
        if t in self.typedefs and nxt in ("*", "("):
            return True
        if nxt == "*":
            j = 1
            while self.peek(j) == "*":
                j += 1
            while self.peek(j) in QUALIFIERS:
                j += 1
            if self.kind(j) == IDENT and self.peek(j + 1) in (";", "=", ",", "[", ")"):
                return True
        return False

    def skip_attribute(self):
        self.pos += 1
        if self.peek() == "(":
            j = self.match_close(self.pos)
            if j >= self.n:
                raise _Fail("attribute")
            self.pos = j + 1

    def decl_specifiers(self):
        words = []
        text_words = []
        storage = set()
        have_type = False
        volatile = False
        start = self.pos
        while True:
            t = self.peek()
            k = self.kind()
            if k != IDENT:
                break
            if t in STORAGE:
                storage.add(t)
                self.pos += 1
            elif t in QUALIFIERS:
                if t in ("volatile", "__volatile__"):
                    volatile = True
                if t in ("const", "__const", "__const__"):
                    text_words.append("const")
                self.pos += 1
            elif t in ATTRIBUTE_WORDS:
                self.skip_attribute()
            elif t in TYPE_WORDS:
                words.append(t)
                text_words.append(t)
                have_type = True
                self.pos += 1
            elif t in TAG_WORDS:
                self.pos += 1
                tag = t
                if self.kind() == IDENT and self.peek() not in ATTRIBUTE_WORDS:
                    tag = f"{t} {self.peek()}"
                    self.pos += 1
                while self.peek() in ATTRIBUTE_WORDS:
                    self.skip_attribute()
                if self.peek() == "{":
                    j = self.match_close(self.pos)
                    if j >= self.n:
                        raise _Fail("tag body")
                    self.pos = j + 1
                    tag = tag + " {...}"
                words.append(tag)
                text_words.append(tag)
                have_type = True
            elif t == "_Static_assert":
                raise _Fail("static assert")
            elif not have_type and t not in STMT_KEYWORDS:
                nxt = self.peek(1)
                # an identifier followed by something declarator-like names a type
                if nxt in ("(", "=", ",", ";", ")", "[", ".", "->") and t not in self.typedefs:
                    break
                words.append(t)
                text_words.append(t)
                have_type = True
                self.pos += 1
            else:
                break
        if self.pos == start or (not have_type and not storage and not words):
            if not have_type and self.pos > start and (storage or volatile):
                # "static x;" / "const y = 1;" style implicit int
                words.append("int")
                text_words.append("int")
                return tuple(words), " ".join(text_words), frozenset(storage), volatile
            self.pos = start
            return None
        if not have_type:
            words.append("int")
            text_words.append("int")
        return tuple(words), " ".join(text_words), frozenset(storage), volatile

    def declarator(self, specs, make_nodes=True):
        """Parse one declarator; returns ``(name, TypeInfo, name_token)``."""
        words, spec_text, storage, volatile = specs
        stars = 0
        complex_ = False
        vol = volatile
        name = None
        name_tok = None
        while True:
            t = self.peek()
            if t == "*":
                stars += 1
                self.pos += 1
            elif t in QUALIFIERS:
                if t in ("volatile", "__volatile__"):
                    vol = True
                self.pos += 1
            elif t in ATTRIBUTE_WORDS:
                self.skip_attribute()
            else:
                break
        arrays = 0
        if self.peek() == "(":
            # nested declarator such as (*fp)(int) or (name)
            j = self.match_close(self.pos)
            if j >= self.n:
                raise _Fail("declarator")
            self.pos += 1
            inner = self.declarator(specs, make_nodes=False)
            if self.pos != j:
                raise _Fail("declarator")
            self.pos = j + 1
            name = inner[0]
            name_tok = inner[2]
            complex_ = True
        elif self.kind() == IDENT and self.peek() not in STMT_KEYWORDS and self.peek() not in DECL_START:
            name = self.peek()
            name_tok = self.pos
            self.pos += 1
        while True:
            t = self.peek()
            if t == "[":
                j = self.match_close(self.pos)
                if j >= self.n:
                    raise _Fail("array")
                self.pos = j + 1
                arrays += 1
            elif t == "(":
                j = self.match_close(self.pos)
                if j >= self.n:
                    raise _Fail("params")
                self.pos = j + 1
                complex_ = True
            elif t in ATTRIBUTE_WORDS or t in ("asm", "__asm__", "__asm"):
                self.skip_attribute()
            elif t == ":" and name is not None:
                # bit-field width
                self.pos += 1
                self.conditional()
            else:
                break
        info = TypeInfo(words, spec_text, stars, arrays, complex_, vol, storage)
        return name, info, name_tok

    def declaration(self):
        p = self.pos
        specs = self.decl_specifiers()
        if specs is None:
            return None
        declared = {}
        children = []
        if self.peek() != ";":
            while True:
                d0 = self.pos
                name, info, name_tok = self.declarator(specs)
                if name is None:
                    raise _Fail("declarator name")
                ident = self.make("Identifier", name_tok, name_tok + 1)
                init = None
                if self.peek() == "=":
                    self.pos += 1
                    init = self.initializer()
                declared[name] = info
                children.append(self.make("Declarator", d0, self.pos, [ident, init],
                                          name=name, init=init, type=info))
                if self.peek() == ",":
                    self.pos += 1
                    continue
                break
        self.expect(";")
        if "typedef" in specs[2]:
            self.typedefs.update(declared)
        return self.make("DeclStmt", p, self.pos, children, declared=declared,
                         storage=specs[2])

    def initializer(self):
        if self.peek() == "{":
            return self.init_list()
        return self.assignment()

    def init_list(self):
        p = self.expect("{")
        items = []
        while self.peek() != "}":
            if self.pos >= self.n:
                raise _Fail("init list")
            # designators: .field = / [idx] =
            while self.peek() in (".", "["):
                if self.peek() == ".":
                    self.pos += 2
                else:
                    j = self.match_close(self.pos)
                    if j >= self.n:
                        raise _Fail("designator")
                    self.pos = j + 1
            if self.peek() == "=":
                self.pos += 1
            items.append(self.initializer())
            if self.peek() == ",":
                self.pos += 1
            elif self.peek() != "}":
                raise _Fail("init list sep")
        self.pos += 1
        return self.make("InitList", p, self.pos, items)

    # -- statements --

    def statement(self):
        p = self.pos
        try:
            return self._statement()
        except _Fail:
            self.pos = p
            return self.recover(p)

    def recover(self, p, top=False):
        texts, kinds = self.texts, self.kinds
        i = p
        depth = 0
        macro_like = kinds[p] == IDENT and p + 1 < self.n and texts[p + 1] == "("
        close = self.match_close(p + 1) if macro_like else -1
        while i < self.n:
            t = texts[i]
            if kinds[i] == PP and i > p:
                break
            if t == "{":
                j = self.match_close(i)
                i = min(j + 1, self.n)
                if depth <= 0:
                    if top and i < self.n and texts[i] == ";":
                        i += 1
                    break
                continue
            if t == "}" and i > p:
                break
            if t in ("(", "["):
                depth += 1
            elif t in (")", "]"):
                depth -= 1
            elif t == ";" and depth <= 0:
                i += 1
                break
            i += 1
            if i == close + 1 and i < self.n and texts[i] not in (";", "{") and self.newline_before(i):
                break
        if i <= p:
            i = p + 1
        self.pos = i
        flags = MACRO if macro_like else ERROR
        return self.make("Opaque", p, i, flags=flags)

    def _statement(self):
        p = self.pos
        t = self.peek()
        k = self.kind()
        if k == PP:
            self.pos += 1
            return self.make("PPDirective", p, p + 1, flags=MACRO)
        if t == "{":
            return self.compound()
        if t == ";":
            self.pos += 1
            return self.make("NullStmt", p, p + 1)
        if k == IDENT:
            if t == "if":
                self.pos += 1
                self.expect("(")
                cond = self.expression()
                self.expect(")")
                then = self.statement()
                els = None
                if self.peek() == "else":
                    self.pos += 1
                    els = self.statement()
                return self.make("IfStmt", p, self.pos, [cond, then, els],
                                 cond=cond, then=then, **{"else": els})
            if t == "while":
                self.pos += 1
                self.expect("(")
                cond = self.expression()
                self.expect(")")
                body = self.statement()
                return self.make("WhileStmt", p, self.pos, [cond, body], cond=cond, body=body)
            if t == "do":
                self.pos += 1
                body = self.statement()
                self.expect("while")
                self.expect("(")
                cond = self.expression()
                self.expect(")")
                self.expect(";")
                return self.make("DoStmt", p, self.pos, [body, cond], cond=cond, body=body)
            if t == "for":
                return self.for_statement()
            if t == "switch":
                self.pos += 1
                self.expect("(")
                cond = self.expression()
                self.expect(")")
                body = self.statement()
                return self.make("SwitchStmt", p, self.pos, [cond, body], cond=cond, body=body)
            if t == "case":
                self.pos += 1
                value = self.conditional()
                if self.peek() == "...":
                    self.pos += 1
                    self.conditional()
                self.expect(":")
                body = self.labeled_body()
                return self.make("CaseStmt", p, self.pos, [value, body], value=value, body=body)
            if t == "default":
                self.pos += 1
                self.expect(":")
                body = self.labeled_body()
                return self.make("DefaultStmt", p, self.pos, [body], body=body)
            if t == "return":
                self.pos += 1
                expr = None if self.peek() == ";" else self.expression()
                self.expect(";")
                return self.make("ReturnStmt", p, self.pos, [expr], expr=expr)
            if t == "break" or t == "continue":
                self.pos += 1
                self.expect(";")
                return self.make("BreakStmt" if t == "break" else "ContinueStmt", p, self.pos)
            if t == "goto":
                self.pos += 1
                if self.peek() == "*":
                    self.pos += 1
                    target = self.cast()
                    self.expect(";")
                    return self.make("GotoStmt", p, self.pos, [target])
                if self.kind() != IDENT:
                    raise _Fail("goto")
                self.pos += 1
                self.expect(";")
                return self.make("GotoStmt", p, self.pos)
            if t in ("asm", "__asm__", "__asm"):
                raise _Fail("asm")
            if self.peek(1) == ":" and t not in STMT_KEYWORDS:
                self.pos += 2
                body = self.labeled_body()
                return self.make("LabelStmt", p, self.pos, [body], name=t, body=body)
            if self.is_decl_start():
                save = self.pos
                try:
                    node = self.declaration()
                    if node is not None:
                        return node
                except _Fail:
                    pass
                self.pos = save
        expr = self.expression()
        self.expect(";")
        flags = 0
        if expr.kind == "CallExpr" and expr.flags & MACRO:
            flags = MACRO
        return self.make("ExprStmt", p, self.pos, [expr], flags=flags, expr=expr)

    def labeled_body(self):
        if self.peek() == "}":
            return None
        return self.statement()

    def compound(self):
        p = self.expect("{")
        items = []
        while True:
            if self.pos >= self.n:
                raise _Fail("unterminated block")
            if self.texts[self.pos] == "}":
                break
            items.append(self.statement())
        self.pos += 1
        return self.make("CompoundStmt", p, self.pos, items)

    def for_statement(self):
        p = self.pos
        self.pos += 1
        self.expect("(")
        init = None
        i0 = self.pos
        if self.peek() == ";":
            self.pos += 1
        elif self.is_decl_start() and (node := self._try_decl()) is not None:
            init = node
        else:
            expr = self.expression()
            self.expect(";")
            init = self.make("ExprStmt", i0, self.pos, [expr], expr=expr)
        cond = None if self.peek() == ";" else self.expression()
        self.expect(";")
        step = None if self.peek() == ")" else self.expression()
        self.expect(")")
        body = self.statement()
        return self.make("ForStmt", p, self.pos, [init, cond, step, body],
                         init=init, cond=cond, step=step, body=body)

    def _try_decl(self):
        save = self.pos
        try:
            return self.declaration()
        except _Fail:
            self.pos = save
            return None

    # -- expressions --

    def expression(self):
        p = self.pos
        left = self.assignment()
        while self.peek() == ",":
            self.pos += 1
            right = self.assignment()
            left = self.make("CommaExpr", p, self.pos, [left, right], left=left, right=right)
        return left

    def assignment(self):
        p = self.pos
        left = self.conditional()
        t = self.peek()
        if t in ASSIGN_OPS and self.kind() == PUNCT:
            self.pos += 1
            right = self.assignment()
            kind = "AssignExpr" if t == "=" else "CompoundAssign"
            return self.make(kind, p, self.pos, [left, right], op=t, target=left, value=right)
        return left

    def conditional(self):
        p = self.pos
        cond = self.binary(1)
        if self.peek() != "?":
            return cond
        self.pos += 1
        then = None if self.peek() == ":" else self.expression()
        self.expect(":")
        els = self.conditional()
        if self.peek() in ASSIGN_OPS:
            # GNU accepts "c ? a : b = x" only as a parse quirk; treat as opaque
            raise _Fail("assignment in conditional")
        return self.make("ConditionalExpr", p, self.pos, [cond, then, els],
                         cond=cond, then=then, **{"else": els})

    def binary(self, min_prec):
        p = self.pos
        left = self.cast()
        texts, kinds = self.texts, self.kinds
        while self.pos < self.n:
            op = texts[self.pos]
            prec = BINARY_PREC.get(op)
            if prec is None or prec < min_prec or kinds[self.pos] != PUNCT:
                break
            op_i = self.pos
            self.pos += 1
            right = self.binary(prec + 1)
            left = self.make("BinaryExpr", p, self.pos, [left, right], op=op, left=left,
                             right=right, op_start=self.starts[op_i], op_end=self.ends[op_i])
        return left

    def type_in_parens(self):
        """True when the '(' at the cursor opens a type name (cast, sizeof, literal)."""
        t = self.peek(1)
        k = self.kind(1)
        if k != IDENT:
            return False
        if t in TYPE_WORDS or t in TAG_WORDS or t in QUALIFIERS:
            return True
        if t in STMT_KEYWORDS:
            return False
        nxt = self.peek(2)
        if t in self.typedefs and nxt in (")", "*", "["):
            return True
        if nxt == "*":
            j = 2
            while self.peek(j) == "*":
                j += 1
            return self.peek(j) == ")"
        if nxt == ")":
            after = self.kind(3)
            if after in (IDENT, NUMBER, CHAR, STRING) and self.peek(3) not in BINARY_PREC:
                return True
            if self.peek(3) == "(" and (t.endswith("_t") or t in self.typedefs):
                return True
        return False

    def type_name(self):
        """Consume a parenthesized type name; cursor must be on '('."""
        p = self.pos
        j = self.match_close(p)
        if j >= self.n:
            raise _Fail("type name")
        node = self.make("TypeName", p + 1, j) if j > p + 1 else None
        if node is None:
            raise _Fail("empty type")
        self.pos = j + 1
        return node

    def cast(self):
        if self.peek() == "(" and self.type_in_parens():
            p = self.pos
            tn = self.type_name()
            if self.peek() == "{":
                lst = self.init_list()
                node = self.make("CompoundLiteral", p, self.pos, [tn, lst], type=tn)
                return self.postfix_tail(p, node)
            operand = self.cast()
            return self.make("CastExpr", p, self.pos, [tn, operand], type=tn, operand=operand)
        return self.unary()

    def unary(self):
        p = self.pos
        t = self.peek()
        k = self.kind()
        if k == PUNCT:
            if t in ("++", "--"):
                self.pos += 1
                operand = self.unary()
                return self.make("UnaryExpr", p, self.pos, [operand], op=t, operand=operand)
            if t in ("&", "*", "+", "-", "~", "!"):
                self.pos += 1
                operand = self.cast()
                return self.make("UnaryExpr", p, self.pos, [operand], op=t, operand=operand)
            if t == "&&" and self.kind(1) == IDENT:
                self.pos += 2
                return self.make("LabelAddr", p, self.pos)
        elif k == IDENT:
            if t in ("sizeof", "_Alignof", "alignof", "__alignof__"):
                self.pos += 1
                if self.peek() == "(" and self.type_in_parens():
                    tn = self.type_name()
                    return self.make("SizeofExpr", p, self.pos, [tn], op=t, operand=tn)
                operand = self.unary()
                return self.make("SizeofExpr", p, self.pos, [operand], op=t, operand=operand)
            if t == "__extension__":
                self.pos += 1
                return self.cast()
        return self.postfix()

    def postfix(self):
        p = self.pos
        return self.postfix_tail(p, self.primary())

    def postfix_tail(self, p, node):
        texts = self.texts
        while self.pos < self.n:
            t = texts[self.pos]
            if t == "[":
                self.pos += 1
                index = self.expression()
                self.expect("]")
                node = self.make("SubscriptExpr", p, self.pos, [node, index], base=node, index=index)
            elif t == "(":
                self.pos += 1
                args = []
                if self.peek() != ")":
                    while True:
                        args.append(self.argument())
                        if self.peek() == ",":
                            self.pos += 1
                            continue
                        break
                self.expect(")")
                flags = MACRO if node.kind == "Identifier" and looks_like_macro(self.src[node.start:node.end]) else 0
                node = self.make("CallExpr", p, self.pos, [node] + args, flags=flags,
                                 callee=node, args=args)
            elif t in (".", "->"):
                self.pos += 1
                if self.kind() != IDENT:
                    raise _Fail("member")
                self.pos += 1
                node = self.make("MemberExpr", p, self.pos, [node], op=t, base=node,
                                 member=texts[self.pos - 1])
            elif t in ("++", "--"):
                self.pos += 1
                node = self.make("PostfixExpr", p, self.pos, [node], op=t, operand=node)
            else:
                break
        return node

    def argument(self):
        t = self.peek()
        if self.kind() == IDENT and (t in TYPE_WORDS or t in TAG_WORDS or t in QUALIFIERS):
            # type argument (va_arg, offsetof, _Generic)
            p = self.pos
            depth = 0
            while self.pos < self.n:
                x = self.texts[self.pos]
                if x in ("(", "["):
                    depth += 1
                elif x in (")", "]"):
                    if depth == 0:
                        break
                    depth -= 1
                elif x == "," and depth == 0:
                    break
                self.pos += 1
            return self.make("TypeName", p, self.pos)
        return self.assignment()

    def primary(self):
        p = self.pos
        if p >= self.n:
            raise _Fail("eof")
        t = self.texts[p]
        k = self.kinds[p]
        if k == IDENT:
            if t in STMT_KEYWORDS or t in DECL_START:
                raise _Fail("keyword in expression")
            if self.kind(1) == STRING and looks_like_macro(t):
                return self.string_literal(p)
            self.pos += 1
            return self.make("Identifier", p, p + 1)
        if k == NUMBER:
            self.pos += 1
            kind = "IntLiteral" if _is_int_literal(t) else "FloatLiteral"
            return self.make(kind, p, p + 1)
        if k == CHAR:
            self.pos += 1
            return self.make("CharLiteral", p, p + 1)
        if k == STRING:
            return self.string_literal(p)
        if t == "(":
            if self.peek(1) == "{":
                j = self.match_close(p)
                if j >= self.n:
                    raise _Fail("statement expression")
                self.pos = j + 1
                return self.make("StmtExpr", p, self.pos, flags=ERROR)
            self.pos += 1
            inner = self.expression()
            self.expect(")")
            return self.make("ParenExpr", p, self.pos, [inner], inner=inner)
        raise _Fail(f"unexpected {t!r}")

    def string_literal(self, p):
        flags = 0
        while self.pos < self.n:
            k = self.kinds[self.pos]
            if k == STRING:
                self.pos += 1
            elif k == IDENT and looks_like_macro(self.texts[self.pos]) and self.kind(1) == STRING:
                flags = MACRO
                self.pos += 1
            elif k == IDENT and looks_like_macro(self.texts[self.pos]) and self.pos > p:
                flags = MACRO
                self.pos += 1
            else:
                break
        return self.make("StringLiteral", p, self.pos, flags=flags)


def _is_int_literal(t: str) -> bool:
    low = t.lower()
    if low.startswith("0x"):
        return "." not in low and "p" not in low
    return not any(c in low for c in ".e") or low.rstrip("ul").isdigit()


def parse_unit(src: str, mode: str = FRAGMENT) -> SyntaxTree:
    """Parse ``src`` into a lossless tree.

    In fragment mode a source holding a single function definition is rooted
    at that ``FunctionDef``; anything else is rooted at a ``TranslationUnit``.
    Raises :class:`ParseError` when no function definition is found.
    """
    if mode not in (FRAGMENT, UNIT):
        raise ValueError(f"unknown parse mode {mode!r}")
    kinds, starts, ends = scan.tokenize(src)
    parser = _Parser(src, kinds, starts, ends)
    items = parser.parse_unit()
    if not any(it.kind == "FunctionDef" for it in items):
        raise ParseError("no function definition recognized")
    if mode == FRAGMENT and len(items) == 1:
        root = items[0]
    else:
        root = Node("TranslationUnit", 0, len(src), 0, len(kinds), items)
        for c in root.children:
            c.parent = root
    root.parent = None
    # node ids follow document (preorder) order; backtracked nodes are dropped
    nodes = list(root.walk())
    for i, node in enumerate(nodes):
        node.id = i
    return SyntaxTree(src, root, nodes, kinds, starts, ends, parser.texts, mode)


def try_parse(src: str, mode: str = FRAGMENT) -> SyntaxTree | None:
    try:
        return parse_unit(src, mode)
    except ParseError:
        return None
