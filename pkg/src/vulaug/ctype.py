"""Just enough C typing to declare a temporary for a hoisted subexpression.

Assumes an LP64 target. Anything this module cannot type with certainty
comes back as ``None`` and the caller rejects the rewrite.
"""

from __future__ import annotations

from typing import NamedTuple

from .syntax import TypeInfo

# name -> (conversion rank, size in bytes, signed)
INTEGER = {
    "_Bool": (0, 1, False),
    "char": (1, 1, True),
    "signed char": (1, 1, True),
    "unsigned char": (1, 1, False),
    "short": (2, 2, True),
    "unsigned short": (2, 2, False),
    "int": (3, 4, True),
    "unsigned int": (3, 4, False),
    "long": (4, 8, True),
    "unsigned long": (4, 8, False),
    "long long": (5, 8, True),
    "unsigned long long": (5, 8, False),
}
FLOATING = {"float": 1, "double": 2, "long double": 3}

TYPEDEF_BASE = {
    "size_t": "unsigned long", "ssize_t": "long", "ptrdiff_t": "long",
    "intptr_t": "long", "uintptr_t": "unsigned long",
    "intmax_t": "long", "uintmax_t": "unsigned long",
    "off_t": "long", "time_t": "long", "clock_t": "long",
    "int8_t": "signed char", "uint8_t": "unsigned char",
    "int16_t": "short", "uint16_t": "unsigned short",
    "int32_t": "int", "uint32_t": "unsigned int",
    "int64_t": "long", "uint64_t": "unsigned long",
    "u8": "unsigned char", "u16": "unsigned short", "u32": "unsigned int", "u64": "unsigned long long",
    "s8": "signed char", "s16": "short", "s32": "int", "s64": "long long",
    "bool": "_Bool", "wchar_t": "int",
}


class CType(NamedTuple):
    spelling: str
    base: str  # canonical arithmetic type name, or "ptr"
    depth: int = 0  # pointer depth when base == "ptr"
    elem: tuple = ()  # specifier words of the pointee chain's final type

    @property
    def is_pointer(self) -> bool:
        return self.base == "ptr"

    @property
    def is_float(self) -> bool:
        return self.base in FLOATING


def canonical(words) -> str | None:
    """Canonical arithmetic type for a specifier word list, or None."""
    words = [w for w in words if w != "const"]
    if len(words) == 1 and words[0] in TYPEDEF_BASE:
        return TYPEDEF_BASE[words[0]]
    longs = words.count("long")
    unsigned = "unsigned" in words
    signed = "signed" in words
    rest = [w for w in words if w not in ("long", "unsigned", "signed", "int")]
    if rest == ["_Bool"] or rest == ["bool"]:
        return "_Bool" if not (longs or unsigned or signed) else None
    if rest == ["char"]:
        if longs:
            return None
        return "unsigned char" if unsigned else ("signed char" if signed else "char")
    if rest == ["short"]:
        return None if longs else ("unsigned short" if unsigned else "short")
    if rest == ["float"]:
        return "float" if not (longs or unsigned or signed) else None
    if rest == ["double"]:
        return ("long double" if longs == 1 else "double") if not (unsigned or signed or longs > 1) else None
    if rest:
        return None
    if not words:
        return None
    base = {0: "int", 1: "long", 2: "long long"}.get(longs)
    if base is None:
        return None
    return "unsigned " + base if unsigned else base


def from_info(info: TypeInfo | None) -> CType | None:
    if info is None or info.complex:
        return None
    if "{...}" in info.spec_text:
        return None
    depth = info.stars + info.arrays
    if info.arrays > 1:
        return None
    if depth:
        spelling = info.spec_text + " " + "*" * depth
        return CType(spelling, "ptr", depth, tuple(info.specs))
    base = canonical(info.specs)
    if base is None:
        return None
    words = [w for w in info.specs if w != "const"]
    spelling = words[0] if len(words) == 1 and words[0] in TYPEDEF_BASE else base
    return CType(spelling, base)


def pointee(t: CType) -> CType | None:
    if not t.is_pointer:
        return None
    if t.depth > 1:
        spec = t.spelling.rstrip("*").rstrip()
        return CType(spec + " " + "*" * (t.depth - 1), "ptr", t.depth - 1, t.elem)
    base = canonical(t.elem)
    if base is None:
        return None
    words = [w for w in t.elem if w != "const"]
    spelling = words[0] if len(words) == 1 and words[0] in TYPEDEF_BASE else base
    return CType(spelling, base)


def promote(t: CType) -> CType | None:
    if t.is_pointer:
        return None
    if t.base in FLOATING:
        return t
    rank, size, _ = INTEGER[t.base]
    if rank < INTEGER["int"][0]:
        return CType("int", "int")
    return t


def _unsigned_of(name: str) -> str:
    return name if name.startswith("unsigned") else "unsigned " + name


def arithmetic(a: CType, b: CType) -> CType | None:
    """Usual arithmetic conversions on two arithmetic operand types."""
    if a.is_pointer or b.is_pointer:
        return None
    if a.is_float or b.is_float:
        fa = FLOATING.get(a.base, 0)
        fb = FLOATING.get(b.base, 0)
        return a if fa >= fb else b
    a = promote(a)
    b = promote(b)
    if a.base == b.base:
        return a
    ra, sa, ga = INTEGER[a.base]
    rb, sb, gb = INTEGER[b.base]
    if ga == gb:
        return a if ra > rb else b
    u, s = (a, b) if not ga else (b, a)
    ru, su, _ = INTEGER[u.base]
    rs, ss, _ = INTEGER[s.base]
    if ru >= rs:
        return u
    if ss > su:
        return s
    name = _unsigned_of(s.base)
    return CType(name, name)


_INT_TYPES_BY_FIT = [
    ("int", (1 << 31) - 1), ("unsigned int", (1 << 32) - 1),
    ("long", (1 << 63) - 1), ("unsigned long", (1 << 64) - 1),
]


def int_literal(text: str) -> CType | None:
    low = text.lower()
    suffix = ""
    while low and low[-1] in "ul":
        suffix = low[-1] + suffix
        low = low[:-1]
    try:
        if low.startswith("0x"):
            value, decimal = int(low, 16), False
        elif low.startswith("0b"):
            value, decimal = int(low, 2), False
        elif low.startswith("0") and len(low) > 1:
            value, decimal = int(low, 8), False
        else:
            value, decimal = int(low, 10), True
    except ValueError:
        return None
    unsigned = "u" in suffix
    longs = suffix.count("l")
    if longs > 2:
        return None
    candidates = []
    for name, limit in _INT_TYPES_BY_FIT:
        is_unsigned = name.startswith("unsigned")
        rank = INTEGER[name][0]
        if rank < 3 + min(longs, 1):
            continue
        if unsigned and not is_unsigned:
            continue
        if decimal and not unsigned and is_unsigned:
            continue
        candidates.append((name, limit))
    for name, limit in candidates:
        if value <= limit:
            if longs == 2:
                name = name.replace("long", "long long")
            return CType(name, name)
    return None


def float_literal(text: str) -> CType:
    low = text.lower()
    if low.endswith("f") and not low.startswith("0x"):
        return CType("float", "float")
    if low.endswith("l"):
        return CType("long double", "long double")
    return CType("double", "double")


def from_type_name(text: str) -> CType | None:
    """Type of a cast's parenthesized type name, e.g. ``unsigned long`` or ``char *``."""
    words = text.replace("*", " * ").split()
    stars = words.count("*")
    specs = [w for w in words if w != "*"]
    if stars and words[-stars:] != ["*"] * stars:
        return None
    if not specs:
        return None
    if stars:
        if canonical(specs) is None and not (len(specs) == 1 and specs[0] == "void"):
            return None
        return CType(" ".join(specs) + " " + "*" * stars, "ptr", stars, tuple(specs))
    base = canonical(specs)
    if base is None:
        return None
    plain = [w for w in specs if w != "const"]
    spelling = plain[0] if len(plain) == 1 and plain[0] in TYPEDEF_BASE else base
    return CType(spelling, base)


def declaration(t: CType, name: str) -> str:
    if t.spelling.endswith("*"):
        return f"{t.spelling}{name}"
    return f"{t.spelling} {name}"
