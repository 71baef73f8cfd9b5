"""The seven natural, semantics-preserving rewrite rules.

Each rule has a matcher, which either rejects a node silently (pattern does
not match), rejects it with a :class:`GuardFailure`, or returns the bound
sub-nodes, and a rewriter that turns a :class:`TransformSite` into span edits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Mapping

from . import ctype
from .syntax import (BINARY_PREC, ERROR, MACRO, Edit, Node, Span, SyntaxTree, TypeInfo,
                     emit)


class RuleId(str, Enum):
    R1_ExprSplit = "R1_ExprSplit"
    R2_CondNegate = "R2_CondNegate"
    R3_AssignSplit = "R3_AssignSplit"
    R4_IfSplit = "R4_IfSplit"
    R5_CmpMirror = "R5_CmpMirror"
    R6_ForToWhile = "R6_ForToWhile"
    R7_WhileToFor = "R7_WhileToFor"

    @property
    def short(self) -> str:
        return self.value.split("_", 1)[0]

    @classmethod
    def parse(cls, name: str) -> RuleId:
        """Accept ``R3``, ``r3`` or ``R3_AssignSplit``."""
        key = name.strip()
        for rule in cls:
            if key == rule.value or key.upper() == rule.short:
                return rule
        raise ValueError(f"unknown rule {name!r}")


ALL_RULES = tuple(RuleId)
_RULE_ORDER = {r: i for i, r in enumerate(ALL_RULES)}


class GuardReason(str, Enum):
    side_effects = "side_effects"
    macro_overlap = "macro_overlap"
    missing_else = "missing_else"
    continue_in_body = "continue_in_body"
    untyped_subexpr = "untyped_subexpr"
    volatile_access = "volatile_access"
    error_node = "error_node"
    scope_conflict = "scope_conflict"


class StaleSite(ValueError):
    """The site was not produced from this tree."""


@dataclass(frozen=True)
class TransformSite:
    rule: RuleId
    anchor: int
    span: Span
    kind: str
    bindings: Mapping[str, object] = field(default_factory=dict, compare=False, hash=False)
    guard_report: tuple[str, ...] = ()


@dataclass(frozen=True)
class GuardFailure:
    rule: RuleId
    anchor: int
    span: Span
    reason: GuardReason


COMPARISONS = {"<": ">", ">": "<", "<=": ">=", ">=": "<=", "==": "==", "!=": "!="}
NEGATED = {"<": ">=", ">=": "<", ">": "<=", "<=": ">", "==": "!=", "!=": "=="}
SPLITTABLE = {"+=", "-=", "*=", "/=", "%=", "<<=", ">>=", "&=", "|=", "^="}
LOOPS = ("ForStmt", "WhileStmt", "DoStmt")
_PRIMARY = {"Identifier", "IntLiteral", "FloatLiteral", "CharLiteral", "StringLiteral",
            "ParenExpr", "CallExpr", "SubscriptExpr", "MemberExpr"}


# --- context --------------------------------------------------------------

class _Context:
    """Per-function facts shared by all matchers."""

    def __init__(self, tree: SyntaxTree, fn: Node, globals_: Mapping[str, TypeInfo | None],
                 global_volatile: set):
        self.tree = tree
        self.fn = fn
        env: dict[str, TypeInfo | None] = dict(globals_)
        volatile = set(global_volatile)
        local: dict[str, TypeInfo | None] = {}

        def declare(name, info):
            if info.volatile:
                volatile.add(name)
            if name in local and local[name] != info:
                local[name] = None
            else:
                local[name] = info

        for name, info in (fn["params"] or {}).items():
            declare(name, info)
        for node in fn.walk():
            if node.kind == "DeclStmt":
                for name, info in node["declared"].items():
                    declare(name, info)
        env.update(local)
        self.env = env
        self.volatile = volatile
        self.flagged = [n for n in tree.flagged if fn.start <= n.start and n.end <= fn.end]

    def flagged_in(self, start, end, mask=MACRO | ERROR):
        return any(n.flags & mask and n.start < end and start < n.end for n in self.flagged)

    def effects(self, node: Node | None) -> GuardReason | None:
        if node is None:
            return None
        for n in node.walk():
            k = n.kind
            if k in ("CallExpr", "AssignExpr", "CompoundAssign", "CommaExpr", "StmtExpr",
                     "Opaque"):
                return GuardReason.side_effects
            if k in ("UnaryExpr", "PostfixExpr") and n.op in ("++", "--"):
                return GuardReason.side_effects
            if k == "Identifier" and self.tree.text(n) in self.volatile:
                return GuardReason.volatile_access
        return None

    def type_of(self, node: Node) -> ctype.CType | None:
        k = node.kind
        if k == "Identifier":
            return ctype.from_info(self.env.get(self.tree.text(node)))
        if k == "IntLiteral":
            return ctype.int_literal(self.tree.text(node))
        if k == "FloatLiteral":
            return ctype.float_literal(self.tree.text(node))
        if k == "CharLiteral":
            text = self.tree.text(node)
            return ctype.CType("int", "int") if text.startswith("'") else None
        if k == "ParenExpr":
            return self.type_of(node["inner"])
        if k == "CastExpr":
            return ctype.from_type_name(self.tree.text(node["type"]))
        if k == "SubscriptExpr":
            base = self.type_of(node["base"])
            return ctype.pointee(base) if base is not None else None
        if k == "UnaryExpr":
            inner = self.type_of(node["operand"])
            if node.op == "!":
                return ctype.CType("int", "int")
            if inner is None:
                return None
            if node.op in ("-", "+", "~"):
                return None if inner.is_pointer or (node.op == "~" and inner.is_float) else ctype.promote(inner)
            if node.op == "*":
                return ctype.pointee(inner)
            return None
        if k == "BinaryExpr":
            op = node.op
            if op in COMPARISONS or op in ("&&", "||"):
                return ctype.CType("int", "int")
            left = self.type_of(node["left"])
            right = self.type_of(node["right"])
            if left is None or right is None:
                return None
            if left.is_pointer or right.is_pointer:
                if op == "+" and left.is_pointer != right.is_pointer:
                    ptr, other = (left, right) if left.is_pointer else (right, left)
                    return ptr if not other.is_float else None
                if op == "-" and left.is_pointer and not right.is_pointer and not right.is_float:
                    return left
                return None
            if op in ("<<", ">>"):
                if left.is_float or right.is_float:
                    return None
                return ctype.promote(left)
            if op in ("%", "&", "|", "^") and (left.is_float or right.is_float):
                return None
            result = ctype.arithmetic(left, right)
            if result is None:
                return None
            for t in (left, right):
                if t.base == result.base and t.spelling != result.spelling:
                    return t
            return result
        return None

    def is_float(self, node: Node) -> bool:
        t = self.type_of(node)
        if t is not None:
            return t.is_float
        return any(n.kind == "FloatLiteral" for n in node.walk()) or any(
            (info := self.env.get(self.tree.text(n))) is not None and ctype.canonical(info.specs) in ctype.FLOATING
            and not info.stars and not info.arrays
            for n in node.walk() if n.kind == "Identifier")


def _strip_parens(node: Node) -> Node:
    while node.kind == "ParenExpr":
        node = node["inner"]
    return node


def _has_bound_continue(body: Node) -> bool:
    stack = [body]
    while stack:
        n = stack.pop()
        if n.kind == "ContinueStmt":
            return True
        if n is not body and n.kind in LOOPS:
            continue
        stack.extend(n.children)
    return False


def _block_declared(block: Node) -> set:
    if block.kind != "CompoundStmt":
        return set()
    names = set()
    for child in block.children:
        if child.kind == "DeclStmt":
            names.update(child["declared"])
    return names


def _identifiers(tree: SyntaxTree, node: Node | None) -> set:
    if node is None:
        return set()
    return {tree.text(n) for n in node.walk() if n.kind == "Identifier"}


def _lvalue_base(node: Node) -> Node | None:
    while True:
        k = node.kind
        if k == "Identifier":
            return node
        if k in ("MemberExpr", "SubscriptExpr"):
            node = node["base"]
        elif k == "ParenExpr":
            node = node["inner"]
        elif k == "UnaryExpr" and node.op == "*":
            node = node["operand"]
        else:
            return None


def _open_if(node: Node | None) -> bool:
    """True when a trailing ``else`` after ``node`` would bind inside it."""
    while node is not None:
        k = node.kind
        if k == "IfStmt":
            if node["else"] is None:
                return True
            node = node["else"]
        elif k in ("WhileStmt", "ForStmt", "SwitchStmt", "LabelStmt", "CaseStmt", "DefaultStmt"):
            node = node["body"]
        else:
            return False
    return False


def _line_indent(src: str, offset: int) -> str | None:
    """Leading whitespace of the line holding ``offset`` if nothing else precedes it."""
    line_start = src.rfind("\n", 0, offset) + 1
    prefix = src[line_start:offset]
    return prefix if prefix.strip() == "" else None


# --- matchers -------------------------------------------------------------
# each returns None (no match), a GuardReason, or a bindings dict

def _match_expr_split(ctx: _Context, node: Node):
    tree = ctx.tree
    if node.kind == "AssignExpr" and node.op == "=":
        stmt = node.parent
        if stmt is None or stmt.kind != "ExprStmt" or stmt["expr"] is not node:
            return None
        parent = stmt.parent
        if parent is not None and parent.kind == "ForStmt":
            return None
        target, rhs = node["target"], node["value"]
        same_decl = set()
    elif node.kind == "Declarator" and node["init"] is not None:
        stmt = node.parent
        if stmt is None or stmt.kind != "DeclStmt" or stmt.parent is None or stmt.parent.kind == "TranslationUnit":
            return None
        target, rhs = None, node["init"]
        same_decl = set(stmt["declared"])
    else:
        return None
    core = _strip_parens(rhs)
    if core.kind != "BinaryExpr":
        return None
    if sum(1 for n in core.walk() if n.kind == "BinaryExpr") < 2:
        return None
    if ctx.flagged_in(stmt.start, stmt.end, ERROR):
        return GuardReason.error_node
    if ctx.flagged_in(stmt.start, stmt.end, MACRO):
        return GuardReason.macro_overlap
    for part in (target, rhs):
        reason = ctx.effects(part)
        if reason is not None:
            return reason
    if stmt.kind == "DeclStmt" and (stmt.parent.kind != "CompoundStmt"
                                    or stmt["storage"] & {"static", "extern", "typedef", "_Thread_local", "__thread"}):
        return GuardReason.scope_conflict
    candidates = []
    stack = [core]
    while stack:
        n = stack.pop()
        k = n.kind
        if k == "BinaryExpr":
            if n is not core and not any(c.kind == "BinaryExpr" for c in n.walk() if c is not n):
                candidates.append(n)
                continue
            if n.op in ("&&", "||"):
                stack.append(n["left"])
            else:
                stack.extend(reversed(n.children))
        elif k in ("ParenExpr", "CastExpr", "SubscriptExpr"):
            stack.extend(reversed(n.children))
        elif k == "UnaryExpr" and n.op in ("-", "+", "~", "!", "*"):
            stack.append(n["operand"])
    for cand in candidates:
        if same_decl & _identifiers(tree, cand):
            continue
        t = ctx.type_of(cand)
        if t is None:
            continue
        hoisted = cand
        while hoisted.parent is not None and hoisted.parent.kind == "ParenExpr":
            hoisted = hoisted.parent
        return {"stmt": stmt, "subexpr": cand, "hoisted": hoisted, "type": t}
    return GuardReason.untyped_subexpr


def _match_cond_negate(ctx: _Context, node: Node):
    if node.kind != "IfStmt":
        return None
    cond, then, els = node["cond"], node["then"], node["else"]
    if ctx.flagged_in(node.start, node.end, ERROR):
        return GuardReason.error_node
    if els is None:
        return GuardReason.missing_else
    if ctx.flagged_in(node.start, node.end):
        return GuardReason.macro_overlap
    return {"cond": cond, "then": then, "else": els}


def _match_assign_split(ctx: _Context, node: Node):
    if node.kind != "CompoundAssign" or node.op not in SPLITTABLE:
        return None
    if ctx.flagged_in(node.start, node.end, ERROR):
        return GuardReason.error_node
    if ctx.flagged_in(node.start, node.end, MACRO):
        return GuardReason.macro_overlap
    target = node["target"]
    if _lvalue_base(target) is None:
        return GuardReason.side_effects
    reason = ctx.effects(target)
    if reason is not None:
        return reason
    return {"target": target, "value": node["value"]}


def _match_if_split(ctx: _Context, node: Node):
    if node.kind != "IfStmt" or node["else"] is not None:
        return None
    cond = node["cond"]
    if cond.kind != "BinaryExpr" or cond.op != "&&":
        return None
    if ctx.flagged_in(node.start, node.end, ERROR):
        return GuardReason.error_node
    if ctx.flagged_in(node.start, node.end):
        return GuardReason.macro_overlap
    reason = ctx.effects(cond["left"])
    if reason is not None:
        return reason
    return {"left": cond["left"], "right": cond["right"], "then": node["then"]}


def _match_cmp_mirror(ctx: _Context, node: Node):
    if node.kind != "BinaryExpr" or node.op not in COMPARISONS:
        return None
    if node.id not in ctx.if_conditions:
        return None
    if ctx.flagged_in(node.start, node.end, ERROR):
        return GuardReason.error_node
    if ctx.flagged_in(node.start, node.end, MACRO):
        return GuardReason.macro_overlap
    for part in (node["left"], node["right"]):
        reason = ctx.effects(part)
        if reason is not None:
            return reason
    return {"left": node["left"], "right": node["right"]}


def _match_for_to_while(ctx: _Context, node: Node):
    if node.kind != "ForStmt":
        return None
    if ctx.flagged_in(node.start, node.end, ERROR):
        return GuardReason.error_node
    if ctx.flagged_in(node.start, node.end, MACRO):
        return GuardReason.macro_overlap
    if _has_bound_continue(node["body"]):
        return GuardReason.continue_in_body
    init = node["init"]
    if init is not None and init.kind not in ("DeclStmt", "ExprStmt"):
        return None
    return {"init": init, "cond": node["cond"], "step": node["step"], "body": node["body"]}


def _match_while_to_for(ctx: _Context, node: Node):
    if node.kind != "WhileStmt":
        return None
    body = node["body"]
    if body.kind != "CompoundStmt" or not body.children:
        return None
    last = body.children[-1]
    if last.kind != "ExprStmt":
        return None
    upd = last["expr"]
    if upd.kind in ("UnaryExpr", "PostfixExpr") and upd.op in ("++", "--"):
        target, value = upd["operand"], None
    elif upd.kind == "CompoundAssign":
        target, value = upd["target"], upd["value"]
    else:
        return None
    base = _lvalue_base(target)
    if base is None or ctx.tree.text(base) not in _identifiers(ctx.tree, node["cond"]):
        return None
    if ctx.flagged_in(node.start, node.end, ERROR):
        return GuardReason.error_node
    if ctx.flagged_in(node.start, node.end, MACRO):
        return GuardReason.macro_overlap
    if _has_bound_continue(body):
        return GuardReason.continue_in_body
    for part in (target, value):
        reason = ctx.effects(part)
        if reason is not None:
            return reason
    if _identifiers(ctx.tree, upd) & _block_declared(body):
        return GuardReason.scope_conflict
    return {"cond": node["cond"], "body": body, "update": last}


_MATCHERS: dict[RuleId, Callable] = {
    RuleId.R1_ExprSplit: _match_expr_split,
    RuleId.R2_CondNegate: _match_cond_negate,
    RuleId.R3_AssignSplit: _match_assign_split,
    RuleId.R4_IfSplit: _match_if_split,
    RuleId.R5_CmpMirror: _match_cmp_mirror,
    RuleId.R6_ForToWhile: _match_for_to_while,
    RuleId.R7_WhileToFor: _match_while_to_for,
}

_GUARDS = {
    RuleId.R1_ExprSplit: ("no_error_node", "no_macro_overlap", "side_effect_free", "scope", "typed_subexpr"),
    RuleId.R2_CondNegate: ("no_error_node", "has_else", "no_macro_overlap"),
    RuleId.R3_AssignSplit: ("no_error_node", "no_macro_overlap", "side_effect_free_lvalue", "not_volatile"),
    RuleId.R4_IfSplit: ("no_error_node", "no_else", "no_macro_overlap", "side_effect_free_first_operand"),
    RuleId.R5_CmpMirror: ("no_error_node", "no_macro_overlap", "side_effect_free_operands"),
    RuleId.R6_ForToWhile: ("no_error_node", "no_macro_overlap", "no_bound_continue"),
    RuleId.R7_WhileToFor: ("no_error_node", "no_macro_overlap", "no_bound_continue",
                           "side_effect_free_update", "scope"),
}


def _contexts(tree: SyntaxTree):
    globals_: dict[str, TypeInfo | None] = {}
    volatile = set()
    top = tree.root.children if tree.root.kind == "TranslationUnit" else ()
    for item in top:
        if item.kind == "DeclStmt":
            for name, info in item["declared"].items():
                if info.volatile:
                    volatile.add(name)
                globals_[name] = info if globals_.get(name, info) == info else None
    for fn in tree.functions():
        ctx = _Context(tree, fn, globals_, volatile)
        ctx.if_conditions = set()
        for node in fn.walk():
            if node.kind == "IfStmt":
                ctx.if_conditions.update(n.id for n in node["cond"].walk())
        yield ctx


def find_sites(tree: SyntaxTree, rules: Iterable[RuleId] | None = None
               ) -> tuple[list[TransformSite], list[GuardFailure]]:
    """All (location, rule) pairs whose pattern matches, split by guard outcome.

    Order is document order of the anchor, then rule order.
    """
    enabled = sorted(set(ALL_RULES if rules is None else rules), key=_RULE_ORDER.get)
    matchers = [(r, _MATCHERS[r]) for r in enabled]
    sites: list[TransformSite] = []
    failures: list[GuardFailure] = []
    for ctx in _contexts(tree):
        for node in ctx.fn["body"].walk():
            for rule, matcher in matchers:
                result = matcher(ctx, node)
                if result is None:
                    continue
                if isinstance(result, GuardReason):
                    failures.append(GuardFailure(rule, node.id, node.span, result))
                else:
                    sites.append(TransformSite(rule, node.id, node.span, node.kind, result,
                                               _GUARDS[rule]))
    return sites, failures


# --- rewriters ------------------------------------------------------------

def negate_condition(tree: SyntaxTree, expr: Node, is_float: Callable[[Node], bool] | None = None) -> str:
    """Source text whose truth value is the complement of ``expr``.

    A single comparison gets its operator flipped; everything else is wrapped
    as ``!(...)``. Ordered comparisons on floating operands are wrapped too,
    since ``!(a < b)`` and ``a >= b`` disagree on NaN.
    """
    text = tree.text(expr)
    if expr.kind == "BinaryExpr" and expr.op in NEGATED:
        floating = expr.op not in ("==", "!=") and is_float is not None and (
            is_float(expr["left"]) or is_float(expr["right"]))
        if not floating:
            a = expr["op_start"] - expr.start
            b = expr["op_end"] - expr.start
            return text[:a] + NEGATED[expr.op] + text[b:]
    return f"!({text})"


def fresh_name(tree: SyntaxTree, prefix: str = "_aug", taken: Iterable[str] = ()) -> str:
    """``prefix`` + smallest k >= 0 not used as an identifier anywhere in the tree."""
    used = tree.identifiers | set(taken)
    k = 0
    while f"{prefix}{k}" in used:
        k += 1
    return f"{prefix}{k}"


def _rewrite_expr_split(tree, site, ctx):
    b = site.bindings
    stmt, hoisted, t = b["stmt"], b["hoisted"], b["type"]
    src = tree.source
    name = fresh_name(tree)
    decl = f"{ctype.declaration(t, name)} = {tree.text(b['subexpr'])};"
    edits = [Edit.replace(hoisted.start, hoisted.end, name)]
    if stmt.parent is not None and stmt.parent.kind == "CompoundStmt":
        indent = _line_indent(src, stmt.start)
        sep = "\n" + indent if indent is not None else " "
        edits.append(Edit.replace(stmt.start, stmt.start, decl + sep))
    else:
        edits.append(Edit.replace(stmt.start, stmt.start, "{ " + decl + " "))
        edits.append(Edit.replace(stmt.end, stmt.end, " }"))
    return edits


def _rewrite_cond_negate(tree, site, ctx):
    b = site.bindings
    cond, then, els = b["cond"], b["then"], b["else"]
    new_cond = negate_condition(tree, cond, ctx.is_float)
    new_then = tree.text(els)
    if els.kind == "IfStmt" or (els.kind != "CompoundStmt" and _open_if(els)):
        new_then = "{ " + new_then + " }"
    return [
        Edit.replace(cond.start, cond.end, new_cond),
        Edit.replace(then.start, then.end, new_then),
        Edit.replace(els.start, els.end, tree.text(then)),
    ]


def _rewrite_assign_split(tree, site, ctx):
    node = tree.nodes[site.anchor]
    target, value = site.bindings["target"], site.bindings["value"]
    lhs = tree.text(target)
    rhs = tree.text(value)
    if value.kind not in _PRIMARY:
        rhs = f"({rhs})"
    return [Edit.replace(node.start, node.end, f"{lhs} = {lhs} {node.op[:-1]} {rhs}")]


def _rewrite_if_split(tree, site, ctx):
    node = tree.nodes[site.anchor]
    b = site.bindings
    text = (f"if ({tree.text(b['left'])}) {{ if ({tree.text(b['right'])}) "
            f"{tree.text(b['then'])} }}")
    return [Edit.replace(node.start, node.end, text)]


def _rewrite_cmp_mirror(tree, site, ctx):
    node = tree.nodes[site.anchor]
    left, right = site.bindings["left"], site.bindings["right"]
    prec = BINARY_PREC[node.op]
    left_text = tree.text(left)
    if (left.kind == "BinaryExpr" and BINARY_PREC[left.op] <= prec) or left.kind in (
            "ConditionalExpr", "AssignExpr", "CompoundAssign", "CommaExpr"):
        left_text = f"({left_text})"
    text = f"{tree.text(right)} {COMPARISONS[node.op]} {left_text}"
    return [Edit.replace(node.start, node.end, text)]


def _rewrite_for_to_while(tree, site, ctx):
    node = tree.nodes[site.anchor]
    src = tree.source
    b = site.bindings
    init, cond, step, body = b["init"], b["cond"], b["step"], b["body"]
    step_text = tree.text(step) + ";" if step is not None else ""
    cond_text = tree.text(cond) if cond is not None else "1"
    if body.kind == "CompoundStmt":
        if not step_text:
            new_body = tree.text(body)
        elif _block_declared(body) & _identifiers(tree, step):
            new_body = "{ " + tree.text(body) + " " + step_text + " }"
        elif body.children:
            last = body.children[-1]
            sep = src[tree.ends[last.t0 - 1]:last.start] or " "
            new_body = src[body.start:last.end] + sep + step_text + src[last.end:body.end]
        else:
            new_body = "{ " + step_text + " }"
    elif body.kind == "NullStmt":
        new_body = "{ " + step_text + " }" if step_text else "{ }"
    else:
        new_body = "{ " + tree.text(body) + (" " + step_text if step_text else "") + " }"
    head = tree.text(init) + " " if init is not None else ""
    text = "{ " + head + f"while ({cond_text}) " + new_body + " }"
    return [Edit.replace(node.start, node.end, text)]


def _rewrite_while_to_for(tree, site, ctx):
    node = tree.nodes[site.anchor]
    src = tree.source
    b = site.bindings
    body, last = b["body"], b["update"]
    prev_end = tree.ends[last.t0 - 1]
    new_body = src[body.start:prev_end] + src[last.end:body.end]
    text = f"for (; {tree.text(b['cond'])}; {tree.text(last['expr'])}) {new_body}"
    return [Edit.replace(node.start, node.end, text)]


REWRITERS: dict[RuleId, Callable] = {
    RuleId.R1_ExprSplit: _rewrite_expr_split,
    RuleId.R2_CondNegate: _rewrite_cond_negate,
    RuleId.R3_AssignSplit: _rewrite_assign_split,
    RuleId.R4_IfSplit: _rewrite_if_split,
    RuleId.R5_CmpMirror: _rewrite_cmp_mirror,
    RuleId.R6_ForToWhile: _rewrite_for_to_while,
    RuleId.R7_WhileToFor: _rewrite_while_to_for,
}


def _context_for(tree: SyntaxTree, node: Node) -> _Context:
    for ctx in _contexts(tree):
        if ctx.fn.start <= node.start and node.end <= ctx.fn.end:
            return ctx
    raise StaleSite("site is not inside a function")


def apply_rule(tree: SyntaxTree, site: TransformSite, ctx: _Context | None = None) -> list[Edit]:
    """Edits realizing one application of ``site.rule`` at ``site``."""
    if not 0 <= site.anchor < len(tree.nodes):
        raise StaleSite(f"no node {site.anchor}")
    node = tree.nodes[site.anchor]
    if node.span != site.span or node.kind != site.kind:
        raise StaleSite(f"node {site.anchor} does not match the recorded site")
    for bound in site.bindings.values():
        if isinstance(bound, Node) and (bound.id >= len(tree.nodes) or tree.nodes[bound.id] is not bound):
            raise StaleSite("site bindings belong to another tree")
    if ctx is None:
        ctx = _context_for(tree, node)
    return REWRITERS[site.rule](tree, site, ctx)


def transform(tree: SyntaxTree, site: TransformSite) -> str:
    return emit(tree.source, apply_rule(tree, site))
