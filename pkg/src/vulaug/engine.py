"""Breadth-first variant generation over rule sites, with redundancy elimination."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from . import scan
from .rules import ALL_RULES, RuleId, StaleSite, _context_for, apply_rule, find_sites
from .syntax import FRAGMENT, ParseError, Span, emit, parse_unit

VULNERABLE = 1
NON_VULNERABLE = 0
ORIGINAL = "original"
GENERATED = "generated"


@dataclass(frozen=True)
class CodeSample:
    id: str
    source: str
    label: int
    cwe: Optional[str] = None
    cve: Optional[str] = None
    project: Optional[str] = None
    published: Optional[str] = None  # ISO date string, "YYYY-MM-DD" or "YYYY"
    provenance: str = ORIGINAL
    lineage: tuple = ()  # ((RuleId value, (start, end)), ...) relative to the root original
    parent_id: Optional[str] = None

    @property
    def root_id(self) -> str:
        return self.parent_id if self.provenance == GENERATED and self.parent_id else self.id

    @property
    def year(self) -> int | None:
        if not self.published:
            return None
        try:
            return int(str(self.published)[:4])
        except ValueError:
            return None


@dataclass(frozen=True)
class AugmentConfig:
    enabled_rules: frozenset = frozenset(ALL_RULES)
    max_chain_depth: int = 3
    max_variants_per_sample: Optional[int] = None
    random_seed: int = 0
    dedup: bool = True
    global_dedup: bool = False
    mode: str = FRAGMENT

    def __post_init__(self):
        if self.max_chain_depth < 1:
            raise ValueError("max_chain_depth must be >= 1")
        if not self.enabled_rules:
            raise ValueError("enabled_rules must be non-empty")
        if self.max_variants_per_sample is not None and self.max_variants_per_sample < 1:
            raise ValueError("max_variants_per_sample must be positive")
        object.__setattr__(self, "enabled_rules",
                           frozenset(RuleId.parse(r) if isinstance(r, str) else r for r in self.enabled_rules))

    def snapshot(self) -> dict:
        return {
            "enabled_rules": sorted(r.value for r in self.enabled_rules),
            "max_chain_depth": self.max_chain_depth,
            "max_variants_per_sample": self.max_variants_per_sample,
            "random_seed": self.random_seed,
            "dedup": self.dedup,
            "global_dedup": self.global_dedup,
            "mode": self.mode,
        }


@dataclass
class RuleStats:
    applied: Counter = field(default_factory=Counter)
    samples_in: int = 0
    samples_out: int = 0
    multi_transform_count: int = 0
    parse_failures: int = 0
    variant_parse_failures: int = 0
    guard_failures: Counter = field(default_factory=Counter)
    duplicates: int = 0
    structural_rejects: int = 0
    parseable_samples: int = 0

    def merge(self, other: RuleStats) -> RuleStats:
        self.applied.update(other.applied)
        self.guard_failures.update(other.guard_failures)
        for name in ("samples_in", "samples_out", "multi_transform_count", "parse_failures",
                     "variant_parse_failures", "duplicates", "structural_rejects",
                     "parseable_samples"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        return self

    def to_dict(self) -> dict:
        return {
            "applied": {r.value: self.applied.get(r.value, 0) for r in ALL_RULES},
            "samples_in": self.samples_in,
            "samples_out": self.samples_out,
            "multi_transform_count": self.multi_transform_count,
            "parse_failures": self.parse_failures,
            "variant_parse_failures": self.variant_parse_failures,
            "guard_failures": dict(sorted(self.guard_failures.items())),
            "duplicates": self.duplicates,
            "structural_rejects": self.structural_rejects,
            "parseable_samples": self.parseable_samples,
        }

    @classmethod
    def from_dict(cls, d: dict) -> RuleStats:
        stats = cls()
        stats.applied = Counter({k: v for k, v in d.get("applied", {}).items() if v})
        stats.guard_failures = Counter(d.get("guard_failures", {}))
        for name in ("samples_in", "samples_out", "multi_transform_count", "parse_failures",
                     "variant_parse_failures", "duplicates", "structural_rejects",
                     "parseable_samples"):
            setattr(stats, name, d.get(name, 0))
        return stats


def _expand(tree, rules, stats=None):
    """(lineage step, new source) for every site of ``tree``."""
    sites, failures = find_sites(tree, rules)
    if stats is not None:
        stats.guard_failures.update(f.reason.value for f in failures)
    ctx_cache = {}
    for site in sites:
        node = tree.nodes[site.anchor]
        fn = next((c for c in ctx_cache if c[0] <= node.start and node.end <= c[1]), None)
        if fn is None:
            ctx = _context_for(tree, node)
            fn = (ctx.fn.start, ctx.fn.end)
            ctx_cache[fn] = ctx
        edits = apply_rule(tree, site, ctx_cache[fn])
        yield (site.rule.value, (site.span.start, site.span.end)), emit(tree.source, edits)


def generate_variants(sample: CodeSample, cfg: AugmentConfig) -> tuple[list[CodeSample], RuleStats]:
    """Enumerate variants level by level, up to ``cfg.max_chain_depth`` rule applications."""
    stats = RuleStats(samples_in=1)
    try:
        root = parse_unit(sample.source, cfg.mode)
    except ParseError:
        stats.parse_failures = 1
        return [], stats
    stats.parseable_samples = 1
    rules = sorted(cfg.enabled_rules, key=ALL_RULES.index)
    root_kinds = root.kind_sequence()
    seen = {scan.fingerprint(sample.source)}
    cap = cfg.max_variants_per_sample
    out: list[CodeSample] = []
    frontier = [(root, ())]
    for depth in range(cfg.max_chain_depth):
        next_frontier = []
        for tree, lineage in frontier:
            for step, text in _expand(tree, rules, stats if depth == 0 else None):
                if cfg.dedup:
                    fp = scan.fingerprint(text)
                    if fp in seen:
                        stats.duplicates += 1
                        continue
                    seen.add(fp)
                try:
                    new_tree = parse_unit(text, cfg.mode)
                except ParseError:
                    stats.variant_parse_failures += 1
                    continue
                if new_tree.kind_sequence() == root_kinds:
                    stats.structural_rejects += 1
                    continue
                chain = lineage + (step,)
                out.append(CodeSample(
                    id=f"{sample.id}#v{len(out)}", source=text, label=sample.label,
                    cwe=sample.cwe, cve=sample.cve, project=sample.project,
                    published=sample.published, provenance=GENERATED, lineage=chain,
                    parent_id=sample.id))
                next_frontier.append((new_tree, chain))
                if cap is not None and len(out) >= cap:
                    break
            if cap is not None and len(out) >= cap:
                break
        if cap is not None and len(out) >= cap:
            break
        frontier = next_frontier
    for v in out:
        stats.applied.update(rule for rule, _ in v.lineage)
    stats.samples_out = len(out)
    stats.multi_transform_count = sum(1 for v in out if len(v.lineage) >= 2)
    return out, stats


def replay_lineage(root: CodeSample | str, lineage: Iterable, mode: str = FRAGMENT) -> str:
    """Re-apply a recorded (rule, span) chain to the root original's source."""
    src = root if isinstance(root, str) else root.source
    for rule_name, (start, end) in lineage:
        rule = RuleId.parse(rule_name)
        tree = parse_unit(src, mode)
        sites, _ = find_sites(tree, [rule])
        site = next((s for s in sites if s.span == Span(start, end)), None)
        if site is None:
            raise StaleSite(f"no {rule.value} site at {start}:{end}")
        src = emit(src, apply_rule(tree, site))
    return src


def _worker(args):
    sample, cfg = args
    return generate_variants(sample, cfg)


def run_corpus(samples: Iterable[CodeSample], cfg: AugmentConfig, workers: int = 1
               ) -> tuple[list[CodeSample], RuleStats]:
    """Originals followed by their variants, in input order, plus merged stats."""
    samples = list(samples)
    total = RuleStats()
    out: list[CodeSample] = []
    jobs = [(s, cfg) for s in samples]
    if workers <= 1 or len(samples) <= 1:
        results: Iterator = map(_worker, jobs)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_worker, jobs, chunksize=max(1, len(jobs) // (workers * 4)))
    global_seen: set = set()
    try:
        for sample, (variants, stats) in zip(samples, results):
            if cfg.global_dedup:
                kept = []
                for v in variants:
                    fp = scan.fingerprint(v.source)
                    if fp in global_seen:
                        stats.duplicates += 1
                        continue
                    global_seen.add(fp)
                    kept.append(v)
                if len(kept) != len(variants):
                    stats = _restat(stats, kept)
                variants = kept
            total.merge(stats)
            out.append(sample)
            out.extend(variants)
    finally:
        if pool is not None:
            pool.shutdown()
    return out, total


def _restat(stats: RuleStats, kept: list[CodeSample]) -> RuleStats:
    stats.applied = Counter(rule for v in kept for rule, _ in v.lineage)
    stats.samples_out = len(kept)
    stats.multi_transform_count = sum(1 for v in kept if len(v.lineage) >= 2)
    return stats


def report_stats(stats: RuleStats) -> str:
    """Readable rule shares (descending) followed by key=value lines."""
    total = sum(stats.applied.values())
    lines = ["rule shares:"]
    shares = []
    for rule in ALL_RULES:
        n = stats.applied.get(rule.value, 0)
        shares.append((n, rule.value, 100.0 * n / total if total else 0.0))
    shares.sort(key=lambda t: (-t[0], t[1]))
    for n, name, pct in shares:
        lines.append(f"  {name:<16} {n:>9}  {pct:6.2f}%")
    multi = 100.0 * stats.multi_transform_count / stats.samples_out if stats.samples_out else 0.0
    mean = stats.samples_out / stats.parseable_samples if stats.parseable_samples else 0.0
    lines.append(f"variants: {stats.samples_out} from {stats.samples_in} samples "
                 f"({mean:.2f} per parseable sample, {multi:.1f}% multi-transform)")
    lines.append("")
    for n, name, pct in shares:
        lines.append(f"share.{name}={pct:.2f}")
    d = stats.to_dict()
    for key in ("samples_in", "samples_out", "multi_transform_count", "parse_failures",
                "variant_parse_failures", "duplicates", "structural_rejects", "parseable_samples"):
        lines.append(f"{key}={d[key]}")
    lines.append(f"multi_transform_pct={multi:.2f}")
    lines.append(f"mean_variants_per_sample={mean:.2f}")
    for reason, n in d["guard_failures"].items():
        lines.append(f"guard_failures.{reason}={n}")
    return "\n".join(lines) + "\n"

