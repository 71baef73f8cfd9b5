"""Dataset ingestion, canonical line-delimited storage, splitting and class balancing."""

from __future__ import annotations

import csv
import json
import random
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Optional

from . import scan
from .engine import GENERATED, NON_VULNERABLE, ORIGINAL, VULNERABLE, CodeSample
from .syntax import FRAGMENT, ParseError, parse_unit

SCHEMA_VERSION = 1


class DataError(ValueError):
    pass


class MissingColumn(DataError):
    pass


class MalformedRow(DataError):
    def __init__(self, index: int, message: str):
        super().__init__(f"row {index}: {message}")
        self.index = index


class MissingDate(DataError):
    pass


class SchemaMismatch(DataError):
    pass


class LeakageError(DataError):
    """A variant's root original is not part of the training split."""


@dataclass
class DatasetFile:
    records: list = field(default_factory=list)
    path: Optional[Path] = None
    counts: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def by_label(self, label: int) -> list:
        return [r for r in self.records if r.label == label]


@dataclass(frozen=True)
class SplitSpec:
    kind: str = "random_ratio"  # or "date_cutoff"
    ratios: tuple = (8, 1, 1)
    cutoff_year: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("random_ratio", "date_cutoff"):
            raise ValueError(f"unknown split kind {self.kind!r}")
        if len(self.ratios) != 3 or any(Fraction(r) <= 0 for r in self.ratios):
            raise ValueError("ratios must be three positive numbers")
        if self.kind == "date_cutoff" and self.cutoff_year is None:
            raise ValueError("date_cutoff needs cutoff_year")


@dataclass(frozen=True)
class BalanceSpec:
    mode: str = "augm_vul"  # or "augm_both"
    expansion_factor: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("augm_vul", "augm_both"):
            raise ValueError(f"unknown balance mode {self.mode!r}")
        if self.expansion_factor < 1:
            raise ValueError("expansion_factor must be >= 1")


@dataclass
class BalanceResult:
    dataset: DatasetFile
    insufficient: bool = False
    warnings: list = field(default_factory=list)


# --- canonical format -----------------------------------------------------

def _to_json(s: CodeSample) -> dict:
    return {
        "id": s.id,
        "label": s.label,
        "cwe": s.cwe,
        "cve": s.cve,
        "project": s.project,
        "date": s.published,
        "provenance": s.provenance,
        "parent_id": s.parent_id,
        "lineage": [[rule, [a, b]] for rule, (a, b) in s.lineage],
        "source": s.source,
    }


def _from_json(d: dict) -> CodeSample:
    return CodeSample(
        id=d["id"], source=d["source"], label=int(d["label"]), cwe=d.get("cwe"),
        cve=d.get("cve"), project=d.get("project"), published=d.get("date"),
        provenance=d.get("provenance", ORIGINAL),
        lineage=tuple((rule, (a, b)) for rule, (a, b) in d.get("lineage", ())),
        parent_id=d.get("parent_id"))


def dumps_record(s: CodeSample) -> str:
    return json.dumps(_to_json(s), ensure_ascii=True, separators=(",", ":"))


def write_canonical(ds: DatasetFile | Iterable[CodeSample], path) -> None:
    records = ds.records if isinstance(ds, DatasetFile) else list(ds)
    ids = set()
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        fh.write(json.dumps({"schema_version": SCHEMA_VERSION, "records": len(records)}) + "\n")
        for r in records:
            if r.id in ids:
                raise DataError(f"duplicate id {r.id!r}")
            ids.add(r.id)
            fh.write(dumps_record(r) + "\n")
    tmp.replace(path)


def read_canonical(path) -> DatasetFile:
    path = Path(path)
    records = []
    with open(path, encoding="ascii") as fh:
        header_line = fh.readline()
        if not header_line:
            raise SchemaMismatch(f"{path}: missing header")
        try:
            header = json.loads(header_line)
        except json.JSONDecodeError as exc:
            raise SchemaMismatch(f"{path}: bad header") from exc
        if not isinstance(header, dict) or header.get("schema_version") != SCHEMA_VERSION:
            raise SchemaMismatch(f"{path}: schema_version {header.get('schema_version') if isinstance(header, dict) else None!r}")
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            try:
                records.append(_from_json(json.loads(line)))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise DataError(f"{path}:{lineno}: {exc}") from exc
    return DatasetFile(records, path)


# --- tabular import -------------------------------------------------------

_TRUE_LABELS = {"1", "true", "yes", "vulnerable", "vul"}
_FALSE_LABELS = {"0", "false", "no", "non_vulnerable", "non-vulnerable", "clean"}


def _parse_label(value: str, index: int) -> int:
    v = value.strip().lower()
    if v in _TRUE_LABELS:
        return VULNERABLE
    if v in _FALSE_LABELS:
        return NON_VULNERABLE
    raise MalformedRow(index, f"unrecognized label {value!r}")


def import_tabular(path, column_map: Mapping[str, str], delimiter: str | None = None) -> DatasetFile:
    """Read a delimiter-separated export (Big-Vul shaped) into original samples.

    ``column_map`` maps our field names (code, label, id, cwe, cve, project, date)
    to header names. Text is decoded as latin-1 so arbitrary bytes survive.
    """
    path = Path(path)
    csv.field_size_limit(sys.maxsize)
    if delimiter is None:
        delimiter = "\t" if path.suffix.lower() in (".tsv", ".tab") else ","
    records = []
    empty = 0
    with open(path, encoding="latin-1", newline="") as fh:
        reader = csv.DictReader(fh, delimiter=delimiter)
        header = reader.fieldnames or []
        for key in ("code", "label"):
            if key not in column_map:
                raise MissingColumn(f"no column mapped for {key!r}")
        for key, col in column_map.items():
            if col and col not in header:
                raise MissingColumn(f"column {col!r} (for {key}) not in header")
        col = {k: v for k, v in column_map.items() if v}
        for index, row in enumerate(reader):
            if None in row or any(row.get(c) is None for c in col.values()):
                raise MalformedRow(index, "wrong number of fields")
            code = row[col["code"]]
            if not code.strip():
                empty += 1
                continue

            def opt(key):
                value = row[col[key]].strip() if key in col else ""
                return value or None

            records.append(CodeSample(
                id=opt("id") or f"row{index}", source=code,
                label=_parse_label(row[col["label"]], index), cwe=opt("cwe"), cve=opt("cve"),
                project=opt("project"), published=opt("date")))
    ids = set()
    for i, r in enumerate(records):
        if r.id in ids:
            raise MalformedRow(i, f"duplicate id {r.id!r}")
        ids.add(r.id)
    return DatasetFile(records, path, {"rows": len(records) + empty, "empty_code": empty})


def dedup_and_filter(ds: DatasetFile, mode: str = FRAGMENT) -> DatasetFile:
    """Drop fingerprint duplicates (first wins) and records that do not parse."""
    seen = set()
    kept = []
    duplicates = parse_failures = 0
    for r in ds.records:
        fp = scan.fingerprint(r.source)
        if fp in seen:
            duplicates += 1
            continue
        try:
            parse_unit(r.source, mode)
        except ParseError:
            parse_failures += 1
            continue
        seen.add(fp)
        kept.append(r)
    counts = dict(ds.counts, duplicates=duplicates, parse_failures=parse_failures)
    return DatasetFile(kept, ds.path, counts)


# --- splitting ------------------------------------------------------------

def _cuts(n: int, ratios) -> tuple[int, int]:
    fr = [Fraction(r) for r in ratios]
    total = sum(fr)
    a = (n * fr[0] / total).__floor__()
    b = (n * (fr[0] + fr[1]) / total).__floor__()
    return a, b


def split(ds: DatasetFile, spec: SplitSpec) -> tuple[DatasetFile, DatasetFile, DatasetFile]:
    records = list(ds.records)
    rng = random.Random(spec.seed)
    if spec.kind == "random_ratio":
        rng.shuffle(records)
        a, b = _cuts(len(records), spec.ratios)
        parts = records[:a], records[a:b], records[b:]
    else:
        undated = [r.id for r in records if r.year is None]
        if undated:
            raise MissingDate(f"{len(undated)} records lack a date (first: {undated[0]!r})")
        train = [r for r in records if r.year < spec.cutoff_year]
        rest = [r for r in records if r.year >= spec.cutoff_year]
        rng.shuffle(rest)
        half = len(rest) // 2
        parts = train, rest[:half], rest[half:]
    return tuple(DatasetFile(list(p)) for p in parts)


# --- balancing ------------------------------------------------------------

def _round_robin(roots: list[str], by_root: Mapping[str, list], k: int, rng: random.Random) -> list:
    """Pick ``k`` variants cycling over roots, so each root contributes before any repeats."""
    queues = {}
    for root in roots:
        pool = list(by_root.get(root, ()))
        rng.shuffle(pool)
        if pool:
            queues[root] = pool
    order = [r for r in roots if r in queues]
    rng.shuffle(order)
    picked = []
    while len(picked) < k and order:
        remaining = []
        for root in order:
            if len(picked) >= k:
                break
            picked.append(queues[root].pop())
            if queues[root]:
                remaining.append(root)
        order = remaining
    return picked


def build_training_set(train: DatasetFile, variants: DatasetFile | Iterable[CodeSample],
                       spec: BalanceSpec) -> BalanceResult:
    """Materialize augm-vul or augm-both from a training split and its generated variants."""
    originals = [r for r in train.records if r.provenance == ORIGINAL]
    train_ids = {r.id for r in originals}
    generated = [v for v in (variants.records if isinstance(variants, DatasetFile) else variants)
                 if v.provenance == GENERATED]
    leaked = [v.id for v in generated if v.root_id not in train_ids]
    if leaked:
        raise LeakageError(f"{len(leaked)} variants have roots outside train (first: {leaked[0]!r})")
    rng = random.Random(spec.seed)
    vul = [r for r in originals if r.label == VULNERABLE]
    non = [r for r in originals if r.label != VULNERABLE]
    target = spec.expansion_factor * len(vul)
    by_root = defaultdict(list)
    for v in sorted(generated, key=lambda v: v.id):
        by_root[v.root_id].append(v)
    warnings = []

    def fill(roots_pool: list, name: str) -> list:
        need = target - len(roots_pool)
        if need <= 0:
            return list(roots_pool[:target])
        picked = _round_robin([r.id for r in roots_pool], by_root, need, rng)
        if len(picked) < need:
            warnings.append(f"{name}: only {len(roots_pool) + len(picked)} of {target} available")
        return list(roots_pool) + picked

    if spec.mode == "augm_vul":
        vul_out = fill(vul, "vulnerable")
        k = min(len(vul_out), len(non))
        non_out = rng.sample(non, k)
        if k < len(vul_out):
            warnings.append(f"non-vulnerable: only {k} of {len(vul_out)} available")
    else:
        vul_out = fill(vul, "vulnerable")
        base = rng.sample(non, min(len(non), len(vul)))
        non_out = fill(base, "non-vulnerable")
    n = min(len(vul_out), len(non_out))
    insufficient = bool(warnings)
    vul_out, non_out = vul_out[:n], non_out[:n]
    out = DatasetFile(vul_out + non_out, counts={
        "vulnerable": len(vul_out), "non_vulnerable": len(non_out),
        "generated": sum(1 for r in vul_out + non_out if r.provenance == GENERATED)})
    return BalanceResult(out, insufficient, warnings)
