"""Command-line front end: import, split, augment, balance, verify, stats."""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .dataset import (BalanceSpec, DataError, DatasetFile, SplitSpec, build_training_set,
                      dedup_and_filter, import_tabular, read_canonical, split, write_canonical)
from .engine import AugmentConfig, RuleStats, report_stats, run_corpus
from .rules import ALL_RULES, RuleId
from .verify import COMPILER_ENV, CompilerUnavailable, load_oracle_dir, verify_corpus

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_DIVERGENT = 4
EXIT_ENVIRONMENT = 5
EXIT_INSUFFICIENT = 6


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def sha256_file(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def manifest_path(output) -> Path:
    output = Path(output)
    return output.with_name(output.name + ".manifest.json")


def write_manifest(output, command: str, config: dict, inputs, outputs, started: float,
                   **extra) -> Path:
    """Sidecar manifest next to ``output``, written via a temp file and rename."""
    data = {
        "tool": "vulaug",
        "version": __version__,
        "command": command,
        "config": config,
        "inputs": {str(p): sha256_file(p) for p in inputs},
        "outputs": {str(p): sha256_file(p) for p in outputs},
        "wall_time_s": round(time.perf_counter() - started, 3),
    }
    data.update(extra)
    path = manifest_path(output)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    tmp.replace(path)
    return path


def _parse_rules(text: str | None):
    if not text:
        return frozenset(ALL_RULES)
    try:
        return frozenset(RuleId.parse(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_ratios(text: str):
    parts = text.replace("/", ":").split(":")
    try:
        ratios = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad ratios {text!r}") from exc
    if len(ratios) != 3 or any(r <= 0 for r in ratios):
        raise argparse.ArgumentTypeError("ratios need three positive parts, e.g. 8:1:1")
    return tuple(int(r) if r.is_integer() else r for r in ratios)


# --- commands -------------------------------------------------------------

def cmd_import(args) -> int:
    started = time.perf_counter()
    column_map = {"code": args.col_code, "label": args.col_label, "id": args.col_id,
                  "cwe": args.col_cwe, "cve": args.col_cve, "project": args.col_project,
                  "date": args.col_date}
    ds = import_tabular(args.input, {k: v for k, v in column_map.items() if v},
                        delimiter=args.delimiter)
    clean = dedup_and_filter(ds)
    write_canonical(clean, args.output)
    c = clean.counts
    _log(f"{len(clean)} records written; {c['duplicates']} duplicate removed; "
         f"{c['parse_failures']} unparseable removed; {c['empty_code']} empty rows dropped")
    write_manifest(args.output, "import", {"column_map": column_map, "delimiter": args.delimiter},
                   [args.input], [args.output], started, counts=c)
    return EXIT_OK


def cmd_split(args) -> int:
    started = time.perf_counter()
    ds = read_canonical(args.input)
    if args.cutoff_year is not None:
        spec = SplitSpec("date_cutoff", cutoff_year=args.cutoff_year, seed=args.seed)
    else:
        spec = SplitSpec("random_ratio", ratios=args.ratios, seed=args.seed)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = args.prefix or Path(args.input).name.split(".")[0]
    paths = [out_dir / f"{stem}.{name}.jsonl" for name in ("train", "valid", "test")]
    parts = split(ds, spec)
    for part, path in zip(parts, paths):
        write_canonical(part, path)
    _log("split sizes: " + " ".join(f"{p.name}={len(d)}" for p, d in zip(paths, parts)))
    config = {"kind": spec.kind, "ratios": list(spec.ratios), "cutoff_year": spec.cutoff_year,
              "seed": spec.seed}
    for path in paths:
        write_manifest(path, "split", config, [args.input], paths, started)
    return EXIT_OK


def cmd_augment(args) -> int:
    started = time.perf_counter()
    ds = read_canonical(args.input)
    cfg = AugmentConfig(enabled_rules=args.rules, max_chain_depth=args.depth,
                        max_variants_per_sample=args.max_per_sample, random_seed=args.seed,
                        dedup=not args.no_dedup, global_dedup=args.global_dedup)
    originals = [r for r in ds.records if r.provenance == "original"]
    t0 = time.perf_counter()
    out, stats = run_corpus(originals, cfg, workers=args.workers)
    gen_time = time.perf_counter() - t0
    if args.variants_only:
        out = [r for r in out if r.provenance != "original"]
    write_canonical(DatasetFile(out), args.output)
    rate = stats.samples_out / gen_time if gen_time > 0 else 0.0
    _log(report_stats(stats).rstrip())
    _log(f"throughput={rate:.1f} variants/s over {gen_time:.2f}s")
    write_manifest(args.output, "augment", cfg.snapshot() | {"workers": args.workers},
                   [args.input], [args.output], started, stats=stats.to_dict(),
                   throughput_variants_per_s=round(rate, 2),
                   generation_time_s=round(gen_time, 3))
    return EXIT_OK


def cmd_balance(args) -> int:
    started = time.perf_counter()
    train = read_canonical(args.train)
    variants = read_canonical(args.variants) if args.variants else DatasetFile()
    spec = BalanceSpec(args.mode.replace("-", "_"), args.factor, args.seed)
    result = build_training_set(train, variants, spec)
    write_canonical(result.dataset, args.output)
    for w in result.warnings:
        _log("warning: " + w)
    c = result.dataset.counts
    _log(f"vulnerable={c['vulnerable']} non_vulnerable={c['non_vulnerable']} generated={c['generated']}")
    inputs = [args.train] + ([args.variants] if args.variants else [])
    write_manifest(args.output, "balance",
                   {"mode": spec.mode, "expansion_factor": spec.expansion_factor, "seed": spec.seed},
                   inputs, [args.output], started, counts=c,
                   insufficient_variants=result.insufficient, warnings=result.warnings)
    return EXIT_INSUFFICIENT if result.insufficient else EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    oracle_dir = args.oracle_dir
    if oracle_dir is None:
        from .corpus import oracle_dir as bundled
        oracle_dir = bundled()
    programs = load_oracle_dir(oracle_dir)
    cfg = AugmentConfig(enabled_rules=args.rules, max_chain_depth=args.depth)
    report = verify_corpus(programs, cfg, compiler_cmd=args.compiler_cmd, timeout=args.timeout,
                           workers=args.workers)
    text = report.render()
    sys.stdout.write(text)
    _log(f"{len(report.divergent)} divergent")
    if args.output:
        Path(args.output).write_text(text)
        write_manifest(args.output, "verify",
                       cfg.snapshot() | {"compiler_cmd": args.compiler_cmd, "timeout": args.timeout},
                       [], [args.output], started, oracle_dir=str(oracle_dir))
    return EXIT_OK if report.ok else EXIT_DIVERGENT


def cmd_stats(args) -> int:
    path = Path(args.input)
    if path.name.endswith(".manifest.json"):
        data = json.loads(path.read_text())
        if "stats" not in data:
            raise DataError(f"{path}: manifest carries no stats")
        stats = RuleStats.from_dict(data["stats"])
    else:
        ds = read_canonical(path)
        stats = RuleStats()
        roots = set()
        for r in ds.records:
            if r.provenance == "original":
                roots.add(r.id)
                continue
            roots.add(r.root_id)
            stats.samples_out += 1
            stats.applied.update(rule for rule, _ in r.lineage)
            if len(r.lineage) >= 2:
                stats.multi_transform_count += 1
        stats.samples_in = stats.parseable_samples = len(roots)
    sys.stdout.write(report_stats(stats))
    return EXIT_OK


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vulaug", description=__doc__)
    p.add_argument("--version", action="version", version=f"vulaug {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("import", help="tabular export -> canonical records (dedup + parse filter)")
    s.add_argument("input")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--col-code", required=True)
    s.add_argument("--col-label", required=True)
    s.add_argument("--col-id")
    s.add_argument("--col-cwe")
    s.add_argument("--col-cve")
    s.add_argument("--col-project")
    s.add_argument("--col-date")
    s.add_argument("--delimiter", help="field delimiter (default: tab for .tsv, else comma)")
    s.set_defaults(func=cmd_import)

    s = sub.add_parser("split", help="train/valid/test split by ratio or date cutoff")
    s.add_argument("input")
    s.add_argument("--out-dir", required=True)
    s.add_argument("--prefix")
    s.add_argument("--ratios", type=_parse_ratios, default=(8, 1, 1))
    s.add_argument("--cutoff-year", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("augment", help="generate variants for every original record")
    s.add_argument("input")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--rules", type=_parse_rules, default=frozenset(ALL_RULES),
                   help="comma list, e.g. R2,R5 (default: all)")
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--max-per-sample", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--global-dedup", action="store_true")
    s.add_argument("--no-dedup", action="store_true")
    s.add_argument("--variants-only", action="store_true", help="omit the originals from the output")
    s.set_defaults(func=cmd_augment)

    s = sub.add_parser("balance", help="build an augm-vul / augm-both training set")
    s.add_argument("train")
    s.add_argument("--variants")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--mode", choices=("augm-vul", "augm-both", "augm_vul", "augm_both"),
                   default="augm-vul")
    s.add_argument("--factor", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_balance)

    s = sub.add_parser("verify", help="differential-test all variants of an oracle corpus")
    s.add_argument("--oracle-dir", help="default: the bundled oracle corpus")
    s.add_argument("--compiler-cmd", default=os.environ.get(COMPILER_ENV),
                   help="template with {src} and {out}, e.g. 'cc -O0 -o {out} {src}'")
    s.add_argument("--timeout", type=float, default=5.0)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--rules", type=_parse_rules, default=frozenset(ALL_RULES))
    s.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="rule shares from a manifest or a variants file")
    s.add_argument("input")
    s.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if getattr(args, "depth", 1) < 1:
            parser.print_usage(sys.stderr)
            _log("error: --depth must be >= 1")
            return EXIT_USAGE
        return args.func(args)
    except CompilerUnavailable as exc:
        _log(f"environment error: {exc}")
        return EXIT_ENVIRONMENT
    except (DataError, OSError, UnicodeError) as exc:
        _log(f"data error: {exc}")
        return EXIT_DATA
    except ValueError as exc:
        _log(f"usage error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
