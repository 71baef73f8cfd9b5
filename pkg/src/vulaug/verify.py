"""Re-parse, structural-change and compile-and-run differential checks for variants."""

from __future__ import annotations

import os
import shlex
import shutil
import subprocess
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence

from . import scan
from .engine import AugmentConfig, CodeSample, generate_variants
from .syntax import ERROR, FRAGMENT, UNIT, ParseError, parse_unit

DEFAULT_TIMEOUT = 5.0
COMPILER_ENV = "VULAUG_CC"
OPT_LEVEL = "-O0"


class CompilerUnavailable(RuntimeError):
    """The compiler cannot be found or executed at all."""


class Status(str, Enum):
    equivalent = "equivalent"
    divergent = "divergent"
    incomparable = "incomparable"


@dataclass(frozen=True)
class CaseEvidence:
    input_name: str
    stdout_a: bytes
    stdout_b: bytes
    exit_a: int
    exit_b: int


@dataclass
class EquivalenceVerdict:
    status: Status
    evidence: list = field(default_factory=list)
    incomparable_reason: Optional[str] = None  # not_self_contained | compile_failure | timeout
    detail: str = ""


@dataclass
class OracleProgram:
    name: str
    source: str
    input_cases: list  # [(name, stdin text)]
    expected: Optional[list] = None

    @classmethod
    def load(cls, directory) -> OracleProgram:
        d = Path(directory)
        src_files = sorted(d.glob("*.c"))
        if len(src_files) != 1:
            raise ValueError(f"{d}: expected exactly one .c file, found {len(src_files)}")
        inputs = [(p.name, p.read_text(encoding="latin-1")) for p in sorted(d.glob("input_*.txt"))]
        return cls(d.name, src_files[0].read_text(encoding="latin-1"), inputs)


def load_oracle_dir(root) -> list[OracleProgram]:
    return [OracleProgram.load(p) for p in sorted(Path(root).iterdir()) if p.is_dir()]


# --- static checks --------------------------------------------------------

def _changed_region(a: str, b: str) -> tuple[int, int]:
    """[start, end) region of ``b`` that differs from ``a`` (common prefix/suffix removed)."""
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    j = 0
    while j < n - i and a[len(a) - 1 - j] == b[len(b) - 1 - j]:
        j += 1
    return i, len(b) - j


def reparse_check(variant: CodeSample | str, original: CodeSample | str | None = None,
                  mode: str = FRAGMENT) -> bool:
    """Variant parses, and no error-flagged region overlaps what changed.

    Without ``original`` every error-flagged region counts.
    """
    src = variant if isinstance(variant, str) else variant.source
    try:
        tree = parse_unit(src, mode)
    except ParseError:
        return False
    errors = [n for n in tree.flagged if n.flags & ERROR]
    if not errors:
        return True
    if original is None:
        return False
    orig = original if isinstance(original, str) else original.source
    start, end = _changed_region(orig, src)
    return not any(n.start < end and start < n.end for n in errors)


def structural_change_check(original: CodeSample | str, variant: CodeSample | str,
                            mode: str = FRAGMENT) -> bool:
    a = original if isinstance(original, str) else original.source
    b = variant if isinstance(variant, str) else variant.source
    if scan.fingerprint(a) == scan.fingerprint(b):
        return False
    try:
        ta = parse_unit(a, mode)
        tb = parse_unit(b, mode)
    except ParseError:
        return False
    return ta.kind_sequence() != tb.kind_sequence()


# --- differential testing -------------------------------------------------

def default_compiler_cmd() -> str:
    env = os.environ.get(COMPILER_ENV)
    if env:
        return env
    for name in ("cc", "gcc", "clang"):
        if shutil.which(name):
            return f"{name} {OPT_LEVEL} -w -o {{out}} {{src}}"
    raise CompilerUnavailable("no C compiler found on PATH (set VULAUG_CC)")


def check_compiler(compiler_cmd: str) -> None:
    argv = shlex.split(compiler_cmd)
    if not argv or shutil.which(argv[0]) is None:
        raise CompilerUnavailable(f"compiler {argv[0] if argv else compiler_cmd!r} not found")


def _compile(compiler_cmd: str, source: str, workdir: Path, stem: str, timeout: float):
    src = workdir / f"{stem}.c"
    out = workdir / stem
    src.write_bytes(source.encode("latin-1"))
    argv = [a.format(src=str(src), out=str(out)) for a in shlex.split(compiler_cmd)]
    try:
        proc = subprocess.run(argv, capture_output=True, timeout=max(timeout * 6, 30))
    except FileNotFoundError as exc:
        raise CompilerUnavailable(str(exc)) from exc
    except subprocess.TimeoutExpired:
        return None, "compiler timed out"
    if proc.returncode != 0 or not out.exists():
        return None, proc.stderr.decode("latin-1", "replace")[-2000:]
    return out, ""


def _run(binary: Path, stdin: str, timeout: float):
    try:
        proc = subprocess.run([str(binary)], input=stdin.encode("latin-1"), capture_output=True,
                              timeout=timeout)
    except subprocess.TimeoutExpired:
        return None
    return proc.stdout, proc.returncode


def _has_main(source: str) -> bool:
    try:
        tree = parse_unit(source, UNIT)
    except ParseError:
        return False
    return any(fn["name"] == "main" for fn in tree.functions())


@dataclass
class _Reference:
    """Original program built once; its per-input results reused across variants."""

    verdict: Optional[EquivalenceVerdict]
    results: dict = field(default_factory=dict)


def _reference(prog: OracleProgram, cmd: str, timeout: float) -> _Reference:
    if not _has_main(prog.source):
        return _Reference(EquivalenceVerdict(Status.incomparable, incomparable_reason="not_self_contained"))
    with tempfile.TemporaryDirectory(prefix="vulaug-") as tmp:
        binary, err = _compile(cmd, prog.source, Path(tmp), "a", timeout)
        if binary is None:
            return _Reference(EquivalenceVerdict(Status.incomparable, incomparable_reason="compile_failure",
                                                 detail=err))
        results = {}
        for name, stdin in prog.input_cases:
            results[name] = _run(binary, stdin, timeout)
            if results[name] is None:
                return _Reference(EquivalenceVerdict(Status.incomparable, incomparable_reason="timeout",
                                                     detail=name))
    return _Reference(None, results)


def _against(ref: _Reference, prog: OracleProgram, variant_source: str, cmd: str,
             timeout: float) -> EquivalenceVerdict:
    if ref.verdict is not None:
        return ref.verdict
    if not _has_main(variant_source):
        return EquivalenceVerdict(Status.incomparable, incomparable_reason="not_self_contained")
    with tempfile.TemporaryDirectory(prefix="vulaug-") as tmp:
        binary, err = _compile(cmd, variant_source, Path(tmp), "b", timeout)
        if binary is None:
            return EquivalenceVerdict(Status.divergent, detail="variant failed to compile: " + err)
        evidence = []
        timed_out = None
        for name, stdin in prog.input_cases:
            ra = ref.results[name]
            rb = _run(binary, stdin, timeout)
            if rb is None:
                timed_out = timed_out or name
            elif ra != rb:
                evidence.append(CaseEvidence(name, ra[0], rb[0], ra[1], rb[1]))
    # a concrete mismatch on one input outweighs a hang on another
    if evidence:
        return EquivalenceVerdict(Status.divergent, evidence)
    if timed_out:
        return EquivalenceVerdict(Status.incomparable, incomparable_reason="timeout", detail=timed_out)
    return EquivalenceVerdict(Status.equivalent)


def differential_test(prog: OracleProgram, variant_source: str, compiler_cmd: str | None = None,
                      timeout: float = DEFAULT_TIMEOUT) -> EquivalenceVerdict:
    """Compile original and variant at the lowest optimization level and compare runs."""
    if not _has_main(prog.source) or not _has_main(variant_source):
        return EquivalenceVerdict(Status.incomparable, incomparable_reason="not_self_contained")
    cmd = compiler_cmd or default_compiler_cmd()
    check_compiler(cmd)
    return _against(_reference(prog, cmd, timeout), prog, variant_source, cmd, timeout)


@dataclass
class VerifyReport:
    programs: int = 0
    variants: int = 0
    equivalent: int = 0
    divergent: list = field(default_factory=list)  # [(program, variant id, lineage, verdict)]
    incomparable: list = field(default_factory=list)
    reparse_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.divergent and not self.reparse_failures

    def render(self) -> str:
        lines = [f"programs={self.programs}", f"variants={self.variants}",
                 f"equivalent={self.equivalent}", f"divergent={len(self.divergent)}",
                 f"incomparable={len(self.incomparable)}",
                 f"reparse_failures={len(self.reparse_failures)}"]
        for prog, vid, lineage, verdict in self.divergent:
            chain = " -> ".join(f"{r}@{a}:{b}" for r, (a, b) in lineage)
            lines.append(f"DIVERGENT {prog} {vid} [{chain}] {verdict.detail}".rstrip())
            for ev in verdict.evidence[:3]:
                lines.append(f"  {ev.input_name}: exit {ev.exit_a} vs {ev.exit_b}; "
                             f"stdout {ev.stdout_a[:60]!r} vs {ev.stdout_b[:60]!r}")
        for prog, vid, lineage, verdict in self.incomparable:
            lines.append(f"INCOMPARABLE {prog} {vid} {verdict.incomparable_reason}")
        return "\n".join(lines) + "\n"


def verify_corpus(programs: Sequence[OracleProgram], cfg: AugmentConfig,
                  compiler_cmd: str | None = None, timeout: float = DEFAULT_TIMEOUT,
                  workers: int = 1) -> VerifyReport:
    """Generate every variant of every program and differential-test each one."""
    report = VerifyReport(programs=len(programs))
    if not programs:
        return report
    cmd = compiler_cmd or default_compiler_cmd()
    check_compiler(cmd)
    cfg = AugmentConfig(**{**cfg.__dict__, "mode": UNIT})
    jobs = []
    for prog in programs:
        variants, _ = generate_variants(CodeSample(prog.name, prog.source, 0), cfg)
        for v in variants:
            if not reparse_check(v, prog.source, UNIT):
                report.reparse_failures.append((prog.name, v.id, v.lineage))
                continue
            jobs.append((prog, v))
    report.variants = len(jobs) + len(report.reparse_failures)

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        refs = dict(zip((p.name for p in programs),
                        pool.map(lambda p: _reference(p, cmd, timeout), programs)))

        def run(job):
            prog, v = job
            return job, _against(refs[prog.name], prog, v.source, cmd, timeout)

        for (prog, v), verdict in pool.map(run, jobs):
            if verdict.status is Status.equivalent:
                report.equivalent += 1
            elif verdict.status is Status.divergent:
                report.divergent.append((prog.name, v.id, v.lineage, verdict))
            else:
                report.incomparable.append((prog.name, v.id, v.lineage, verdict))
    return report
