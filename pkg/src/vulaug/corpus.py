"""Loaders for the bundled sample data.

Corpus files hold several functions each; every function is preceded by a
marker line::

    // @sample <id> [vul] [CWE-<n>] [project=<name>] [date=<YYYY-MM-DD>]
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .engine import NON_VULNERABLE, VULNERABLE, CodeSample

_MARKER = re.compile(r"^// @sample[ \t]+(\S+)(.*)$", re.M)


def data_dir() -> Path:
    return Path(str(resources.files("vulaug") / "data"))


def oracle_dir() -> Path:
    return data_dir() / "oracle"


def listing1() -> CodeSample:
    src = (data_dir() / "listing1.c").read_text(encoding="latin-1")
    return CodeSample("listing1", src, VULNERABLE)


def parse_corpus_text(text: str, origin: str = "") -> list[CodeSample]:
    samples = []
    marks = list(_MARKER.finditer(text))
    for i, m in enumerate(marks):
        body_start = m.end() + 1
        body_end = marks[i + 1].start() if i + 1 < len(marks) else len(text)
        body = text[body_start:body_end].strip("\n") + "\n"
        attrs = m.group(2).split()
        label = VULNERABLE if "vul" in attrs else NON_VULNERABLE
        cwe = next((a for a in attrs if a.startswith("CWE-")), None)
        kv = dict(a.split("=", 1) for a in attrs if "=" in a)
        samples.append(CodeSample(m.group(1), body, label, cwe=cwe,
                                  project=kv.get("project", origin or None),
                                  published=kv.get("date")))
    return samples


def load_corpus(directory=None) -> list[CodeSample]:
    """All bundled functions, in file then document order."""
    d = Path(directory) if directory else data_dir() / "corpus"
    out = []
    for path in sorted(d.glob("*.c")):
        out.extend(parse_corpus_text(path.read_text(encoding="latin-1"), path.stem))
    ids = [s.id for s in out]
    if len(ids) != len(set(ids)):
        raise ValueError("duplicate sample ids in corpus")
    return out
