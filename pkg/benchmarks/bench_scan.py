"""Compare the compiled and pure-Python scanning kernels on the bundled corpus.

    python3 benchmarks/bench_scan.py [--repeat N] [--variants]

With ``--variants`` the workload is every depth-3 variant of the corpus, the
set that the engine fingerprints during deduplication.
"""

import argparse
import statistics
import time

from vulaug import _scan
from vulaug.corpus import load_corpus

try:
    from vulaug import _cscan
except ImportError:  # extension not built
    _cscan = None


def _time(fn, texts, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for t in texts:
            fn(t)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--variants", action="store_true")
    args = ap.parse_args(argv)

    texts = [s.source for s in load_corpus()]
    if args.variants:
        from vulaug.engine import AugmentConfig, run_corpus
        out, _ = run_corpus(load_corpus(), AugmentConfig(), workers=1)
        texts = [s.source for s in out]
    nbytes = sum(len(t) for t in texts)
    print(f"workload: {len(texts)} sources, {nbytes / 1e6:.2f} MB")

    backends = [("python", _scan)] + ([("cython", _cscan)] if _cscan else [])
    results = {}
    for name, mod in backends:
        for op in ("tokenize", "fingerprint"):
            secs = _time(getattr(mod, op), texts, args.repeat)
            results[name, op] = secs
            print(f"{name:>7} {op:<12} {secs * 1e3:9.1f} ms  {nbytes / secs / 1e6:8.2f} MB/s")
    if _cscan is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return
    for op in ("tokenize", "fingerprint"):
        print(f"speedup {op:<12} {results['python', op] / results['cython', op]:6.2f}x")


if __name__ == "__main__":
    main()
