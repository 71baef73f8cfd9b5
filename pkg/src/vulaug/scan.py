"""Token scanning and fingerprinting, backed by the compiled kernel when built.

Set ``VULAUG_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

import os

from . import _scan
from ._scan import CHAR, IDENT, NUMBER, OTHER, PP, PUNCT, STRING

if os.environ.get("VULAUG_PURE_PYTHON"):
    _impl = _scan
else:
    try:
        from . import _cscan as _impl
    except ImportError:  # extension not built
        _impl = _scan

BACKEND = "cython" if _impl is not _scan else "python"

tokenize = _impl.tokenize
normalized_tokens = _impl.normalized_tokens
fingerprint = _impl.fingerprint

__all__ = [
    "BACKEND", "CHAR", "IDENT", "NUMBER", "OTHER", "PP", "PUNCT", "STRING",
    "fingerprint", "normalized_tokens", "tokenize",
]
