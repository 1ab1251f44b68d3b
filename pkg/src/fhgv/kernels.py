"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
numpy fallback in ``_pykernels``.  Set ``FHGV_PURE_PYTHON=1`` to force the
fallback.  Both backends take C-contiguous ``uint16`` word arrays (one word per
row) and return identical results, witnesses included.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels

if os.environ.get("FHGV_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"


def _words(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.uint16)


def cyclic_distances(words: np.ndarray) -> np.ndarray:
    """d(u) = min over 0 < i < n of d(u, u_i), one value per row."""
    words = _words(words)
    if words.shape[1] < 2:
        raise ValueError("cyclic distance needs n >= 2")
    return _impl.cyclic_distances(words)


def distance_histogram(n: int, q: int) -> np.ndarray:
    """``hist[k]`` = number of words of Z_q^n with d(u) = k."""
    if n < 2:
        raise ValueError("cyclic distance needs n >= 2")
    return _impl.distance_histogram(n, q)


def greedy_extend(code: np.ndarray, size: int, cands: np.ndarray, d: int,
                  check_rotations: bool = False) -> tuple[int, np.ndarray]:
    """Scan candidates in order, appending the orbit of each accepted one to ``code``.

    A candidate is accepted when it (or, with ``check_rotations``, each of its
    rotations) is at distance >= d from all ``code[:size]``.  ``code`` is
    written in place and needs room for ``n * len(cands)`` more rows.
    Returns the new size and the indices of the accepted candidates.
    """
    return _impl.greedy_extend(code, size, _words(cands), d, check_rotations)


def min_pairwise_distance(words: np.ndarray) -> tuple[int, int, int]:
    """(distance, i, j) with i < j, the lexicographically first closest pair."""
    return _impl.min_pairwise_distance(_words(words))


def max_autocorrelation(words: np.ndarray) -> tuple[int, int, int]:
    """(value, row, delay) over delays 0 < tau < n; first witness on ties."""
    return _impl.max_autocorrelation(_words(words))


def max_crosscorrelation(words: np.ndarray) -> tuple[int, int, int, int]:
    """(value, i, j, delay) over rows i < j and delays 0 <= tau < n."""
    return _impl.max_crosscorrelation(_words(words))


def enumerate_words(n: int, q: int, start: int, stop: int) -> np.ndarray:
    return _pykernels.enumerate_words(n, q, start, stop)
