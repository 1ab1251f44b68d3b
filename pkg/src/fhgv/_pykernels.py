"""numpy implementations of the compiled kernels (used when the extension is absent)."""
from __future__ import annotations

import numpy as np

_CHUNK = 1 << 14


def cyclic_distances(words: np.ndarray) -> np.ndarray:
    words = np.ascontiguousarray(words, dtype=np.uint16)
    m, n = words.shape
    out = np.full(m, n, dtype=np.int64)
    for lo in range(0, m, _CHUNK):
        block = words[lo:lo + _CHUNK]
        best = out[lo:lo + _CHUNK]
        for s in range(1, n // 2 + 1):
            cur = np.count_nonzero(block != np.roll(block, -s, axis=1), axis=1)
            np.minimum(best, cur, out=best)
    return out


def enumerate_words(n: int, q: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of Z_q^n in lexicographic order."""
    idx = np.arange(start, stop, dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers[None, :]) % q).astype(np.uint16)


def distance_histogram(n: int, q: int) -> np.ndarray:
    total = q ** n
    hist = np.zeros(n + 1, dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        d = cyclic_distances(enumerate_words(n, q, lo, min(total, lo + _CHUNK)))
        hist += np.bincount(d, minlength=n + 1)
    return hist


def _far_from_all(code: np.ndarray, u: np.ndarray, d: int) -> bool:
    if code.shape[0] == 0:
        return True
    return int(np.count_nonzero(code != u, axis=1).min()) >= d


def greedy_extend(code: np.ndarray, size: int, cands: np.ndarray, d: int,
                  check_rotations: bool) -> tuple[int, np.ndarray]:
    m, n = cands.shape
    if code.shape[0] < size + m * n:
        raise ValueError("code buffer too small")
    accepted = []
    for k in range(m):
        u = cands[k]
        if check_rotations:
            ok = all(_far_from_all(code[:size], np.roll(u, -r), d) for r in range(n))
        else:
            ok = _far_from_all(code[:size], u, d)
        if ok:
            for r in range(n):
                code[size + r] = np.roll(u, -r)
            size += n
            accepted.append(k)
    return size, np.asarray(accepted, dtype=np.int64)


def min_pairwise_distance(words: np.ndarray) -> tuple[int, int, int]:
    m, n = words.shape
    best, bi, bk = n + 1, -1, -1
    for i in range(m - 1):
        dist = np.count_nonzero(words[i + 1:] != words[i], axis=1)
        k = int(np.argmin(dist))
        if dist[k] < best:
            best, bi, bk = int(dist[k]), i, i + 1 + k
    return best, bi, bk


def max_autocorrelation(words: np.ndarray) -> tuple[int, int, int]:
    m, n = words.shape
    best, bi, bs = -1, -1, -1
    for i in range(m):
        for s in range(1, n // 2 + 1):
            cur = n - int(np.count_nonzero(words[i] != np.roll(words[i], -s)))
            if cur > best:
                best, bi, bs = cur, i, s
    return best, bi, bs


def max_crosscorrelation(words: np.ndarray) -> tuple[int, int, int, int]:
    m, n = words.shape
    best, bi, bk, bt = -1, -1, -1, -1
    for i in range(m - 1):
        rest = words[i + 1:]
        # agree[t, k]: agreements of words[i] with rest[k] delayed by t
        agree = np.stack([np.count_nonzero(words[i] == np.roll(rest, -t, axis=1), axis=1)
                          for t in range(n)])
        flat = int(np.argmax(agree.T))  # row-major over (k, t): smallest k, then t
        k, t = divmod(flat, n)
        if agree[t, k] > best:
            best, bi, bk, bt = int(agree[t, k]), i, i + 1 + k, t
    return best, bi, bk, bt
