"""Greedy Gilbert-Varshamov construction of hopping cyclic codes.

Candidates are the words whose cyclic self-distance d(u) exceeds
``(n - 2 sqrt(n)) (1 - 1/q - eps)``.  They are scanned in order; a candidate
with d(u) >= d that lies at distance >= d from every current codeword is
accepted together with all of its rotations.  Because the code is
shift-closed, checking the candidate alone is enough: if a rotation u_i were
close to some v in the code, u would be equally close to the rotation
v_{n-i}, which is also in the code.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import mpmath
import numpy as np

from . import kernels
from .model import MAX_Q, HoppingCyclicCode, InvalidInput, Sequence

DEFAULT_CAP = 1 << 28
_CHUNK = 1 << 14


def ball_volume(n: int, d: int, q: int, include_center: bool = True) -> int:
    """Number of words at distance < d from a fixed word.

    ``include_center=False`` gives the sum starting at i = 1, i.e. the ball
    with its center removed.
    """
    if q < 2 or not 0 <= d <= n + 1:
        raise InvalidInput(f"ball_volume needs q >= 2 and 0 <= d <= n+1, got n={n} d={d} q={q}")
    total, term = 0, 1  # term = C(n, i) (q-1)^i
    for i in range(d):
        if i or include_center:
            total += term
        term = term * (n - i) * (q - 1) // (i + 1)
    return total


def concentration_threshold(n: int, q: int, epsilon: float) -> float:
    """(n - 2 sqrt n)(1 - 1/q - eps): words with d(u) at or below it are filtered out."""
    return (n - 2.0 * math.sqrt(n)) * (1.0 - 1.0 / q - epsilon)


@dataclass(frozen=True)
class GVConfig:
    n: int
    q: int
    d: int
    epsilon: float
    policy: str = "exhaustive"
    count: int = 0
    seed: int | None = None
    cap: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidInput("n must be >= 2")
        if not 2 <= self.q <= MAX_Q:
            raise InvalidInput(f"q={self.q} outside [2, {MAX_Q}]")
        if not 2 <= self.d <= self.n:
            raise InvalidInput(f"target distance d={self.d} outside [2, n={self.n}]")
        if not 0.0 < self.epsilon < 1.0 - 1.0 / self.q:
            raise InvalidInput(f"epsilon={self.epsilon} outside (0, {1 - 1 / self.q:.6g})")
        if self.policy not in ("exhaustive", "sampled"):
            raise InvalidInput(f"unknown candidate policy {self.policy!r}")
        if self.policy == "sampled":
            if self.seed is None:
                raise InvalidInput("sampled policy needs an explicit seed")
            if self.count < 1:
                raise InvalidInput("sampled policy needs count >= 1")
        elif self.q ** self.n > self.cap:
            raise InvalidInput(
                f"q^n = {self.q}^{self.n} exceeds the enumeration cap {self.cap}; "
                "use the sampled policy or raise the cap"
            )

    @property
    def raw_threshold(self) -> float:
        return concentration_threshold(self.n, self.q, self.epsilon)

    @property
    def filter_threshold(self) -> float:
        # clamped at 0 so periodic words (d(u) = 0) never qualify
        return max(0.0, self.raw_threshold)


def _candidate_chunks(cfg: GVConfig) -> Iterator[np.ndarray]:
    thr = cfg.filter_threshold
    n, q = cfg.n, cfg.q
    if thr >= n:
        return
    if cfg.policy == "exhaustive":
        total = q ** n
        for lo in range(0, total, _CHUNK):
            block = kernels.enumerate_words(n, q, lo, min(total, lo + _CHUNK))
            yield block[kernels.cyclic_distances(block) > thr]
        return
    rng = np.random.default_rng(cfg.seed)
    produced = drawn = 0
    max_draws = 100 * cfg.count + 10_000
    while produced < cfg.count:
        if drawn >= max_draws:
            raise InvalidInput(
                f"sampled policy found only {produced} of {cfg.count} candidates in "
                f"{drawn} draws; the filter threshold {thr:.4g} is too strict"
            )
        b = min(_CHUNK, 2 * (cfg.count - produced) + 16)
        block = rng.integers(0, q, size=(b, n), dtype=np.uint16)
        drawn += b
        block = block[kernels.cyclic_distances(block) > thr][: cfg.count - produced]
        produced += len(block)
        yield block


def candidate_set(cfg: GVConfig) -> Iterator[Sequence]:
    for block in _candidate_chunks(cfg):
        for row in block.tolist():
            yield Sequence(tuple(row), cfg.q)


@dataclass(frozen=True)
class SizeGuarantee:
    """A lower bound on the family size M; values below 1 guarantee nothing."""

    value: Fraction

    @property
    def vacuous(self) -> bool:
        return self.value < 1

    def log_q(self, q: int) -> float | None:
        if self.value <= 0:
            return None
        return (math.log(self.value.numerator) - math.log(self.value.denominator)) / math.log(q)

    def __float__(self) -> float:
        try:
            return float(self.value)
        except OverflowError:
            return math.inf if self.value > 0 else -math.inf


@dataclass(frozen=True)
class GVResult:
    code: HoppingCyclicCode
    orbits_added: int
    candidates: int
    usable_candidates: int
    guaranteed_size: SizeGuarantee | None
    achieved_min_distance: int | None
    covering_ok: bool
    config: GVConfig


def _greedy_arrays(cfg: GVConfig, check_rotations: bool = False) -> tuple[np.ndarray, int, int]:
    """Returns (code rows, |A|, number of candidates with d(u) >= d)."""
    n = cfg.n
    code = np.zeros((0, n), dtype=np.uint16)
    size = seen = usable = 0
    for block in _candidate_chunks(cfg):
        seen += len(block)
        # an orbit with d(u) < d would put two of its own rotations too close
        block = block[kernels.cyclic_distances(block) >= cfg.d]
        usable += len(block)
        need = size + n * len(block)
        if code.shape[0] < need:
            grown = np.zeros((max(need, 2 * code.shape[0]), n), dtype=np.uint16)
            grown[:size] = code[:size]
            code = grown
        size, _ = kernels.greedy_extend(code, size, block, cfg.d, check_rotations)
    return code[:size].copy(), seen, usable


def gv_greedy(cfg: GVConfig, check_rotations: bool = False) -> GVResult:
    """Run the greedy construction.

    ``check_rotations=True`` tests every rotation of each candidate instead of
    the candidate alone; it exists to cross-check the shortcut and returns the
    same code.
    """
    arr, seen, usable = _greedy_arrays(cfg, check_rotations)
    n, q, d = cfg.n, cfg.q, cfg.d
    words = tuple(Sequence(tuple(r), q) for r in arr.tolist())
    code = HoppingCyclicCode(n, q, words)
    mind = kernels.min_pairwise_distance(arr)[0] if len(arr) >= 2 else None
    # every usable candidate ends up in C or within distance < d of it, so
    # |C| * V bounds their number once the whole space has been scanned
    covering = True
    if cfg.policy == "exhaustive":
        covering = len(arr) * ball_volume(n, d, q) >= usable
    lam = n - d
    guarantee = None
    if lam >= n - cfg.raw_threshold:
        guarantee = gv_guaranteed_size_I(n, q, lam, cfg.epsilon)
    return GVResult(code, len(arr) // n, seen, usable, guarantee, mind, covering, cfg)


# --- guaranteed sizes ------------------------------------------------------


def _fraction_up(x: mpmath.mpf) -> Fraction:
    """Rational strictly above a positive high-precision value (pads 2^-180 relative)."""
    m, e = mpmath.mpf(x).man_exp
    f = Fraction(int(m)) * (Fraction(2) ** int(e))
    return f * (1 + Fraction(1, 1 << 180))


def concentration_failure_bound(n: int, q: int, epsilon: float) -> Fraction:
    """Upper bound n^2 exp(-eps^2 (sqrt n - 2) / 2), rounded upward."""
    with mpmath.workprec(256):
        val = mpmath.mpf(n) ** 2 * mpmath.exp(-mpmath.mpf(epsilon) ** 2 * (mpmath.sqrt(n) - 2) / 2)
        return _fraction_up(val)


def gv_guaranteed_size_I(n: int, q: int, lam: int, epsilon: float,
                         include_center: bool = True) -> SizeGuarantee:
    """M such that an (n, M, lam; q) FH set exists via the probabilistic argument.

    M = q^n (1 - n^2 e^{-eps^2 (sqrt n - 2)/2}) / (n V), V the Hamming ball of
    radius n - lam - 1.  Negative or sub-unit values are returned as is.
    """
    if not 0.0 < epsilon < 1.0 - 1.0 / q:
        raise InvalidInput(f"epsilon={epsilon} outside (0, {1 - 1 / q:.6g})")
    need = n - concentration_threshold(n, q, epsilon)
    if lam < need:
        raise InvalidInput(f"lambda={lam} below the required n - (n - 2 sqrt n)(1 - 1/q - eps) = {need:.6g}")
    d = n - lam
    if d < 2:
        raise InvalidInput(f"distance n - lambda = {d} < 2: the ball sum is empty")
    p = concentration_failure_bound(n, q, epsilon)
    vol = ball_volume(n, d, q, include_center)
    # one normalisation: q^n (b - a) / (b n V) for p = a / b
    return SizeGuarantee(Fraction(q ** n * (p.denominator - p.numerator),
                                  p.denominator * n * vol))


def _ceil_pow_half(q: int, k: int) -> int:
    """Smallest integer >= q^(k/2)."""
    if k % 2 == 0:
        return q ** (k // 2)
    v = q ** k
    r = math.isqrt(v)
    return r if r * r == v else r + 1


def gv_guaranteed_size_II(n: int, q: int, lam: int, include_center: bool = True) -> SizeGuarantee:
    """M from the elementary counting argument, valid for lam >= e n / sqrt(q).

    M = (q^n - (n - lam) C(n, n - lam - 1) q^{(2n - lam - 1)/2}) / (n V).  The
    half-integer power is rounded up, so the value never overstates the bound.
    """
    need = math.e * n / math.sqrt(q)
    if lam < need:
        raise InvalidInput(f"lambda={lam} below e n / sqrt(q) = {need:.6g}")
    d = n - lam
    if d < 2:
        raise InvalidInput(f"distance n - lambda = {d} < 2: the ball sum is empty")
    bad = d * math.comb(n, d - 1) * _ceil_pow_half(q, 2 * n - lam - 1)
    vol = ball_volume(n, d, q, include_center)
    return SizeGuarantee(Fraction(q ** n - bad, n * vol))
