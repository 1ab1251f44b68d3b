"""Hamming correlation of FH sequences and the cyclic self-distance d(u)."""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .model import FHSequenceSet, InvalidInput, Sequence


def _same_params(x: Sequence, y: Sequence) -> None:
    if (x.n, x.q) != (y.n, y.q):
        raise InvalidInput(f"sequences differ in (n, q): ({x.n}, {x.q}) vs ({y.n}, {y.q})")


def hamming_correlation(x: Sequence, y: Sequence, tau: int) -> int:
    """Number of i with x_i == y_{(i + tau) mod n}."""
    _same_params(x, y)
    n = x.n
    if not 0 <= tau < n:
        raise InvalidInput(f"delay {tau} outside [0, {n})")
    ys = y.symbols
    return sum(a == ys[(i + tau) % n] for i, a in enumerate(x.symbols))


def pairwise_distance(x: Sequence, y: Sequence) -> int:
    _same_params(x, y)
    return sum(a != b for a, b in zip(x.symbols, y.symbols))


def cyclic_min_distance(u: Sequence) -> int:
    """d(u): distance from u to its closest nontrivial rotation.

    Zero exactly when u is periodic; the autocorrelation of u is n - d(u).
    """
    if u.n < 2:
        raise InvalidInput("d(u) needs n >= 2: a length-1 word has no nontrivial shift")
    return int(kernels.cyclic_distances(u.to_array()[None, :])[0])


@dataclass(frozen=True)
class CorrelationProfile:
    """Set-level maxima with the (indices, delay) witnesses that attain them.

    Indices refer to the sorted members of the analysed set.  ``Hc`` and its
    witness are ``None`` for a single-member set, where ``Hm = Ha``.
    """

    n: int
    q: int
    Ha: int
    Ha_witness: tuple[int, int]
    Hc: int | None
    Hc_witness: tuple[int, int, int] | None

    @property
    def Hm(self) -> int:
        return self.Ha if self.Hc is None else max(self.Ha, self.Hc)


def set_profile(F: FHSequenceSet) -> CorrelationProfile:
    """Maximum auto- (0 < tau < n) and cross- (all tau) Hamming correlation.

    Cross-correlation includes tau = 0 because a delay of n is a delay of 0
    modulo n.  Ties resolve to the smallest witness.
    """
    if not isinstance(F, FHSequenceSet) or F.M == 0:
        raise InvalidInput("set_profile needs a non-empty FHSequenceSet")
    words = F.to_array()
    if F.n == 1:
        # no nonzero delay exists; autocorrelation maximum is over an empty range
        raise InvalidInput("correlation profile needs n >= 2")
    ha, i, tau = kernels.max_autocorrelation(words)
    hc = hc_wit = None
    if F.M > 1:
        hc, a, b, t = kernels.max_crosscorrelation(words)
        hc_wit = (a, b, t)
    return CorrelationProfile(F.n, F.q, ha, (i, tau), hc, hc_wit)
