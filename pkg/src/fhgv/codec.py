"""FH sequence sets <-> hopping cyclic codes.

An (n, M, lam; q) FH set becomes an (n, nM, n - lam) hopping cyclic code by
adding every rotation of every member; the reverse keeps one representative
per orbit.
"""
from __future__ import annotations

from typing import Iterable

from .model import (
    FHSequenceSet,
    HoppingCyclicCode,
    InvalidInput,
    Sequence,
    _check_shared,
    canonical_rotation,
    rotate,
    smallest_period,
)


class ConversionError(InvalidInput):
    """Conversion precondition failed; ``witness`` names the offending word(s)."""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


def is_hopping_cyclic(words: Iterable[Sequence]) -> tuple[bool, str | None]:
    """Check shift closure and aperiodicity; returns (ok, diagnosis).

    The empty collection passes vacuously.
    """
    words = sorted(set(words))
    if not words:
        return True, None
    _check_shared(words)
    present = set(words)
    for c in words:
        p = smallest_period(c)
        if p < c.n:
            return False, f"codeword {c} has nontrivial period {p}"
    # closure under the shift by one implies closure under all shifts
    for c in words:
        if c.n > 1 and (r := rotate(c, 1)) not in present:
            return False, f"rotation {r} (shift 1) of codeword {c} is absent"
    return True, None


def fh_to_code(F: FHSequenceSet) -> HoppingCyclicCode:
    seen: dict[Sequence, Sequence] = {}
    words: list[Sequence] = []
    for u in F:
        p = smallest_period(u)
        if p < u.n:
            raise ConversionError(f"member {u} has nontrivial period {p}", u)
        rep = canonical_rotation(u)
        if rep in seen:
            raise ConversionError(
                f"members {seen[rep]} and {u} are rotations of each other", (seen[rep], u)
            )
        seen[rep] = u
        words.extend(rotate(u, i) for i in range(u.n))
    return HoppingCyclicCode(F.n, F.q, tuple(words))


def code_to_fh(C: HoppingCyclicCode | Iterable[Sequence]) -> FHSequenceSet:
    if isinstance(C, HoppingCyclicCode):
        words = list(C.codewords)
        if not words:
            raise ConversionError("the empty code has no FH set")
    else:
        words = list(C)
        ok, why = is_hopping_cyclic(words)
        if not ok:
            raise ConversionError(f"not a hopping cyclic code: {why}")
    reps = {canonical_rotation(c) for c in words}
    n, q = words[0].n, words[0].q
    return FHSequenceSet(n, q, tuple(reps))
