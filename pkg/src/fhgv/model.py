"""Sequences, FH sequence sets, hopping cyclic codes and the text file format.

Words are stored as tuples of small non-negative integers.  A rotation by
``i`` is the left shift ``(u_i, u_{i+1}, ..., u_{i-1})``; the same convention
is used for correlation delays throughout the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, TextIO

import numpy as np

MAX_Q = 1 << 16


class InvalidInput(ValueError):
    """An argument violates an operation's precondition."""


@dataclass(frozen=True, order=True)
class Sequence:
    """A length-n word over the alphabet {0, ..., q-1}."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if not 2 <= self.q <= MAX_Q:
            raise InvalidInput(f"alphabet size q={self.q} outside [2, {MAX_Q}]")
        if not self.symbols:
            raise InvalidInput("a sequence needs length n >= 1")
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise InvalidInput(f"symbol {s} outside [0, {self.q})")

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __str__(self) -> str:
        return " ".join(map(str, self.symbols))

    def to_array(self) -> np.ndarray:
        return np.asarray(self.symbols, dtype=np.uint16)


def seq(symbols: Iterable[int], q: int) -> Sequence:
    return Sequence(tuple(symbols), q)


def rotate(u: Sequence, i: int) -> Sequence:
    """Left cyclic shift of ``u`` by ``i`` positions, ``0 <= i < n``."""
    if not 0 <= i < u.n:
        raise InvalidInput(f"shift {i} outside [0, {u.n})")
    s = u.symbols
    return Sequence(s[i:] + s[:i], u.q)


def _rotations(s: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [s[i:] + s[:i] for i in range(len(s))]


def canonical_rotation(u: Sequence) -> Sequence:
    """Lexicographically smallest rotation of ``u`` (its necklace representative)."""
    return Sequence(min(_rotations(u.symbols)), u.q)


def orbit(u: Sequence) -> frozenset[Sequence]:
    return frozenset(Sequence(r, u.q) for r in _rotations(u.symbols))


def smallest_period(u: Sequence) -> int:
    """Smallest p > 0 with rotate(u, p) == u (p = n when u is aperiodic)."""
    s = u.symbols
    n = len(s)
    for p in range(1, n):
        if n % p == 0 and s[p:] + s[:p] == s:
            return p
    return n


def _check_shared(words: Iterable[Sequence]) -> tuple[int, int]:
    words = list(words)
    if not words:
        raise InvalidInput("empty set of sequences")
    n, q = words[0].n, words[0].q
    for w in words:
        if w.n != n or w.q != q:
            raise InvalidInput(
                f"mixed parameters: ({w.n}, {w.q}) vs ({n}, {q}) for {w}"
            )
    return n, q


def words_to_array(words: Iterable[Sequence], n: int) -> np.ndarray:
    words = list(words)
    if not words:
        return np.zeros((0, n), dtype=np.uint16)
    return np.array([w.symbols for w in words], dtype=np.uint16).reshape(len(words), n)


@dataclass(frozen=True)
class FHSequenceSet:
    """M distinct FH sequences of common length n over q symbols.

    Members are kept sorted so every downstream computation is reproducible.
    """

    n: int
    q: int
    members: tuple[Sequence, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(self.members))
        if not members:
            raise InvalidInput("an FH sequence set needs at least one member")
        n, q = _check_shared(members)
        if (n, q) != (self.n, self.q):
            raise InvalidInput(f"members have (n, q) = ({n}, {q}), set declares ({self.n}, {self.q})")
        for a, b in zip(members, members[1:]):
            if a == b:
                raise InvalidInput(f"duplicate member {a}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, words: Iterable[Sequence | Iterable[int]], q: int | None = None) -> "FHSequenceSet":
        ws = [w if isinstance(w, Sequence) else Sequence(tuple(w), q) for w in words]
        n, q = _check_shared(ws)
        return cls(n, q, tuple(ws))

    @property
    def M(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.members)

    def to_array(self) -> np.ndarray:
        return words_to_array(self.members, self.n)


@dataclass(frozen=True)
class HoppingCyclicCode:
    """A shift-closed code in which no codeword has a nontrivial period.

    The empty code is allowed (the greedy builder can return it); the
    hopping-cyclic conditions then hold vacuously.
    """

    n: int
    q: int
    codewords: tuple[Sequence, ...] = field(default=())

    def __post_init__(self) -> None:
        words = tuple(sorted(set(self.codewords)))
        if words:
            n, q = _check_shared(words)
            if (n, q) != (self.n, self.q):
                raise InvalidInput(f"codewords have (n, q) = ({n}, {q}), code declares ({self.n}, {self.q})")
            # local import: codec depends on this module
            from .codec import is_hopping_cyclic

            ok, why = is_hopping_cyclic(words)
            if not ok:
                raise InvalidInput(f"not a hopping cyclic code: {why}")
        object.__setattr__(self, "codewords", words)

    @classmethod
    def of(cls, words: Iterable[Sequence]) -> "HoppingCyclicCode":
        ws = list(words)
        n, q = _check_shared(ws)
        return cls(n, q, tuple(ws))

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.codewords)

    def to_array(self) -> np.ndarray:
        return words_to_array(self.codewords, self.n)

    def min_distance(self) -> int | None:
        """Brute-force minimum pairwise Hamming distance (None below two codewords)."""
        from .kernels import min_pairwise_distance

        if len(self.codewords) < 2:
            return None
        return min_pairwise_distance(self.to_array())[0]


@dataclass(frozen=True)
class CodeParams:
    """``(n, M, lam; q)`` for FH sets; for codes ``lam`` carries the distance."""

    n: int
    M: int
    lam: int
    q: int

    def __post_init__(self) -> None:
        if not 0 <= self.lam <= self.n:
            raise InvalidInput(f"correlation {self.lam} outside [0, {self.n}]")
        if self.M < 1:
            raise InvalidInput("family size must be >= 1")

    def __str__(self) -> str:
        return f"({self.n},{self.M},{self.lam};{self.q})"

    def as_code(self) -> "CodeParams":
        """Lemma-style map (n, M, lam; q) -> (n, nM, n - lam) code parameters."""
        return CodeParams(self.n, self.n * self.M, self.n - self.lam, self.q)


# --- text format -----------------------------------------------------------
# line 1: "n q M"; then M lines of n space-separated symbols.


def write_words(fh: TextIO, n: int, q: int, words: Iterable[Sequence]) -> None:
    words = list(words)
    fh.write(f"{n} {q} {len(words)}\n")
    for w in words:
        fh.write(f"{w}\n")


def read_words(fh: TextIO) -> tuple[int, int, list[Sequence]]:
    lines = [ln for ln in (raw.strip() for raw in fh) if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidInput("empty sequence file: missing 'n q M' header")
    try:
        n, q, m = (int(t) for t in lines[0].split())
    except ValueError as exc:
        raise InvalidInput(f"bad header {lines[0]!r}: expected 'n q M'") from exc
    body = lines[1:]
    if len(body) != m:
        raise InvalidInput(f"header declares M={m} rows but file has {len(body)}")
    words = []
    for lineno, ln in enumerate(body, start=2):
        try:
            symbols = tuple(int(t) for t in ln.split())
        except ValueError as exc:
            raise InvalidInput(f"row {lineno}: non-integer symbol in {ln!r}") from exc
        if len(symbols) != n:
            raise InvalidInput(f"row {lineno}: expected {n} symbols, got {len(symbols)}")
        words.append(Sequence(symbols, q))
    return n, q, words


def load_set(path: str | Path) -> FHSequenceSet:
    with open(path) as fh:
        n, q, words = read_words(fh)
    if not words:
        raise InvalidInput(f"{path}: an FH sequence set needs at least one member")
    return FHSequenceSet(n, q, tuple(words))


def load_code(path: str | Path) -> HoppingCyclicCode:
    with open(path) as fh:
        n, q, words = read_words(fh)
    return HoppingCyclicCode(n, q, tuple(words))


def save(path: str | Path, obj: FHSequenceSet | HoppingCyclicCode) -> None:
    words = obj.members if isinstance(obj, FHSequenceSet) else obj.codewords
    with open(path, "w") as fh:
        write_words(fh, obj.n, obj.q, words)
