"""Empirical checks of the concentration and counting statements.

* Monte Carlo frequency of the event d(u) <= threshold for uniform u, against
  the union-bound probability (arbitrary n, or the sharper prime-n form).
* Exhaustive count of {u : d(u) < d} against n d C(n, d-1) q^{(n+d-1)/2}.
* Greedy builder run with and without the rotation shortcut.
* Sign of the exponent rate H_2(delta) - (1 - delta)/2 log2 q below 1 - e/sqrt(q).

Monte Carlo trials are drawn in fixed blocks, each from its own child of a
``numpy.random.SeedSequence``, so results do not depend on ``workers``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .gv import DEFAULT_CAP, GVConfig, _greedy_arrays
from .model import InvalidInput

BLOCK = 4096


@dataclass(frozen=True)
class TrialReport:
    experiment: str
    params: dict
    trials: int
    observed: int
    bound: float
    passed: bool
    slack: float = 0.0
    seed: int | None = None
    notes: dict = field(default_factory=dict)

    @property
    def frequency(self) -> float:
        return self.observed / self.trials if self.trials else 0.0

    @property
    def vacuous(self) -> bool:
        return self.experiment.startswith("mc-") and self.bound >= 1.0

    def recheck(self) -> bool:
        """Recompute the pass flag from the stored fields."""
        if self.experiment.startswith("mc-"):
            return self.frequency <= self.bound + self.slack
        if self.experiment == "count-lemma":
            return self.observed <= self.bound
        if self.experiment == "negligibility":
            return self.notes["max_rate"] < 0.0
        if self.experiment == "oracle-greedy":
            return self.observed == 0 and self.notes["min_distance_ok"]
        raise ValueError(self.experiment)

    def lines(self) -> list[tuple[str, str]]:
        rows = [("experiment", self.experiment)]
        rows += [(k, _fmt(v)) for k, v in self.params.items()]
        rows += [("trials", str(self.trials)), ("observed", str(self.observed))]
        if self.experiment.startswith("mc-"):
            rows += [("frequency", _fmt(self.frequency)), ("slack", _fmt(self.slack))]
        rows.append(("bound", _fmt(self.bound)))
        rows += [(k, _fmt(v)) for k, v in self.notes.items()]
        if self.seed is not None:
            rows.append(("seed", str(self.seed)))
        rows.append(("pass", "true" if self.passed else "false"))
        return rows


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def mc_slack(freq: float, trials: int) -> float:
    return 3.0 * math.sqrt(freq * (1.0 - freq) / trials) + 1.0 / trials


def _count_block(args: tuple[np.random.SeedSequence, int, int, int, float]) -> int:
    ss, size, n, q, thr = args
    rng = np.random.default_rng(ss)
    # Generator.integers draws bounded integers without modulo bias
    words = rng.integers(0, q, size=(size, n), dtype=np.uint16)
    return int(np.count_nonzero(kernels.cyclic_distances(words) <= thr))


def mc_small_distance_fraction(n: int, q: int, epsilon: float, trials: int, seed: int,
                               prime: bool = False, alt_threshold: bool = False,
                               workers: int = 1) -> TrialReport:
    """Frequency of d(u) <= threshold over ``trials`` uniform words of Z_q^n.

    Arbitrary n: threshold (n - 2 sqrt n)(1 - 1/q - eps), bound
    n^2 exp(-eps^2 (sqrt n - 2)/2).  ``prime=True``: threshold
    (n - 2)(1 - 1/q - eps) and bound (n - 1) exp(-eps^2 (n - 2)/2);
    ``alt_threshold`` swaps in the (n - 1) factor for the threshold.
    Bounds above 1 are reported unclamped.
    """
    if not 0.0 < epsilon < 1.0 - 1.0 / q:
        raise InvalidInput(f"epsilon={epsilon} outside (0, {1 - 1 / q:.6g})")
    if trials < 1:
        raise InvalidInput("trials must be >= 1")
    if q < 2:
        raise InvalidInput("q must be >= 2")
    rate = 1.0 - 1.0 / q - epsilon
    if prime:
        if not is_prime(n) or n < 3:
            raise InvalidInput(f"n={n} is not a prime >= 3")
        thr = ((n - 1) if alt_threshold else (n - 2)) * rate
        bound = (n - 1) * math.exp(-epsilon ** 2 * (n - 2) / 2)
        name = "mc-lemma3"
    else:
        if n < 9:
            raise InvalidInput(f"n={n} < 9: sqrt(n) - 2 must be positive")
        thr = (n - 2.0 * math.sqrt(n)) * rate
        bound = n ** 2 * math.exp(-epsilon ** 2 * (math.sqrt(n) - 2) / 2)
        name = "mc-lemma4"

    nblocks = -(-trials // BLOCK)
    children = np.random.SeedSequence(seed).spawn(nblocks)
    jobs = [(children[b], min(BLOCK, trials - b * BLOCK), n, q, thr) for b in range(nblocks)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            hits = sum(pool.map(_count_block, jobs))
    else:
        hits = sum(map(_count_block, jobs))

    freq = hits / trials
    slack = mc_slack(freq, trials)
    return TrialReport(
        name, {"n": n, "q": q, "epsilon": epsilon}, trials, hits, bound,
        freq <= bound + slack, slack, seed, {"threshold": thr},
    )


def _check_cap(n: int, q: int, cap: int) -> None:
    if q ** n > cap:
        raise InvalidInput(f"q^n = {q}^{n} exceeds the enumeration cap {cap}")


def small_distance_counts(n: int, q: int, cap: int = DEFAULT_CAP) -> np.ndarray:
    """``out[d]`` = |{u in Z_q^n : d(u) < d}| for d = 0..n+1, by full enumeration."""
    _check_cap(n, q, cap)
    hist = kernels.distance_histogram(n, q)
    return np.concatenate([[0], np.cumsum(hist)])


def counting_hypothesis(n: int, q: int) -> float:
    """d must stay below (1 - 1/(sqrt q + 1)) n."""
    return (1.0 - 1.0 / (math.sqrt(q) + 1.0)) * n


def within_counting_bound(count: int, n: int, q: int, d: int) -> bool:
    """Exact test of count <= n d C(n, d-1) q^{(n+d-1)/2}, comparing squares."""
    c = n * d * math.comb(n, d - 1)
    return count * count <= c * c * q ** (n + d - 1)


def exhaustive_small_distance_count(n: int, q: int, d: int, cap: int = DEFAULT_CAP,
                                    counts: np.ndarray | None = None) -> TrialReport:
    if n < 2 or q < 2:
        raise InvalidInput("need n >= 2 and q >= 2")
    hyp = counting_hypothesis(n, q)
    if not (1 <= d and d < hyp):
        raise InvalidInput(f"d={d} violates 1 <= d < (1 - 1/(sqrt q + 1)) n = {hyp:.6g}")
    if counts is None:
        counts = small_distance_counts(n, q, cap)
    count = int(counts[d])
    bound = n * d * math.comb(n, d - 1) * q ** ((n + d - 1) / 2)
    return TrialReport(
        "count-lemma", {"n": n, "q": q, "d": d}, q ** n, count, bound,
        within_counting_bound(count, n, q, d), notes={"hypothesis_limit": hyp},
    )


def oracle_greedy_equivalence(n: int, q: int, d: int, epsilon: float = 0.1,
                              cap: int = DEFAULT_CAP) -> TrialReport:
    """Run the greedy builder with and without the rotation shortcut and compare."""
    _check_cap(n, q, cap)
    cfg = GVConfig(n, q, d, epsilon, cap=cap)
    fast, seen, _ = _greedy_arrays(cfg, check_rotations=False)
    full, _, _ = _greedy_arrays(cfg, check_rotations=True)
    same = fast.shape == full.shape and bool(np.array_equal(fast, full))
    # rows that differ (or the size gap when the codes differ in length)
    if same:
        diff = 0
    else:
        k = min(len(fast), len(full))
        diff = int(np.any(fast[:k] != full[:k], axis=1).sum()) + abs(len(fast) - len(full))
    mind = kernels.min_pairwise_distance(fast)[0] if len(fast) >= 2 else None
    ok_dist = mind is None or mind >= d
    return TrialReport(
        "oracle-greedy", {"n": n, "q": q, "d": d, "epsilon": epsilon}, seen, diff, 0.0,
        same and ok_dist,
        notes={"code_size": len(fast), "min_distance": mind if mind is not None else "none",
               "min_distance_ok": ok_dist},
    )


def negligibility_rate(q: int, delta: float) -> float:
    """H_2(delta) - (1 - delta)/2 * log2(q): negative means the bad set is o(q^n)."""
    h2 = 0.0
    if 0.0 < delta < 1.0:
        h2 = -delta * math.log2(delta) - (1.0 - delta) * math.log2(1.0 - delta)
    return h2 - (1.0 - delta) / 2.0 * math.log2(q)


def asymptotic_negligibility_check(q: int, start: float = 0.001, stop: float | None = None,
                                   step: float = 0.005) -> TrialReport:
    """Rate sign on the grid start, start+step, ... <= stop (default 1 - e/sqrt(q) - 0.001)."""
    if q < 8:
        raise InvalidInput(f"q={q} < 8: the region d < (1 - e/sqrt q) n is empty")
    edge = 1.0 - math.e / math.sqrt(q)
    if stop is None:
        stop = edge - 0.001
    if not 0.0 < start <= stop < edge:
        raise InvalidInput(f"grid must satisfy 0 < start <= stop < 1 - e/sqrt(q) = {edge:.6g}")
    if step <= 0:
        raise InvalidInput("step must be positive")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    grid = [start + i * step for i in range(count)]
    rates = [negligibility_rate(q, x) for x in grid]
    worst = max(rates)
    at = grid[rates.index(worst)]
    return TrialReport(
        "negligibility", {"q": q, "start": start, "stop": stop, "step": step}, len(grid),
        sum(r >= 0.0 for r in rates), 0.0, worst < 0.0,
        notes={"max_rate": worst, "argmax_delta": at, "region_edge": edge},
    )
