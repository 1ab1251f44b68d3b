"""Asymptotic rate bounds for FH sequence sets as functions of delta_H = lambda / n.

Upper bounds (Singleton, Plotkin, sphere packing, linear programming) and the
Gilbert-Varshamov lower bound, all in the (delta_H, rate) plane for a fixed
alphabet size q.  Logarithms are natural and converted to base q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .model import InvalidInput

BOUND_NAMES = ("singleton", "plotkin", "sphere_packing", "linear_programming", "gv_lower")


def _check_q(q: int) -> None:
    if q < 2:
        raise InvalidInput(f"alphabet size q={q} must be >= 2")


def _check_delta(delta_h: float) -> None:
    if not 0.0 <= delta_h <= 1.0:
        raise InvalidInput(f"delta_H={delta_h} outside [0, 1]")


def entropy_q(q: int, x: float) -> float:
    """q-ary entropy, with H_q(0) = 0 and H_q(1) = log_q(q - 1)."""
    _check_q(q)
    if not 0.0 <= x <= 1.0:
        raise InvalidInput(f"entropy argument {x} outside [0, 1]")
    lq = math.log(q)
    h = x * math.log(q - 1)
    if 0.0 < x:
        h -= x * math.log(x)
    if x < 1.0:
        h -= (1.0 - x) * math.log1p(-x)
    return h / lq


def singleton_upper(q: int, delta_h: float) -> float:
    _check_q(q)
    _check_delta(delta_h)
    return delta_h


def plotkin_upper(q: int, delta_h: float) -> float:
    _check_q(q)
    _check_delta(delta_h)
    if delta_h <= 1.0 / q:
        return 0.0
    return (q * delta_h - 1.0) / (q - 1)


def sphere_packing_upper(q: int, delta_h: float) -> float:
    _check_delta(delta_h)
    return max(0.0, 1.0 - entropy_q(q, (1.0 - delta_h) / 2.0))


def lp_argument(q: int, delta_h: float) -> float:
    """Entropy argument of the linear programming bound, before clamping."""
    return (q - 1 - (q - 2) * (1.0 - delta_h)
            - 2.0 * math.sqrt(delta_h * (1.0 - delta_h) * (q - 1))) / q


def lp_upper(q: int, delta_h: float) -> float:
    _check_q(q)
    _check_delta(delta_h)
    x = min(max(lp_argument(q, delta_h), 0.0), (q - 1) / q)
    return entropy_q(q, x)


def gv_lower(q: int, delta_h: float) -> float:
    """1 - H_q(1 - delta_H), floored at 0.

    Zero on delta_H <= 1/q: there 1 - delta_H lies past the entropy peak at
    (q-1)/q and the formula stops describing an achievable rate.  The
    existence guarantee holds for delta_H > 1/q + eps (see ``gv_valid``).
    """
    _check_q(q)
    _check_delta(delta_h)
    if delta_h <= 1.0 / q:
        return 0.0
    return max(0.0, 1.0 - entropy_q(q, 1.0 - delta_h))


def gv_valid(q: int, delta_h: float, epsilon: float = 0.0) -> bool:
    """Whether delta_H lies in the region delta_H > 1/q + epsilon of the GV guarantee."""
    return delta_h > 1.0 / q + epsilon


def gv_elementary_region(q: int, delta_h: float) -> bool:
    """Region delta_H >= e / sqrt(q) covered by the elementary counting argument."""
    return delta_h >= math.e / math.sqrt(q)


BOUNDS: dict[str, Callable[[int, float], float]] = {
    "singleton": singleton_upper,
    "plotkin": plotkin_upper,
    "sphere_packing": sphere_packing_upper,
    "linear_programming": lp_upper,
    "gv_lower": gv_lower,
}


@dataclass(frozen=True)
class BoundPoint:
    q: int
    delta_h: float
    bound_name: str
    value: float


@dataclass(frozen=True)
class CurveSpec:
    q: int
    start: float = 0.0
    stop: float = 1.0
    step: float = 0.01
    bounds: tuple[str, ...] = BOUND_NAMES

    def __post_init__(self) -> None:
        _check_q(self.q)
        if not (0.0 <= self.start <= self.stop <= 1.0):
            raise InvalidInput(f"grid [{self.start}, {self.stop}] not inside [0, 1]")
        if not self.step > 0:
            raise InvalidInput("grid step must be positive")
        unknown = set(self.bounds) - set(BOUND_NAMES)
        if unknown:
            raise InvalidInput(f"unknown bound(s): {', '.join(sorted(unknown))}")

    def grid(self) -> list[float]:
        # index-based to avoid accumulated float drift
        span = (self.stop - self.start) / self.step
        count = round(span) if abs(span - round(span)) < 1e-9 else math.floor(span)
        return [min(round(self.start + i * self.step, 12), 1.0) for i in range(count + 1)]


def sample_curves(spec: CurveSpec) -> list[BoundPoint]:
    """Every selected bound on the grid, ordered by bound then ascending delta_H."""
    grid = spec.grid()
    order = [b for b in BOUND_NAMES if b in spec.bounds]
    return [BoundPoint(spec.q, x, name, BOUNDS[name](spec.q, x)) for name in order for x in grid]
