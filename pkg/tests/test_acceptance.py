"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed in the
"acceptance criteria" section of the pytest summary.
"""
import csv
import io
import math
import random
from contextlib import redirect_stdout
from itertools import product

import numpy as np
import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from fhgv import bounds as B
from fhgv import empirics as E
from fhgv.cli import main as cli_main
from fhgv.codec import code_to_fh, fh_to_code, is_hopping_cyclic
from fhgv.correlation import set_profile
from fhgv.gv import GVConfig, gv_greedy
from fhgv.model import FHSequenceSet, canonical_rotation, seq

TOL = 1e-12


def record(num, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def random_fh_set(rng, n, q, m):
    reps = {}
    for _ in range(500):
        if len(reps) == m:
            break
        w = seq([rng.randrange(q) for _ in range(n)], q)
        if oracles.self_distance(w.symbols) > 0:
            reps.setdefault(canonical_rotation(w), w)
    return FHSequenceSet.of(reps.values())


def brute_min_distance(arr):
    """Minimum Hamming distance over all row pairs, by blocks of numpy comparisons."""
    best = arr.shape[1] + 1
    for i in range(len(arr) - 1):
        rest = arr[i + 1:]
        best = min(best, int((rest != arr[i]).sum(axis=1).min()))
        if best == 0:
            break
    return best


def test_criterion_1_conversion():
    rng = random.Random(20240601)
    bad = []
    for k in range(200):
        n, q = rng.randint(3, 8), rng.choice((2, 3))
        F = random_fh_set(rng, n, q, rng.randint(1, 5))
        C = fh_to_code(F)
        words = [c.symbols for c in C]
        ok = (len(C) == n * F.M
              and oracles.min_distance(words) == n - set_profile(F).Hm
              and code_to_fh(C) == FHSequenceSet.of(canonical_rotation(u) for u in F))
        if not ok:
            bad.append(k)
    record(1, not bad, f"200 random FH sets, size nM, min distance n - Hm, roundtrip; failures={bad}")


def test_criterion_2_gv_construction():
    bad, runs = [], 0
    for q in (2, 3):
        for n in range(2, 11):
            for d in range(2, n + 1):
                cfg = GVConfig(n, q, d, 0.1)
                fast = gv_greedy(cfg)
                full = gv_greedy(cfg, check_rotations=True)
                runs += 1
                words = fast.code.codewords
                ok = fast.code == full.code and is_hopping_cyclic(words)[0]
                if len(words) >= 2:
                    arr = np.array([w.symbols for w in words], dtype=np.int16)
                    ok = ok and brute_min_distance(arr) >= d
                if not ok:
                    bad.append((n, q, d))
    record(2, not bad, f"{runs} (n, q, d) instances, hopping cyclic, distance >= d, "
                       f"variants identical; failures={bad}")


def test_criterion_3_counting_lemma():
    bad, runs = [], 0
    for q in range(2, 1 << 20):
        if q ** 2 > 1 << 20:
            break
        n = 2
        while q ** n <= 1 << 20:
            counts = E.small_distance_counts(n, q)
            hyp = E.counting_hypothesis(n, q)
            for d in range(1, n + 1):
                if d < hyp:
                    runs += 1
                    if not E.exhaustive_small_distance_count(n, q, d, counts=counts).passed:
                        bad.append((n, q, d))
            n += 1
    four = E.exhaustive_small_distance_count(4, 2, 2).observed
    record(3, not bad and four == 4,
           f"{runs} instances with q^n <= 2^20 within bound; failures={bad}; n=4 q=2 d=2 count={four}")


def test_criterion_4_monte_carlo():
    args = (400, 4, 0.15, 100_000, 424242)
    a = E.mc_small_distance_fraction(*args)
    b = E.mc_small_distance_fraction(*args, workers=4)
    same = a == b
    record(4, a.passed and same,
           f"n=400 q=4 eps=0.15 trials=1e5 freq={a.frequency:.6g} bound={a.bound:.6g} "
           f"slack={a.slack:.3g} vacuous={a.vacuous} rerun identical={same}")


def test_criterion_5_figure_curves():
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["curve", "--q", "17"])
    rows = list(csv.DictReader(io.StringIO(buf.getvalue())))
    uppers = ("singleton", "plotkin", "sphere_packing", "lp")
    below = all(float(r["gv_lower"]) <= min(float(r[u]) for u in uppers) + TOL for r in rows)
    zero = all(float(r["gv_lower"]) == 0.0 for r in rows if float(r["delta_h"]) <= 1 / 17)
    last = rows[-1]
    ones = float(last["delta_h"]) == 1.0 and all(
        abs(float(last[c]) - 1.0) <= TOL for c in uppers + ("gv_lower",))
    half = next(r for r in rows if float(r["delta_h"]) == 0.5)
    lp_sp = float(half["lp"]) < float(half["sphere_packing"])
    ok = code == 0 and len(rows) == 101 and below and zero and ones and lp_sp
    record(5, ok, f"curve --q 17: rows={len(rows)} gv<=min(upper)={below} gv=0 below 1/17={zero} "
                  f"all=1 at 1={ones} lp<sp at 0.5={lp_sp}")


def test_criterion_6_spot_values():
    checks = [abs(B.plotkin_upper(2, 0.5)) <= TOL]
    checks += [abs(B.entropy_q(q, (q - 1) / q) - 1.0) <= TOL for q in (2, 3, 17)]
    checks += [abs(B.gv_lower(q, 1 / q)) <= TOL for q in (2, 3, 17)]
    record(6, all(checks), f"{sum(checks)}/{len(checks)} spot values within 1e-12")


def test_criterion_7_negligibility():
    reps = {q: E.asymptotic_negligibility_check(q) for q in (9, 16, 49)}
    worst = {q: f"{r.notes['max_rate']:.4g}" for q, r in reps.items()}
    record(7, all(r.passed for r in reps.values()),
           f"rate strictly negative below 1 - e/sqrt(q); max rate per q={worst}")
