"""Command-line front end: construct, analyze, convert, curve, verify.

Correlation convention: cross-correlation is maximised over all delays
0 <= tau < n (a delay of n is a delay of 0 mod n); autocorrelation over
0 < tau < n.
"""
from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence as Seq

from . import bounds, empirics
from .codec import code_to_fh, fh_to_code
from .correlation import set_profile
from .gv import DEFAULT_CAP, GVConfig, gv_greedy
from .model import CodeParams, FHSequenceSet, InvalidInput, load_code, load_set, save

EXIT_FAIL = 1
EXIT_ERROR = 2


def _emit(rows: list[tuple[str, str]], machine: bool, out=None) -> None:
    out = out or sys.stdout
    if machine:
        for k, v in rows:
            out.write(f"{k}={v}\n")
        return
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        out.write(f"{k.ljust(width)}  {v}\n")


def _profile_rows(F: FHSequenceSet) -> list[tuple[str, str]]:
    prof = set_profile(F)
    params = CodeParams(F.n, F.M, prof.Hm, F.q)
    i, tau = prof.Ha_witness
    rows = [
        ("params", str(params)),
        ("n", str(F.n)), ("M", str(F.M)), ("lambda", str(prof.Hm)), ("q", str(F.q)),
        ("Ha", str(prof.Ha)),
        ("Ha_witness", f"seq={i} tau={tau}"),
        ("Hc", "absent" if prof.Hc is None else str(prof.Hc)),
    ]
    if prof.Hc_witness is not None:
        a, b, t = prof.Hc_witness
        rows.append(("Hc_witness", f"x={a} y={b} tau={t}"))
    rows += [("Hm", str(prof.Hm)), ("code_params", str(params.as_code()))]
    return rows


def cmd_construct(args) -> int:
    cfg = GVConfig(args.n, args.q, args.d, args.epsilon, args.policy,
                   args.count, args.seed, args.cap)
    res = gv_greedy(cfg)
    g = res.guaranteed_size
    rows = [
        ("n", str(cfg.n)), ("q", str(cfg.q)), ("d", str(cfg.d)),
        ("epsilon", f"{cfg.epsilon:.12g}"), ("policy", cfg.policy),
        ("filter_threshold", f"{cfg.filter_threshold:.12g}"),
        ("candidates", str(res.candidates)),
        ("code_size", str(len(res.code))), ("orbits_added", str(res.orbits_added)),
        ("achieved_min_distance", "none" if res.achieved_min_distance is None
         else str(res.achieved_min_distance)),
        ("guaranteed_size", "n/a" if g is None else f"{float(g):.6g}"),
        ("guarantee_vacuous", "n/a" if g is None else str(g.vacuous).lower()),
        ("covering_ok", str(res.covering_ok).lower()),
    ]
    if args.output:
        save(args.output, res.code)
        rows.append(("output", args.output))
    _emit(rows, args.machine)
    return 0


def cmd_analyze(args) -> int:
    F = load_set(args.input)
    _emit(_profile_rows(F), args.machine)
    return 0


def cmd_convert(args) -> int:
    if args.to_code:
        obj = fh_to_code(load_set(args.input))
        rows = [("direction", "fh->code"), ("code_size", str(len(obj))),
                ("min_distance", str(obj.min_distance()))]
    else:
        obj = code_to_fh(load_code(args.input))
        rows = [("direction", "code->fh"), ("M", str(obj.M))]
    if args.output:
        save(args.output, obj)
        rows.append(("output", args.output))
        _emit(rows, args.machine)
    else:
        words = obj.codewords if args.to_code else obj.members
        sys.stdout.write(f"{obj.n} {obj.q} {len(words)}\n")
        for w in words:
            sys.stdout.write(f"{w}\n")
    return 0


CSV_COLUMNS = ("singleton", "plotkin", "sphere_packing", "linear_programming", "gv_lower")


def cmd_curve(args) -> int:
    spec = bounds.CurveSpec(args.q, args.start, args.stop, args.step)
    pts = bounds.sample_curves(spec)
    table: dict[float, dict[str, float]] = {}
    for p in pts:
        table.setdefault(p.delta_h, {})[p.bound_name] = p.value
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["q", "delta_h", "singleton", "plotkin", "sphere_packing", "lp",
                    "gv_lower", "gv_valid"])
        for x in spec.grid():
            row = table[x]
            w.writerow([args.q, f"{x:.12g}"] + [f"{row[c]:.12g}" for c in CSV_COLUMNS]
                       + [int(bounds.gv_valid(args.q, x, args.epsilon))])
    finally:
        if args.output:
            out.close()
    return 0


def cmd_verify(args) -> int:
    kind = args.suite
    if kind in ("mc-lemma4", "mc-lemma3"):
        rep = empirics.mc_small_distance_fraction(
            args.n, args.q, args.epsilon, args.trials, args.seed,
            prime=kind == "mc-lemma3", alt_threshold=getattr(args, "alt_threshold", False),
            workers=args.workers)
    elif kind == "count-lemma":
        rep = empirics.exhaustive_small_distance_count(args.n, args.q, args.d, args.cap)
    elif kind == "oracle-greedy":
        rep = empirics.oracle_greedy_equivalence(args.n, args.q, args.d, args.epsilon, args.cap)
    elif kind == "negligibility":
        rep = empirics.asymptotic_negligibility_check(args.q, args.start, args.stop, args.step)
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidInput(f"unknown suite {kind}")
    _emit(rep.lines(), args.machine)
    return 0 if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true",
                        help="emit key=value lines instead of an aligned table")

    p = argparse.ArgumentParser(prog="fhgv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", parents=[common], help="greedy hopping cyclic code")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--d", type=int, required=True, help="target minimum distance")
    c.add_argument("--epsilon", type=float, default=0.1)
    c.add_argument("--policy", choices=("exhaustive", "sampled"), default="exhaustive")
    c.add_argument("--count", type=int, default=0, help="candidates to draw (sampled)")
    c.add_argument("--seed", type=int, default=None)
    c.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max q^n to enumerate")
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", parents=[common], help="correlation profile of an FH set")
    a.add_argument("input")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("convert", parents=[common], help="FH set <-> hopping cyclic code")
    g = v.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-code", action="store_true")
    g.add_argument("--to-fh", action="store_true")
    v.add_argument("input")
    v.add_argument("--output", "-o")
    v.set_defaults(func=cmd_convert)

    k = sub.add_parser("curve", parents=[common], help="asymptotic bound curves as CSV")
    k.add_argument("--q", type=int, required=True)
    k.add_argument("--start", type=float, default=0.0)
    k.add_argument("--stop", type=float, default=1.0)
    k.add_argument("--step", type=float, default=0.01)
    k.add_argument("--epsilon", type=float, default=0.0,
                   help="gv_valid marks delta_h > 1/q + epsilon")
    k.add_argument("--output", "-o")
    k.set_defaults(func=cmd_curve)

    r = sub.add_parser("verify", help="empirical checks; exit status is the pass flag")
    vs = r.add_subparsers(dest="suite", required=True)
    for name, prime in (("mc-lemma4", False), ("mc-lemma3", True)):
        m = vs.add_parser(name, parents=[common])
        m.add_argument("--n", type=int, required=True)
        m.add_argument("--q", type=int, required=True)
        m.add_argument("--epsilon", type=float, required=True)
        m.add_argument("--trials", type=int, required=True)
        m.add_argument("--seed", type=int, required=True)
        m.add_argument("--workers", type=int, default=1)
        if prime:
            m.add_argument("--alt-threshold", action="store_true",
                           help="use the (n-1) factor in the event threshold")
    cl = vs.add_parser("count-lemma", parents=[common])
    cl.add_argument("--n", type=int, required=True)
    cl.add_argument("--q", type=int, required=True)
    cl.add_argument("--d", type=int, required=True)
    cl.add_argument("--cap", type=int, default=DEFAULT_CAP)
    og = vs.add_parser("oracle-greedy", parents=[common])
    og.add_argument("--n", type=int, required=True)
    og.add_argument("--q", type=int, required=True)
    og.add_argument("--d", type=int, required=True)
    og.add_argument("--epsilon", type=float, default=0.1)
    og.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ng = vs.add_parser("negligibility", parents=[common])
    ng.add_argument("--q", type=int, required=True)
    ng.add_argument("--start", type=float, default=0.001)
    ng.add_argument("--stop", type=float, default=None)
    ng.add_argument("--step", type=float, default=0.005)
    r.set_defaults(func=cmd_verify)
    return p


def main(argv: Seq[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as exc:
        sys.stderr.write(f"fhgv {args.command}: invalid input: {exc}\n")
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write(f"fhgv {args.command}: cannot access file: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
