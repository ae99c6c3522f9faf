"""Command-line surface: condition checks, code synthesis, network design,
channel simulation and table sweeps.

Exit codes: 0 on success (condition holds / build succeeded), 1 when a
condition or feasibility check fails, 2 on usage or parse errors.  Every run
is reproducible from its arguments and --seed; reports embed both.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct, netsim
from .constraints import (
    check_condition,
    cover_dimension,
    parse_pattern,
    suggest_field_params,
)
from .gf import make_field, prime_power
from .netsim import (
    DesignResult,
    NetworkInstance,
    build_distributed_code,
    even_partition,
    weight_statistics,
)
from .sumrank import OrderedPartition, min_distance_bruteforce

_ENUM_GUARD = 1 << 22
_TABLE_FIELD_MAX = 512


def _emit(doc: dict, out_path: str | None):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_check(args) -> int:
    sc = parse_pattern(_read(args.pattern), args.n)
    report = check_condition(sc)
    doc = {
        "n": sc.n,
        "k": sc.k,
        "holds": report.holds,
        "witness": list(report.witness) if report.witness else None,
        "equality_system": report.equality_system,
        "cover_dim": cover_dimension(sc),
    }
    _emit(doc, args.out)
    return 0 if report.holds else 1


def cmd_construct(args) -> int:
    sc = parse_pattern(_read(args.pattern), args.n)
    if args.parts:
        part = OrderedPartition(tuple(int(x) for x in args.parts.split(",")))
        if part.n != sc.n:
            raise ValueError("--parts must sum to the pattern length")
    else:
        part = even_partition(sc.n, args.ell)
    report = check_condition(sc)
    if not report.holds and not args.subcode:
        print(json.dumps({"holds": False,
                          "witness": list(report.witness)}, sort_keys=True))
        print("condition violated; rerun with --subcode for the covering-code rows",
              file=sys.stderr)
        return 1
    target_dim = cover_dimension(sc)
    if args.q and args.m:
        q, m = args.q, args.m
    else:
        params = suggest_field_params(target_dim, part.ell, part.parts)
        q, m = params.q, params.m
    p, e = prime_power(q)
    tower = make_field(p, e, m)
    cc = construct.subcode_generator(tower, part, sc.k, sc, seed=args.seed)
    mismatches = construct.verify_support(cc.matrix, cc.sc)
    doc = {
        "q": q, "m": m, "n": sc.n, "k": sc.k, "cover_dim": cc.cover_dim,
        "parts": list(part.parts), "attempts": cc.attempts, "seed": args.seed,
        "support_ok": not mismatches,
    }
    if tower.order <= _TABLE_FIELD_MAX and tower.order ** sc.k <= _ENUM_GUARD:
        d = min_distance_bruteforce(tower, [list(r) for r in cc.matrix], part)
        doc["distance"] = d
        doc["distance_optimal"] = d == sc.n - cc.cover_dim + 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(construct.to_json(cc) + "\n")
        doc["code_file"] = args.out
    print(json.dumps(doc, indent=2, sort_keys=True))
    return 0


def _design_row(inst: NetworkInstance, ell: int, seed: int, build: bool) -> DesignResult:
    swept = NetworkInstance(h=inst.h, lengths=inst.lengths, access=inst.access,
                            t=inst.t, rho=inst.rho, ell=ell)
    return build_distributed_code(swept, seed=seed, build_code=build)


def cmd_design(args) -> int:
    inst = NetworkInstance.from_json(_read(args.instance))
    if args.ell:
        inst = NetworkInstance(h=inst.h, lengths=inst.lengths, access=inst.access,
                               t=inst.t, rho=inst.rho, ell=args.ell)
    if args.table:
        return _run_table(inst, args.table, args.seed, args.out)
    res = build_distributed_code(inst, seed=args.seed, build_code=args.build)
    text = res.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0


def _run_table(inst: NetworkInstance, lmax: int, seed: int, out) -> int:
    rows = []
    for ell in range(1, lmax + 1):
        res = _design_row(inst, ell, seed, build=False)
        rows.append({
            "ell": ell, "q": res.q, "m": res.m,
            "n": res.n, "cover_dim": res.cover_dim, "distance": res.distance,
            "parts": list(res.parts), "lengths": list(res.lengths),
        })
    header = f"{'ell':>3} {'q':>3} {'m':>3} {'[n,k~,d]':>14}  {'parts':<18} lengths"
    print(header)
    for r in rows:
        dims = f"[{r['n']},{r['cover_dim']},{r['distance']}]"
        print(f"{r['ell']:>3} {r['q']:>3} {r['m']:>3} {dims:>14}  "
              f"{','.join(map(str, r['parts'])):<18} {','.join(map(str, r['lengths']))}")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_tables(args) -> int:
    inst = NetworkInstance.from_json(_read(args.instance))
    return _run_table(inst, args.lmax, args.seed, args.out)


def cmd_simulate(args) -> int:
    res = DesignResult.from_json(_read(args.design))
    inst = res.instance
    n = res.n
    row_parts = even_partition(n, inst.ell).parts
    stats = weight_statistics(
        q=res.q, ell=inst.ell, t=inst.t, row_parts=row_parts,
        M=n + res.m, trials=args.trials, seed=args.seed, n=n, rho=inst.rho)
    doc = {
        "design": {"n": n, "k": res.k, "cover_dim": res.cover_dim,
                   "distance": res.distance, "q": res.q, "m": res.m},
        "seed": args.seed,
        "trials": args.trials,
        "channel": stats,
    }
    if res.code is not None:
        tower = res.code.code.tower
        if tower.order <= _TABLE_FIELD_MAX and tower.order ** res.k <= _ENUM_GUARD:
            import random

            rng = random.Random(args.seed)
            wt = max(0, (res.distance - 1 - inst.rho) // 2)
            decode_trials = min(args.trials, 50)
            good = sum(
                netsim.end_to_end_trial(res.code, res.distance, wt, inst.rho, rng)
                for _ in range(decode_trials))
            doc["decode"] = {"trials": decode_trials, "successes": good,
                             "error_weight": wt, "erasures": inst.rho}
    _emit(doc, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrsnet",
        description="support-constrained LRS codes and distributed network design")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="evaluate the zero-pattern condition")
    p_check.add_argument("pattern", help="pattern file, one row per line")
    p_check.add_argument("--n", type=int, required=True, help="code length")
    p_check.add_argument("--out")
    p_check.set_defaults(func=cmd_check)

    p_con = sub.add_parser("construct", help="synthesize a constrained generator")
    p_con.add_argument("pattern")
    p_con.add_argument("--n", type=int, required=True)
    p_con.add_argument("--ell", type=int, default=1, help="number of blocks")
    p_con.add_argument("--parts", help="explicit comma-separated block lengths")
    p_con.add_argument("--q", type=int, help="field base size (with --m)")
    p_con.add_argument("--m", type=int, help="extension degree (with --q)")
    p_con.add_argument("--subcode", action="store_true",
                       help="emit covering-code rows when the condition fails")
    p_con.add_argument("--seed", type=int, default=0)
    p_con.add_argument("--out", help="write the code serialization here")
    p_con.set_defaults(func=cmd_construct)

    p_des = sub.add_parser("design", help="size and build a distributed code")
    p_des.add_argument("instance", help="network instance JSON")
    p_des.add_argument("--ell", type=int, help="override the block count")
    p_des.add_argument("--build", action="store_true",
                       help="also synthesize the constrained code")
    p_des.add_argument("--table", type=int, metavar="LMAX",
                       help="sweep ell = 1..LMAX and print table rows")
    p_des.add_argument("--seed", type=int, default=0)
    p_des.add_argument("--out")
    p_des.set_defaults(func=cmd_design)

    p_tab = sub.add_parser("tables", help="reproduce the design table sweep")
    p_tab.add_argument("instance")
    p_tab.add_argument("--lmax", type=int, default=4)
    p_tab.add_argument("--seed", type=int, default=0)
    p_tab.add_argument("--out")
    p_tab.set_defaults(func=cmd_tables)

    p_sim = sub.add_parser("simulate", help="Monte-Carlo channel audit")
    p_sim.add_argument("design", help="design result JSON")
    p_sim.add_argument("--trials", type=int, default=200)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--out")
    p_sim.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except construct.ConditionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except netsim.InfeasibleDesign as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except construct.SynthesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
