"""Command-line interface.

    charlab run --config cfg.ini [--scenario NAME] [--out DIR] [--jobs N]
                [--seed U64] [--cap N]
    charlab list
    charlab identity {power-build,independence,mixing3,poscorr} ...
    charlab pattern {hyperbola3,hyperbola-diffset,prod,spacetime,laurent-fs} ...
    charlab pgl2 {ratio,qset,section-check} ...

The one-shot subcommands print JSON records to stdout; `run` executes a
named scenario and writes CSV/JSON artifacts plus a manifest.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import runner, scenarios
from .errors import CharlabError, ParseError
from .fields import enumerate_finite, parse_descriptor, parse_element
from .identities import SpectrumFunction, build_power_identity, check_linear_independence, poscorr_check, triple_mixing_check
from .cyclotomic import UnitValue
from .patterns import hyperbola_diffset_search, hyperbola_triple_search, laurent_fs_search, prod_coverage, spacetime_search
from .pgl2 import inversion_section_check, pgl2_folner_ratio, q_set, symmetrized


def _emit(obj):
    print(json.dumps(obj, indent=2, sort_keys=True, default=str))


def _parse_points(desc, text):
    """Point-set literal: semicolon-separated `x,y` element pairs."""
    pts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, _, b = chunk.partition(",")
        pts.append((parse_element(desc, a), parse_element(desc, b)))
    return pts


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="charlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a named scenario")
    p_run.add_argument("--config", help="INI config path")
    p_run.add_argument("--scenario", help="scenario name (overrides config)")
    p_run.add_argument("--out", default="charlab-out", help="artifact directory")
    p_run.add_argument("--jobs", type=int, default=1)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--cap", type=int, default=None)

    sub.add_parser("list", help="list scenarios")

    p_id = sub.add_parser("identity", help="identity verifiers")
    id_sub = p_id.add_subparsers(dest="subcommand", required=True)
    p_pb = id_sub.add_parser("power-build")
    p_pb.add_argument("--n", type=int, required=True)
    p_pb.add_argument("--p", type=int, default=0)
    p_ind = id_sub.add_parser("independence")
    p_ind.add_argument("--n", type=int, required=True)
    p_ind.add_argument("--p", type=int, default=0)
    p_ind.add_argument("--m", type=int, required=True)
    p_mx = id_sub.add_parser("mixing3")
    p_mx.add_argument("--q", type=int, required=True)
    p_mx.add_argument("--a", type=int, help="element code; default sweeps all")
    p_pc = id_sub.add_parser("poscorr")
    p_pc.add_argument("--q", type=int, required=True)
    p_pc.add_argument("--N", type=int, default=3)
    p_pc.add_argument("--trials", type=int, default=20)
    p_pc.add_argument("--seed", type=int, default=0)

    p_pat = sub.add_parser("pattern", help="brute-force pattern searches")
    pat_sub = p_pat.add_subparsers(dest="subcommand", required=True)
    p_h3 = pat_sub.add_parser("hyperbola3")
    p_h3.add_argument("--q", type=int, required=True)
    p_hd = pat_sub.add_parser("hyperbola-diffset")
    p_hd.add_argument("--q", type=int, required=True)
    p_hd.add_argument("--t", type=int, default=1)
    p_hd.add_argument("--size", type=int, default=4)
    p_pr = pat_sub.add_parser("prod")
    p_pr.add_argument("--q", type=int, required=True)
    p_pr.add_argument("--points", required=True, help="x1,y1;x2,y2;...")
    p_st = pat_sub.add_parser("spacetime")
    p_st.add_argument("--q", type=int, required=True)
    p_st.add_argument("--z", required=True)
    p_st.add_argument("--points", required=True)
    p_st.add_argument("--method", default="direct", choices=["direct", "transform"])
    p_lf = pat_sub.add_parser("laurent-fs")
    p_lf.add_argument("--q", type=int, required=True)
    p_lf.add_argument("--coeffs", required=True, help="k1:c1;k2:c2;... (element literals)")
    p_lf.add_argument("--set", dest="subset", required=True, help="element literals, comma separated")

    p_pg = sub.add_parser("pgl2", help="projective-line constructions")
    pg_sub = p_pg.add_subparsers(dest="subcommand", required=True)
    p_qs = pg_sub.add_parser("qset")
    p_qs.add_argument("--field", default="rational", help="field descriptor literal")
    p_qs.add_argument("--set", dest="subset", required=True)
    p_rt = pg_sub.add_parser("ratio")
    p_rt.add_argument("--field", default="rational")
    p_rt.add_argument("--set", dest="subset", required=True)
    p_rt.add_argument("--b", required=True)
    p_rt.add_argument("--gen", default="plus", choices=["plus", "minus"])
    p_sc = pg_sub.add_parser("section-check")
    p_sc.add_argument("--field", default="rational")
    p_sc.add_argument("--set", dest="subset", required=True)
    p_sc.add_argument("--b", required=True)

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CharlabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "run":
        return runner.run(
            config=args.config,
            scenario=args.scenario,
            out=args.out,
            jobs=args.jobs,
            seed=args.seed,
            cap=args.cap,
        )

    if args.command == "list":
        for name, desc in scenarios.list_scenarios():
            print(f"{name}: {desc}")
        return 0

    if args.command == "identity":
        return _identity(args)
    if args.command == "pattern":
        return _pattern(args)
    if args.command == "pgl2":
        return _pgl2(args)
    raise ParseError(f"unknown command {args.command!r}")


def _identity(args) -> int:
    if args.subcommand == "power-build":
        pid = build_power_identity(args.n, args.p)
        _emit({
            "n": pid.n, "p": pid.p, "N": pid.N,
            "exponents": list(pid.exponents),
            "coeffs": [str(c) for c in pid.coeffs],
            "polys": [[str(c) for c in poly] for poly in pid.polys],
        })
        return 0
    if args.subcommand == "independence":
        pid = build_power_identity(args.n, args.p)
        res = check_linear_independence(pid, args.m)
        _emit({"n": args.n, "p": args.p, "m": args.m,
               "independent": res["independent"],
               "witness": [str(b) for b in res["witness"]] if res["witness"] else None})
        return 0
    if args.subcommand == "mixing3":
        from .identities import _descriptor_for_order

        desc = _descriptor_for_order(args.q)
        codes = [args.a] if args.a is not None else list(range(2, args.q))
        bad = [a for a in codes if triple_mixing_check(desc, a) != UnitValue.one()]
        _emit({"q": args.q, "checked": len(codes), "all_one": not bad, "failures": bad})
        return 0 if not bad else 1
    if args.subcommand == "poscorr":
        from .identities import _descriptor_for_order
        from .fields import small_field_tables

        desc = _descriptor_for_order(args.q)
        tab = small_field_tables(desc)
        rng = random.Random(args.seed)
        held = 0
        for _ in range(args.trials):
            spectra = [
                SpectrumFunction(desc, {b: Fraction(rng.randint(0, 9)) for b in range(args.q)})
                for _ in range(args.N)
            ]
            from .scenarios import _random_zero_sum_shifts

            shifts = _random_zero_sum_shifts(tab, args.N, rng)
            held += poscorr_check(desc, spectra, shifts)["holds"]
        _emit({"q": args.q, "N": args.N, "held": held, "trials": args.trials})
        return 0 if held == args.trials else 1
    raise ParseError(f"unknown identity subcommand {args.subcommand!r}")


def _pattern(args) -> int:
    if args.subcommand == "hyperbola3":
        rep = hyperbola_triple_search(args.q)
        _emit({
            "q": args.q,
            "hits": [[str(x.payload) for x in hit] for hit in rep.hits],
            "exhaustive": rep.exhaustive,
        })
        return 0
    if args.subcommand == "hyperbola-diffset":
        rep = hyperbola_diffset_search(args.q, args.t, args.size)
        _emit({
            "q": args.q, "t": args.t, "size": args.size,
            "num_hits": len(rep.hits), "exhaustive": rep.exhaustive,
        })
        return 0
    from .identities import _descriptor_for_order

    desc = _descriptor_for_order(args.q)
    if args.subcommand == "prod":
        pts = _parse_points(desc, args.points)
        res = prod_coverage(desc, pts)
        _emit({"q": args.q, "covered": sorted(str(x.payload) for x in res["covered"]),
               "fraction": res["fraction"]})
        return 0
    if args.subcommand == "spacetime":
        pts = _parse_points(desc, args.points)
        rep = spacetime_search(desc, parse_element(desc, args.z), pts, method=args.method)
        _emit({"q": args.q, "z": args.z, "num_witnesses": len(rep.hits), "found": rep.found})
        return 0
    if args.subcommand == "laurent-fs":
        T = enumerate_finite(desc)
        E = [parse_element(desc, s) for s in args.subset.split(",")]
        coeffs = {}
        for chunk in args.coeffs.split(";"):
            k, _, c = chunk.partition(":")
            coeffs[int(k)] = parse_element(desc, c)
        rep = laurent_fs_search(T, E, coeffs)
        _emit({"q": args.q, "witness": str(rep.hits[0][0].payload) if rep.hits else None})
        return 0
    raise ParseError(f"unknown pattern subcommand {args.subcommand!r}")


def _pgl2(args) -> int:
    desc = parse_descriptor(args.field)
    A = [parse_element(desc, s) for s in args.subset.split(",")]
    if args.subcommand == "qset":
        elems = q_set(A)
        _emit({"size": len(elems), "expected": len(A) * (len(A) - 1) * (len(A) - 2)})
        return 0
    b = parse_element(desc, args.b)
    if args.subcommand == "ratio":
        res = pgl2_folner_ratio(A, b, args.gen)
        _emit({k: str(v) for k, v in res.items()})
        return 0
    if args.subcommand == "section-check":
        res = inversion_section_check(symmetrized(A), b)
        _emit(res)
        return 0 if res["equal"] else 1
    raise ParseError(f"unknown pgl2 subcommand {args.subcommand!r}")


if __name__ == "__main__":
    raise SystemExit(main())
