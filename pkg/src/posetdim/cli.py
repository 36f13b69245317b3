"""Command line front end: ``posetdim gen|dim|bounds|verify|embed``.

Exit codes: 0 success, 2 parse error, 3 verification failed,
4 cap exceeded, 5 bad parameters.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import constructions as C
from .bounds import bound_report
from .errors import BadMatching, BadParameters, CapExceeded, NotARealizer, TooSmall
from .jsonio import ParseError, load_poset, load_realizer, poset_to_json
from .multipartite import MultipartitePoset
from .solver import (
    dominance_matches,
    embed,
    exact_dimension,
    first_violation,
    greedy_dimension_upper_bound,
)

EXIT_OK, EXIT_PARSE, EXIT_VERIFY, EXIT_CAP, EXIT_PARAMS = 0, 2, 3, 4, 5

FAMILIES = ("standard", "stacked", "complete-minus-matching", "lower-bound-family",
            "subset", "random", "random-multipartite")


def _emit(obj, args, path=None):
    text = json.dumps(obj, indent=2 if getattr(args, "pretty", False) else None)
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _parse_matching(text: str):
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            i, j = chunk.split(",")
            pairs.append((int(i), int(j)))
    return C.Matching(tuple(pairs))


def cmd_gen(args):
    fam = args.family
    if fam == "standard":
        obj = C.standard_example(args.n)
    elif fam == "stacked":
        obj = C.stacked_standard(args.n)
    elif fam == "complete-minus-matching":
        if args.matching is not None:
            m = _parse_matching(args.matching)
        else:
            m = C.random_matching(args.h, args.k, args.seed, g=args.g)
        obj = C.complete_minus_matching(args.h, args.k, m)
    elif fam == "lower-bound-family":
        obj = C.lower_bound_family(args.d, args.h, args.k, allow_d1=args.allow_d1)
    elif fam == "subset":
        obj = C.subset_poset(args.k1, args.k2, args.n)
    elif fam == "random":
        obj = C.random_poset(args.n, args.density, args.seed)
    else:
        sizes = [int(s) for s in args.sizes.split(",")]
        obj = C.random_multipartite(sizes, args.density, args.seed)
    _emit(poset_to_json(obj), args, args.output)
    return EXIT_OK


def cmd_dim(args):
    p = load_poset(args.input)
    if args.greedy:
        r = greedy_dimension_upper_bound(p)
        out = {"dimension": len(r), "exact": False, "witness": r.to_json()["orders"]}
        _emit(out, args)
        return EXIT_OK
    try:
        res = exact_dimension(p, max_d=args.max_d, pair_mode=args.pair_mode)
    except CapExceeded as exc:
        _emit({"dimension": None, "error": str(exc), "certificate": exc.certificate.to_json()}, args)
        return EXIT_CAP
    out = res.to_json()
    out["exact"] = True
    _emit(out, args)
    if args.witness_out:
        _emit(res.witness.to_json(), args, args.witness_out)
    return EXIT_OK


def cmd_bounds(args):
    obj = load_poset(args.input)
    if not isinstance(obj, MultipartitePoset):
        raise ParseError("bounds needs a poset with 'parts'")
    report = bound_report(obj, mode=args.mode, threads=args.threads)
    _emit(report.to_json(), args)
    if args.witness_out:
        _emit(report.witness.to_json(), args, args.witness_out)
    return EXIT_OK


def cmd_verify(args):
    p = load_poset(args.input)
    r = load_realizer(args.realizer)
    bad = first_violation(p, r)
    if bad is None:
        _emit({"realizer": True, "orders": len(r)}, args)
        return EXIT_OK
    out = {"realizer": False, "reason": bad[0]}
    if bad[0] == "not-extension":
        out.update(order=bad[1], pair=[bad[2], bad[3]])
    elif bad[0] == "not-reversed":
        out.update(pair=[bad[1], bad[2]])
    _emit(out, args)
    return EXIT_VERIFY


def cmd_embed(args):
    p = load_poset(args.input)
    r = load_realizer(args.realizer)
    coords = embed(p, r)
    _emit({"coordinates": {x: list(v) for x, v in coords.items()},
           "reproduces_order": dominance_matches(p, coords)}, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="posetdim", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a poset family as JSON")
    g.add_argument("family", choices=FAMILIES)
    for flag in ("n", "h", "k", "d", "k1", "k2", "g"):
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("--matching", help="pairs as 'i,j;i,j;...' (1-based)")
    g.add_argument("--sizes", default="3,3,3", help="part sizes for random-multipartite")
    g.add_argument("--density", type=float, default=0.5)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--allow-d1", action="store_true")
    g.add_argument("-o", "--output", default="-")
    g.add_argument("--pretty", action="store_true")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("dim", help="exact order dimension with witness and certificate")
    d.add_argument("input")
    d.add_argument("--max-d", type=int)
    d.add_argument("--greedy", action="store_true", help="greedy upper bound only")
    d.add_argument("--pair-mode", choices=("incomparable", "critical"), default="incomparable")
    d.add_argument("--witness-out")
    d.add_argument("--pretty", action="store_true")
    d.set_defaults(func=cmd_dim)

    b = sub.add_parser("bounds", help="B(P), sum and gap-chaining bounds for a multipartite poset")
    b.add_argument("input")
    b.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    b.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    b.add_argument("--witness-out")
    b.add_argument("--pretty", action="store_true")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="check that a family of orders realizes a poset")
    v.add_argument("input")
    v.add_argument("realizer")
    v.add_argument("--pretty", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("embed", help="coordinates in Z^d from a realizer")
    e.add_argument("input")
    e.add_argument("realizer")
    e.add_argument("--pretty", action="store_true")
    e.set_defaults(func=cmd_embed)
    return ap


_PARAM_ERRORS = (TooSmall, BadMatching, BadParameters)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"posetdim: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PARAM_ERRORS as exc:
        print(f"posetdim: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except NotARealizer as exc:
        print(f"posetdim: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (TypeError, ValueError) as exc:
        # PosetError is a ValueError: bad generator input vs. a malformed file
        print(f"posetdim: {exc}", file=sys.stderr)
        return EXIT_PARAMS if args.command == "gen" else EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
