"""Command line entry point: ``og4kit {construct|analyze|quotients|classify|meta|verify|export}``.

Exit codes: 0 success, 1 a verify suite failed, 2 bad parameters or input,
3 a size bound was exceeded, 4 a theorem-level diagnostic (no match).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import io as docio
from .acceptance import SUITES, run_suite
from .classify import classify_independent
from .errors import (BadParam, BoundExceeded, CapExceeded, DocumentError, NoIndependentQuotients,
                     Og4Error, TheoremViolation)
from .families import FAMILIES, FamilySpec
from .metacirc import check_weak_metacirculant
from .ogpair import check_og4
from .permgroup import DEFAULT_BOUND, check_perm
from .quotient import cyclic_quotient_census, distinct_quotients

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_BOUND, EXIT_THEOREM = 0, 1, 2, 3, 4


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=1))
    else:
        print(text)


def cmd_construct(args) -> int:
    spec = FamilySpec(args.family, args.r, args.s, args.group, args.orient)
    pair = spec.build()
    doc = docio.PairDocument.from_pair(pair, spec)
    if args.out:
        docio.write_document(doc, args.out)
    else:
        sys.stdout.write(doc.dumps())
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(docio.pair_dot(doc))
    return EXIT_OK


def cmd_analyze(args) -> int:
    pair = docio.read_pair(args.path)
    rep = check_og4(pair)
    stab = "?" if rep.stabilizer_order is None else rep.stabilizer_order
    lines = [
        f"OG(4): {'yes' if rep.member else 'no'}; |G_x| = {stab}",
        f"vertices {pair.n}, edges {len(pair.delta)}, group order {pair.group.order}",
        f"connected {rep.connected}, quartic {rep.quartic}, vertex-transitive "
        f"{rep.vertex_transitive}, edge-transitive {rep.edge_transitive}",
        f"orientation preserved {rep.orientation_preserved}, arc-transitive {rep.arc_transitive}, "
        f"arc orbit sizes {list(rep.arc_orbit_sizes)}",
    ]
    payload = {"member": rep.member, "stabilizer_order": rep.stabilizer_order,
               "n": pair.n, "order": pair.group.order, "connected": rep.connected,
               "quartic": rep.quartic, "vertex_transitive": rep.vertex_transitive,
               "edge_transitive": rep.edge_transitive,
               "orientation_preserved": rep.orientation_preserved,
               "arc_transitive": rep.arc_transitive,
               "arc_orbit_sizes": list(rep.arc_orbit_sizes)}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_quotients(args) -> int:
    doc = docio.read_document(args.path)
    pair = doc.to_pair()
    rows = cyclic_quotient_census(pair, args.bound)
    if not args.all:
        rows = distinct_quotients(rows)
    lines = [f"{'id':>4} {'length':>6} {'oriented':>9} {'maximal':>8} {'|N|':>6}"]
    for row in rows:
        lines.append(f"{row.index:>4} {row.length:>6} {str(row.oriented):>9} "
                     f"{str(row.maximal):>8} {row.subgroup.order:>6}")
    payload = {"rows": [{"id": r.index, "length": r.length, "oriented": r.oriented,
                         "maximal": r.maximal, "order": r.subgroup.order} for r in rows]}
    _emit(args, "\n".join(lines), payload)
    if args.csv:
        fam = doc.family
        text = docio.census_csv(rows, fam.family if fam else "", fam.r if fam else "",
                                "" if fam is None or fam.s is None else fam.s)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_classify(args) -> int:
    pair = docio.read_pair(args.path)
    try:
        rep = classify_independent(pair, args.bound, strict=args.strict_delta)
    except NoIndependentQuotients:
        _emit(args, "no independent cyclic normal quotients", {"table_line": None})
        return EXIT_OK
    r, s = rep.parameters
    lines = [f"Table 1 line {rep.table_line}; (r, s) = ({r}, {s})"
             + ("; parameters swapped" if rep.swapped else ""),
             f"|G_x| = {rep.stabilizer_order}; |K| = {rep.reduction.K.order}; "
             f"base pair on {rep.reduction.base.n} vertices",
             f"witness {list(rep.witness)}"]
    for m in rep.matches[1:]:
        lines.append(f"also line {m.line} at ({m.r}, {m.s})")
    payload = {
        "table_line": rep.table_line, "r": r, "s": s, "swapped": rep.swapped,
        "stabilizer_order": rep.stabilizer_order, "K_order": rep.reduction.K.order,
        "base_n": rep.reduction.base.n, "witness": list(rep.witness),
        "matches": [{"line": m.line, "r": m.r, "s": m.s,
                     "witness": None if m.witness is None else list(m.witness)}
                    for m in rep.matches],
        "independent_pairs": [{"r": ip.r, "s": ip.s, "n_oriented": ip.n_oriented,
                               "m_oriented": ip.m_oriented} for ip in rep.found],
    }
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def _element(token: str, pair, by_value: bool):
    if by_value:
        try:
            return check_perm(json.loads(token), pair.n)
        except (ValueError, TypeError) as exc:
            raise BadParam(f"bad element {token!r}: {exc}") from None
    try:
        return pair.group.gens[int(token)]
    except (ValueError, IndexError):
        raise BadParam(f"no generator with index {token!r}") from None


def cmd_meta(args) -> int:
    pair = docio.read_pair(args.path)
    rho = _element(args.rho, pair, args.element)
    lam = _element(args.lam, pair, args.element)
    if rho not in pair.group or lam not in pair.group:
        raise BadParam("rho and lambda must lie in the pair's group")
    rep = check_weak_metacirculant(pair, rho, lam)
    if rep.is_weak:
        head = (f"weak ({rep.m}, {rep.n})-metacirculant, exponent {rep.r_exp}; "
                f"metacirculant: {'yes' if rep.is_metacirculant else 'no'}")
    else:
        head = "not a weak metacirculant: " + "; ".join(rep.failures)
    lines = [head, f"rho-quotient: {rep.rho_quotient.value}",
             f"H transitive {rep.H_transitive}, regular {rep.H_regular}"]
    payload = {"is_weak": rep.is_weak, "m": rep.m, "n": rep.n, "r_exp": rep.r_exp,
               "is_metacirculant": rep.is_metacirculant, "rho_quotient": rep.rho_quotient.value,
               "H_transitive": rep.H_transitive, "H_regular": rep.H_regular,
               "failures": rep.failures}
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise BadParam(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    ok_all = True
    for name in names:
        t0 = time.perf_counter()
        claims = run_suite(name)
        ok = all(cl.passed for cl in claims)
        ok_all &= ok
        print(f"{'PASS' if ok else 'FAIL'} {name} ({time.perf_counter() - t0:.2f}s)")
        for cl in claims:
            mark = "ok  " if cl.passed else "FAIL"
            detail = f" [{cl.detail}]" if cl.detail else ""
            print(f"  {mark} {cl.name}{detail} ({cl.seconds:.2f}s)")
    return EXIT_OK if ok_all else EXIT_FAIL


def cmd_export(args) -> int:
    doc = docio.read_document(args.path)
    if not (args.dot or args.csv):
        raise BadParam("export needs --dot and/or --csv")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(docio.pair_dot(doc))
    if args.csv:
        rows = distinct_quotients(cyclic_quotient_census(doc.to_pair(), args.bound))
        fam = doc.family
        text = docio.census_csv(rows, fam.family if fam else "", fam.r if fam else "",
                                "" if fam is None or fam.s is None else fam.s)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="og4kit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def with_common(p, bound=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if bound:
            p.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                           help="largest group order to enumerate (default %(default)s)")
        return p

    p = sub.add_parser("construct", help="build a family pair and write its document")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("r", type=int)
    p.add_argument("s", type=int, nargs="?")
    p.add_argument("--group", default="G", choices=("G", "H"))
    p.add_argument("--orient", default=None, choices=("con1", "con2c", "con2a"))
    p.add_argument("-o", "--out", help="output path (default: stdout)")
    p.add_argument("--dot", help="also write a DOT file")
    p.set_defaults(func=cmd_construct)

    p = with_common(sub.add_parser("analyze", help="OG(4) membership report"))
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = with_common(sub.add_parser("quotients", help="cyclic normal quotient census"), bound=True)
    p.add_argument("path")
    p.add_argument("--all", action="store_true", help="one row per normal subgroup")
    p.add_argument("--csv", help="write the census as CSV")
    p.set_defaults(func=cmd_quotients)

    p = with_common(sub.add_parser("classify", help="match against the six reference lines"),
                    bound=True)
    p.add_argument("path")
    p.add_argument("--strict-delta", action="store_true",
                   help="do not allow reversing the orientation when matching")
    p.set_defaults(func=cmd_classify)

    p = with_common(sub.add_parser("meta", help="weak metacirculant check for (rho, lambda)"))
    p.add_argument("path")
    p.add_argument("rho", help="generator index, or an image array with --element")
    p.add_argument("lam", metavar="lambda", help="generator index, or an image array with --element")
    p.add_argument("--element", action="store_true",
                   help="read rho and lambda as JSON image arrays")
    p.set_defaults(func=cmd_meta)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("suite", nargs="?", default="all", help=f"all or one of: {', '.join(SUITES)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="DOT drawing and/or CSV census of a document")
    p.add_argument("path")
    p.add_argument("--dot")
    p.add_argument("--csv")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "orient", "unset") is None:
        args.orient = "con2a" if args.family == "double" else "con1"
    try:
        return args.func(args)
    except (BoundExceeded, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except TheoremViolation as exc:
        print(f"diagnostic: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (BadParam, DocumentError, Og4Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
