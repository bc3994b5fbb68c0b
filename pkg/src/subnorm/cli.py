"""Command-line front end.

    subnorm compute dn --builtin S3
    subnorm compute subnorm --builtin S4 --element "(0 1)"
    subnorm family frobenius 7 1 3 --out f21.json
    subnorm sweep --checks dn-bound,prop21 --format csv
    subnorm casolo --builtin S4 --prime 2
    subnorm delta --builtin S6 --element "(0 1)"
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .families import FamilySpec, build
from .group import Group, GroupError, normalizer
from .groupfile import dumps_group, load_group
from .perm import Permutation
from .probability import (
    casolo_check,
    dc,
    delta,
    dn,
    nil_report,
    nil_set,
    ratio_str,
    reports_to_csv,
    s1_set,
    spr,
    spr_element,
    subnormalizer_set,
)
from .sweep import CHECKS, run_checks
from .sylow import p_subgroups

EXIT_FAIL = 1
EXIT_USAGE = 2


def _load(args) -> Group:
    if args.group and args.builtin:
        raise GroupError("give either --group or --builtin, not both")
    if args.group:
        return load_group(args.group)
    if args.builtin:
        return catalog.lookup(args.builtin)
    raise GroupError("no group given; use --group <path> or --builtin <name>")


def _element(G: Group, text: str | None) -> int:
    if text is None:
        raise GroupError("this command needs --element")
    text = text.strip()
    if text.startswith("["):
        return G.find(json.loads(text))
    try:
        return G.find(Permutation.parse(text, G.degree))
    except ValueError as exc:
        raise GroupError(f"bad element {text!r}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(r: Fraction, decimal: bool) -> str:
    s = str(r)
    return f"{s}\t{float(r):.6f}" if decimal else s


def cmd_compute(args) -> int:
    G = _load(args)
    cap = args.max_order
    what = args.which
    if what == "report":
        rep = nil_report(G, verify=args.verify, max_order=cap)
        if args.format == "csv":
            _emit(reports_to_csv([rep], args.decimal), args.out)
        else:
            _emit(json.dumps(rep.to_dict(args.decimal), indent=2) + "\n", args.out)
        return 0
    if what in ("dn", "spr", "dc"):
        if what == "dn":
            value = dn(G, cap)
        elif what == "spr":
            value = spr(G, args.verify, cap)
        else:
            value = dc(G)
        if args.format == "json":
            d = {"group": G.name, "order": G.order, what: ratio_str(value)}
            if args.decimal:
                d[what + "_decimal"] = float(value)
            _emit(json.dumps(d) + "\n", args.out)
        else:
            _emit(_fmt(value, args.decimal) + "\n", args.out)
        return 0
    x = _element(G, args.element)
    if what == "nilset":
        members = nil_set(G, x, cap)
        ratio = Fraction(len(members), G.order)
    else:
        members = subnormalizer_set(G, x, cap)
        ratio = spr_element(G, x, args.verify, cap)
    if args.format == "json":
        d = {
            "group": G.name,
            "order": G.order,
            "element": G.perm(x).cycle_string(),
            "size": len(members),
            "ratio": ratio_str(ratio),
            "members": [G.perm(m).cycle_string() for m in members],
        }
        _emit(json.dumps(d, indent=2) + "\n", args.out)
    else:
        lines = [f"size\t{len(members)}", f"ratio\t{_fmt(ratio, args.decimal)}"]
        lines += [G.perm(m).cycle_string() for m in members]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_family(args) -> int:
    spec = FamilySpec(args.kind, tuple(args.params))
    G = build(spec, allow_large=args.allow_large)
    _emit(dumps_group(G), args.out)
    if args.out:
        print(f"wrote {G.name}: order {G.order}, degree {G.degree} -> {args.out}", file=sys.stderr)
    return 0


def cmd_sweep(args) -> int:
    groups = [catalog.lookup(b) for b in args.builtin or []]
    groups += [load_group(p) for p in args.group or []]
    if not groups:
        groups = catalog.default_catalog()
    checks = args.checks.split(",") if args.checks else list(CHECKS)
    report = run_checks(groups, checks, verify=args.verify, max_order=args.max_order)
    _emit(report.to_csv() if args.format == "csv" else report.to_json() + "\n", args.out)
    counts = {s: sum(r.status == s for r in report.rows) for s in ("pass", "tight", "fail", "skipped")}
    print(
        f"{len(report.rows)} rows: " + ", ".join(f"{v} {k}" for k, v in counts.items()),
        file=sys.stderr,
    )
    return 0 if report.ok else EXIT_FAIL


def cmd_casolo(args) -> int:
    G = _load(args)
    if args.element is not None:
        x = _element(G, args.element)
        p = G.prime_base[x]
        if p <= 1:
            raise GroupError("--element must be a nontrivial p-element")
        targets = [(p, G.generate([x]))]
    else:
        primes = [args.prime] if args.prime else G.primes
        targets = [(p, H) for p in primes for H in p_subgroups(G, p)]
    rows = []
    bad = 0
    for p, H in targets:
        res = casolo_check(G, p, H, args.max_order)
        bad += not res.equal
        rows.append({"prime": p, "order": H.order, "lhs": res.lhs, "rhs": res.rhs, "equal": res.equal})
    if args.format == "json":
        _emit(json.dumps({"group": G.name, "checks": rows}, indent=2) + "\n", args.out)
    else:
        lines = ["prime\t|H|\tlhs\trhs\tequal"]
        lines += [f"{r['prime']}\t{r['order']}\t{r['lhs']}\t{r['rhs']}\t{str(r['equal']).lower()}" for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if bad else 0


def cmd_delta(args) -> int:
    G = _load(args)
    H = G.generate([_element(G, args.element)])
    d = delta(G, H, args.max_order)
    n = normalizer(G, H).order
    s1 = len(s1_set(G, H, args.max_order))
    ok = s1 == d * n
    if args.format == "json":
        _emit(json.dumps({"group": G.name, "delta": d, "normalizer": n, "s1": s1, "identity": ok}) + "\n", args.out)
    else:
        _emit(f"delta\t{d}\nnormalizer\t{n}\ns1\t{s1}\nidentity\t{str(ok).lower()}\n", args.out)
    return 0 if ok else EXIT_FAIL


def _source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", help="path to a JSON group file")
    p.add_argument("--builtin", help="built-in group, e.g. S3, D6, psl2:5, frobenius:7,1,3, galois:2")


def _common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--max-order", type=int, help="override the size cap")
    p.add_argument("--format", choices=formats, default=formats[0])
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="subnorm", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="dn, spr, dc, Nil_G(x), S_G(x) or a full report")
    p.add_argument("which", choices=["dn", "spr", "dc", "nilset", "subnorm", "report"])
    _source(p)
    p.add_argument("--element", help='element in cycle notation, e.g. "(0 1)(2 3)"')
    p.add_argument("--verify", action="store_true", help="compute spr both ways and compare")
    p.add_argument("--decimal", action="store_true", help="add a decimal approximation")
    _common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="write a family member as a group file")
    p.add_argument("kind", choices=["symmetric", "cyclic", "dihedral", "psl2", "frobenius", "galois"])
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--allow-large", action="store_true", help="permit galois k = 3")
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", help="run checks over a catalog")
    p.add_argument("--builtin", action="append", help="repeatable; default is the built-in catalog")
    p.add_argument("--group", action="append", help="repeatable group file path")
    p.add_argument("--checks", help=f"comma list from: {','.join(CHECKS)}")
    p.add_argument("--verify", action="store_true")
    _common(p, ("json", "csv"))
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("casolo", help="compare |S_G(H)| with lambda_G(H)|N_G(P)|")
    _source(p)
    p.add_argument("--prime", type=int)
    p.add_argument("--element")
    _common(p)
    p.set_defaults(func=cmd_casolo)

    p = sub.add_parser("delta", help="delta_G(<x>) and the S^1 counting identity")
    _source(p)
    p.add_argument("--element", required=True)
    _common(p)
    p.set_defaults(func=cmd_delta)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GroupError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
