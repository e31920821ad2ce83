"""Command-line interface: ``hollowlab rings|lattice|profile|verify|search``.

Exit status is 0 on success, 1 when a check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .checks import REGISTRY
from .corpus import LatticeCache, find_ring, get_lattice, resolve_corpus
from .errors import HollowLabError, UnknownCheck, UnknownProperty
from .export import export_lattice
from .hollow import hollow_profile, irreducibility_profile
from .lattice import Ideal, IdealLattice, ideal_span, lattice_summary, ring_flags, whole_ring
from .verify import run_suite, search_counterexample

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _top_level_split(s: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_ideal(R, spec: str) -> Ideal:
    """Ideal from generator names: ``(2)``, ``x,y``, ``((1,0),(0,1))`` or ``R``.

    A spec that is itself an element name (such as ``(1,0)`` in a product
    ring) is read as that principal ideal.
    """
    s = spec.strip()
    if s == "R":
        return whole_ring(R)
    if s in R.name_index:
        return ideal_span(R, [R.element(s)])
    inner = s[1:-1] if s.startswith("(") and s.endswith(")") else s
    gens = []
    for name in _top_level_split(inner):
        if name not in R.name_index:
            raise UsageError(f"no element named {name!r} in {R.provenance}")
        gens.append(R.element(name))
    return ideal_span(R, gens)


def _mark(flag: bool) -> str:
    return "✓" if flag else "✗"


def _cache(args) -> LatticeCache | None:
    if getattr(args, "no_cache", False):
        return None
    return LatticeCache(args.cache)


def _lattice(args) -> IdealLattice:
    rings = resolve_corpus(getattr(args, "corpus", None)) if getattr(args, "corpus", None) else []
    R = find_ring(rings, args.ring)
    return get_lattice(R, _cache(args))


# ----------------------------------------------------------- commands


def cmd_rings(args, out) -> int:
    rings = resolve_corpus(args.corpus)
    cache = _cache(args)
    if args.action == "list":
        for R in rings:
            L = get_lattice(R, cache)
            print(f"{R.provenance}\torder={R.order}\tideals={len(L)}\tmaximals={len(L.maximals)}", file=out)
        return 0
    if not args.name:
        raise UsageError("rings show needs a ring name")
    R = find_ring(rings, args.name)
    L = get_lattice(R, cache)
    S = lattice_summary(L)
    F = ring_flags(L)
    print(f"ring: {R.provenance}", file=out)
    print(f"order: {R.order}", file=out)
    print(f"units: {len(R.units)}", file=out)
    print(f"ideals ({len(L)}): {' '.join(L.labels)}", file=out)
    print(f"maximal: {' '.join(L.labels[i] for i in L.maximals)}", file=out)
    print(f"J(R): {L.label(S.jacobson_radical)}", file=out)
    print(f"Nil(R): {L.label(S.nilradical)}", file=out)
    print(f"local: {_mark(S.is_local)}  field: {_mark(S.is_field)}", file=out)
    print(f"arithmetical: {_mark(F.is_arithmetical)}  Bezout: {_mark(F.is_bezout)}", file=out)
    return 0


def cmd_lattice(args, out) -> int:
    L = _lattice(args)
    out.write(export_lattice(L, args.format))
    return 0


def cmd_profile(args, out) -> int:
    L = _lattice(args)
    R = L.ring
    I = parse_ideal(R, args.ideal)
    i = L.index_of(I)
    p = hollow_profile(L, i)
    q = irreducibility_profile(L, i)
    print(f"ring: {R.provenance}", file=out)
    print(f"ideal: {L.labels[i]} = {{{', '.join(I.names())}}}", file=out)
    print(f"Γ = {L.label(p.gamma)}", file=out)
    print(f"L = {L.label(p.l_ideal)}", file=out)
    print(f"SH {_mark(p.is_sh)}", file=out)
    print(f"CSH {_mark(p.is_csh)}", file=out)
    print(f"SI {_mark(q.is_si)}  CSI {_mark(q.is_csi)}  CI {_mark(q.is_ci)}  waist {_mark(q.is_waist)}", file=out)
    case = p.case
    if case.number == 1:
        detail = f"case 1 (unique escaped maximal {L.labels[case.maximal]})"
    elif case.number == 2:
        detail = "case 2 (inside every power of every maximal)"
    elif case.number == 3:
        detail = f"case 3 (maximal {L.labels[case.maximal]}, n = {case.n})"
    else:
        detail = "case: not SH" if case.kind == "NotSH" else f"case: {case.kind}"
    print(detail, file=out)
    if p.raw_sh != p.is_sh:
        print("note: the bare two-summand condition holds for the zero ideal", file=out)
    return 0


def cmd_verify(args, out, err) -> int:
    if not args.all and not args.check:
        raise UsageError("verify needs --all or --check ID")
    ids = None
    if args.check:
        for cid in args.check:
            if cid not in REGISTRY:
                raise UnknownCheck(cid)
        ids = args.check
    rings = resolve_corpus(args.corpus)
    t0 = time.perf_counter()
    res = run_suite(rings, ids, cache=_cache(args), jobs=args.jobs)
    for rep in res.reports:
        out.write(rep.to_json() + "\n")
    c = res.counts
    print(
        f"{len(rings)} rings, {len({r.check for r in res.reports})} checks: "
        f"{c['pass']} pass, {c['fail']} fail, {c['vacuous']} vacuous "
        f"({time.perf_counter() - t0:.1f}s)",
        file=err,
    )
    for cid in res.degenerate_checks:
        print(f"degenerate (expected vacuous): {cid}", file=err)
    for cid in res.vacuous_checks:
        print(f"VACUOUS on the whole corpus: {cid}", file=err)
    for rep in res.failures:
        print(f"FAIL {rep.check} on {rep.ring}: {json.dumps(rep.witness, ensure_ascii=False)}", file=err)
    return 0 if res.ok else 1


def cmd_search(args, out) -> int:
    rings = resolve_corpus(args.corpus)
    hit = search_counterexample(args.property, rings, cache=_cache(args))
    print(json.dumps(hit.to_record(), ensure_ascii=False) if hit else "none", file=out)
    return 0


# ------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", metavar="DIR", help="lattice cache directory (default ./.hollow-cache or $HOLLOW_CACHE)")
    common.add_argument("--no-cache", action="store_true", help="enumerate lattices without touching the cache")
    common.add_argument("--corpus", metavar="PATH", default=None, help="JSON corpus spec, or 'default'")

    p = argparse.ArgumentParser(prog="hollowlab", description="Strong hollowness laboratory for finite commutative rings.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rings", parents=[common], help="list or describe corpus rings")
    r.add_argument("action", choices=["list", "show"])
    r.add_argument("name", nargs="?")

    lat = sub.add_parser("lattice", parents=[common], help="export an ideal lattice")
    lat.add_argument("action", choices=["dump"])
    lat.add_argument("--ring", required=True)
    lat.add_argument("--format", choices=["dot", "json"], default="dot")

    pr = sub.add_parser("profile", parents=[common], help="hollowness profile of one ideal")
    pr.add_argument("--ring", required=True)
    pr.add_argument("--ideal", required=True, help="generator names, e.g. '(2)' or '(x,y)'")

    v = sub.add_parser("verify", parents=[common], help="run theorem checks, NDJSON on stdout")
    v.add_argument("--all", action="store_true")
    v.add_argument("--check", action="append", metavar="ID")
    v.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("search", parents=[common], help="look for an ideal with a given property")
    s.add_argument("--property", required=True)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "rings":
            return cmd_rings(args, out)
        if args.command == "lattice":
            return cmd_lattice(args, out)
        if args.command == "profile":
            return cmd_profile(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        return cmd_search(args, out)
    except (UsageError, UnknownCheck, UnknownProperty, HollowLabError, KeyError, OSError, ValueError) as exc:
        print(f"hollowlab: error: {exc}", file=err)
        return USAGE_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
