"""Command-line interface: ``necklace-sandpile <command> ...``.

Exit status is 0 on success, 1 when a verification or golden comparison
fails, and 2 on bad input.  Output goes to stdout as TSV (the default) or
JSON (``--format json``), always in a fixed order.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

import numpy as np

from .abgroup import DEFAULT_MAX_ORDER
from .bijection import KINDS, family
from .circulant import quotient_group_type, unit_group_order
from .debruijn import build_gamma, closed_form, laplacian, sandpile_group
from .gfpoly import (
    FieldCtx,
    count_normal,
    count_primitive,
    enumerate_irreducible,
    format_poly,
    is_normal,
    is_primitive,
    parse_poly,
)
from .golden import A_9, A_9_PRIME, AVERAGING_CHAINS, ORBITS, SANDPILE_EXAMPLES, TABLES
from .necklace import count_aperiodic, enumerate_necklaces
from .orbitlab import format_chains, group_report
from .verify import CHECKS, DEFAULT_RANGES, VerificationResult, compare_row, compute_row, format_row, run_checks
from .zlinalg import conjugate_by_shift_basis, format_matrix

DEFAULT_FIELD_BITS = 22


class UsageError(ValueError):
    pass


class Context:
    def __init__(self, args):
        self.fmt = args.format
        self.golden = args.golden
        self.max_order = args.max_group_order
        self.max_field_bits = args.max_field_bits
        self.jobs = args.jobs
        self.out = sys.stdout
        self.failed = False

    def emit(self, text: str = ""):
        self.out.write(text + "\n")

    def emit_json(self, obj):
        self.emit(json.dumps(obj, indent=2, ensure_ascii=False))

    def check_field(self, p: int, n: int):
        if p < 2 or n < 1:
            raise UsageError(f"need p >= 2 and n >= 1, got p={p}, n={n}")
        if p ** n > 1 << self.max_field_bits:
            raise UsageError(f"field of order {p}^{n} exceeds --max-field-bits={self.max_field_bits}")

    def result(self, r: VerificationResult):
        if r.status == "fail":
            self.failed = True
        if self.fmt == "json":
            return r.to_json()
        self.emit(r.line())


def _require_prime(p: int):
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise UsageError(f"p must be prime, got {p}")


# -- commands -------------------------------------------------------------------

def cmd_necklaces(ctx: Context, args):
    _require_prime(args.p)
    ctx.check_field(args.p, args.n)
    neck = enumerate_necklaces(args.p, args.n)
    if args.count:
        count = count_aperiodic(args.p, args.n)
        if ctx.fmt == "json":
            ctx.emit_json({"p": args.p, "n": args.n, "count": count, "enumerated": len(neck)})
        else:
            ctx.emit(str(count))
        return
    if ctx.fmt == "json":
        ctx.emit_json([str(v) for v in neck])
    else:
        for v in neck:
            ctx.emit(str(v))


def cmd_polys(ctx: Context, args):
    _require_prime(args.p)
    ctx.check_field(args.p, args.n)
    field = FieldCtx(args.p, args.n)
    rows = []
    for f in enumerate_irreducible(args.p, args.n):
        normal, primitive = is_normal(f, field), is_primitive(f, field)
        if args.kind == "normal" and not normal or args.kind == "primitive" and not primitive:
            continue
        rows.append((format_poly(f), normal, primitive))
    if ctx.fmt == "json":
        ctx.emit_json([{"poly": f, "normal": a, "primitive": b} for f, a, b in rows])
    else:
        for f, a, b in rows:
            ctx.emit(f"{f}\t{'normal' if a else '-'}\t{'primitive' if b else '-'}")


def _pick_param(fam, args):
    params = fam.params
    if args.poly:
        f = parse_poly(args.poly, fam.p)
        attr = "normal_poly" if fam.kind == "reutenauer" else "primitive_poly"
        for a in params:
            if getattr(a, attr) == f:
                return a
        raise UsageError(f"{args.poly} is not a {'normal' if fam.kind == 'reutenauer' else 'primitive'} "
                         f"polynomial of degree {fam.n} over F_{fam.p}")
    if not 0 <= args.param < len(params):
        raise UsageError(f"--param must be in 0..{len(params) - 1}")
    return params[args.param]


def _map_rows(ctx: Context, args):
    _require_prime(args.p)
    ctx.check_field(args.p, args.n)
    fam = family(args.kind, args.p, args.n)
    param = _pick_param(fam, args)
    table = fam.table(param)
    return fam, param, [(str(v), format_poly(fam.polynomial(int(t)))) for v, t in zip(fam.necklaces, table)]


def cmd_map(ctx: Context, args):
    fam, param, rows = _map_rows(ctx, args)
    if ctx.fmt == "json":
        gen = param.normal_poly if fam.kind == "reutenauer" else param.primitive_poly
        ctx.emit_json({"kind": fam.kind, "p": fam.p, "n": fam.n, "parameter": format_poly(gen),
                       "map": [{"necklace": a, "polynomial": b} for a, b in rows]})
    else:
        for a, b in rows:
            ctx.emit(f"{a}\t{b}")


def _count_params(kind: str, p: int, n: int) -> int:
    return count_normal(p, n) if kind == "reutenauer" else count_primitive(p, n)


def cmd_group(ctx: Context, args):
    _require_prime(args.p)
    ctx.check_field(args.p, args.n)
    if _count_params(args.kind, args.p, args.n) > ctx.max_order:
        raise UsageError(f"group order exceeds --max-group-order={ctx.max_order}")
    fam = family(args.kind, args.p, args.n)
    g = fam.necklace_group(max_order=ctx.max_order)
    if ctx.fmt == "json":
        ctx.emit_json({"kind": args.kind, "p": args.p, "n": args.n, "group": g.type.to_json(),
                       "type": str(g.type)})
    else:
        ctx.emit(f"{g.order}\t{g.type}")


def cmd_orbits(ctx: Context, args):
    if args.flip_extended and args.p != 2:
        raise UsageError("--flip-extended needs p = 2")
    _require_prime(args.p)
    ctx.check_field(args.p, args.n)
    if _count_params(args.group, args.p, args.n) > ctx.max_order:
        raise UsageError(f"group order exceeds --max-group-order={ctx.max_order}")
    rep = group_report(args.group, args.p, args.n, with_averaging=args.averaging,
                       with_flip=args.flip_extended)
    if ctx.golden and args.group == "reutenauer" and args.p == 2:
        _golden_orbits(ctx, rep, args.n)
    if ctx.fmt == "json":
        ctx.emit_json(rep.to_json())
        return
    for i, orb in enumerate(rep.orbits):
        ctx.emit(f"O_{i + 1}\t{len(orb)}\t" + ",".join(str(v) for v in orb))
    ctx.emit(f"# type {rep.group_type}, main orbit "
             + (f"O_{rep.main_orbit + 1} ({rep.main_orbit_count} qualifying)" if rep.main_orbit is not None else "none"))
    if args.averaging:
        if rep.violations:
            ctx.emit(f"# averaging mixes orbits: {sorted(rep.violations)}")
        else:
            ctx.emit(f"# averaging {format_chains(rep)}")
    if args.flip_extended:
        ctx.emit("# flip-extended sizes " + "+".join(map(str, rep.flip_extended_sizes)))
        if rep.flip_violations:
            ctx.emit(f"# flip-extended orbits not a union of 1 or 2 orbits: {rep.flip_violations}")


def _golden_orbits(ctx: Context, rep, n: int):
    ref = TABLES["reutenauer"].get(n)
    ok = ref is None or tuple(rep.orbit_sizes) == ref.orbits
    if n in ORBITS:
        ok &= [sorted(o) for o in ORBITS[n]] == [sorted(str(v) for v in o) for o in rep.orbits]
    if n in AVERAGING_CHAINS and rep.averaging_graph:
        ok &= not rep.violations and format_chains(rep) == AVERAGING_CHAINS[n]
    if not ok:
        ctx.failed = True
        sys.stderr.write(f"orbits for n={n} differ from the reference data\n")


def cmd_sandpile(ctx: Context, args):
    if args.p < 2 or args.n < 1:
        raise UsageError(f"need p >= 2 and n >= 1, got p={args.p}, n={args.n}")
    g = build_gamma(args.p, args.n)
    if args.dump_matrix:
        ctx.emit(format_matrix(laplacian(g)).rstrip("\n"))
        return
    out = {}
    if args.method in ("snf", "both"):
        out["snf"] = sandpile_group(g)
    if args.method in ("closed-form", "both"):
        if args.p != 2:
            raise UsageError("the closed form is for p = 2 only")
        out["closed-form"] = closed_form(args.n)
    if args.method == "both" and out["snf"] != out["closed-form"]:
        ctx.failed = True
    if ctx.golden and args.p == 2:
        ref = SANDPILE_EXAMPLES.get(args.n) or (TABLES["reutenauer"][args.n].group
                                                if args.n in TABLES["reutenauer"] else None)
        if ref is not None and any(t != ref for t in out.values()):
            ctx.failed = True
    if ctx.fmt == "json":
        ctx.emit_json({"p": args.p, "n": args.n, **{k: t.to_json() for k, t in out.items()}})
    else:
        for k, t in out.items():
            ctx.emit(f"{k}\t{t.order}\t{t}")


def cmd_circulant(ctx: Context, args):
    _require_prime(args.p)
    ctx.check_field(args.p, args.n)
    units = unit_group_order(args.p, args.n)
    if units // args.n > ctx.max_order:
        raise UsageError(f"quotient order exceeds --max-group-order={ctx.max_order}")
    q = quotient_group_type(args.p, args.n, ctx.max_order)
    out = {"p": args.p, "n": args.n, "units": str(units), "quotient": q.to_json()}
    lines = [f"units\t{units}", f"quotient\t{q.order}\t{q}"]
    if args.compare_reutenauer:
        rg = family("reutenauer", args.p, args.n).necklace_group(max_order=ctx.max_order).type
        out["reutenauer"] = rg.to_json()
        out["match"] = rg == q
        lines.append(f"reutenauer\t{rg.order}\t{rg}\t{'match' if rg == q else 'MISMATCH'}")
        if rg != q:
            ctx.failed = True
    if ctx.fmt == "json":
        ctx.emit_json(out)
    else:
        for line in lines:
            ctx.emit(line)


def _n_range(args, default):
    lo = args.n_min if args.n_min is not None else default[0]
    hi = args.n_max if args.n_max is not None else default[1]
    if lo > hi:
        raise UsageError(f"empty range {lo}..{hi}")
    return range(lo, hi + 1)


def cmd_table(ctx: Context, args):
    default = {"reutenauer": (2, 15), "golomb": (2, 12), "sandpile": (2, 15)}[args.which]
    rows = []
    for n in _n_range(args, default):
        if args.which != "sandpile":
            if 2 ** n > 1 << ctx.max_field_bits or _count_params(args.which, 2, n) > ctx.max_order:
                rows.append({"n": n, "status": "skip"})
                if ctx.fmt != "json":
                    ctx.emit(f"{n}\tskip")
                continue
        row = compute_row(args.which, n, ctx.max_order)
        entry = row.to_json()
        if ctx.golden:
            r = compare_row(args.which, row)
            if r is not None:
                entry["golden"] = r.status
                if r.status == "fail":
                    ctx.failed = True
        rows.append(entry)
        if ctx.fmt != "json":
            ctx.emit(format_row(row) + (f"\t{entry['golden']}" if "golden" in entry else ""))
    if ctx.fmt == "json":
        ctx.emit_json(rows)


def cmd_verify(ctx: Context, args):
    names = list(CHECKS) if args.check == "all" else [args.check]
    ranges = {}
    if args.n_min is not None or args.n_max is not None:
        for name in names:
            ns = [n for _, n in DEFAULT_RANGES[name]]
            r = _n_range(args, (min(ns), max(ns)))
            ps = sorted({p for p, _ in DEFAULT_RANGES[name]}) if args.p is None else [args.p]
            ranges[name] = [(p, n) for p in ps for n in r
                            if not (name == "lemma-odd" and n % 2 == 0)
                            and not (name == "lemma-doubling" and n % 2)]
    elif args.p is not None:
        for name in names:
            ranges[name] = [(p, n) for p, n in DEFAULT_RANGES[name] if p == args.p]
            if not ranges[name]:
                ranges[name] = [(args.p, n) for n in sorted({n for _, n in DEFAULT_RANGES[name]})]
    results = run_checks(names, ranges, max_order=ctx.max_order, jobs=ctx.jobs)
    js = [ctx.result(r) for r in results]
    if ctx.fmt == "json":
        ctx.emit_json(js)


def cmd_dump(ctx: Context, args):
    what = args.what
    if what == "necklaces":
        return cmd_necklaces(ctx, argparse.Namespace(p=args.p, n=args.n, count=False))
    if what == "irreducibles":
        _require_prime(args.p)
        ctx.check_field(args.p, args.n)
        polys = [format_poly(f) for f in enumerate_irreducible(args.p, args.n)]
        if ctx.fmt == "json":
            ctx.emit_json(polys)
        else:
            for f in polys:
                ctx.emit(f)
        return
    if what == "map":
        args.kind = "golomb" if args.golomb else "reutenauer"
        return cmd_map(ctx, args)
    if what == "matrix":
        if args.p < 2 or args.n < 1:
            raise UsageError(f"need p >= 2 and n >= 1, got p={args.p}, n={args.n}")
        m = laplacian(build_gamma(args.p, args.n))
        if args.shifted:
            m = conjugate_by_shift_basis(m)
        if ctx.golden and args.p == 2 and args.n == 9 and m != (A_9_PRIME if args.shifted else A_9):
            ctx.failed = True
        if ctx.fmt == "json":
            ctx.emit_json(m)
        else:
            ctx.emit(format_matrix(m).rstrip("\n"))
        return
    if what == "orbits":
        _require_prime(args.p)
        ctx.check_field(args.p, args.n)
        kind = "golomb" if args.golomb else "reutenauer"
        if _count_params(kind, args.p, args.n) > ctx.max_order:
            raise UsageError(f"group order exceeds --max-group-order={ctx.max_order}")
        rep = group_report(kind, args.p, args.n, with_averaging=False)
        orbs = [[str(v) for v in o] for o in rep.orbits]
        if ctx.golden and kind == "reutenauer" and args.p == 2:
            _golden_orbits(ctx, rep, args.n)
        if ctx.fmt == "json":
            ctx.emit_json(orbs)
        else:
            for o in orbs:
                ctx.emit("\t".join(o))
        return
    raise UsageError(f"unknown dump target {what!r}")


# -- parser ---------------------------------------------------------------------

def _globals(parser: argparse.ArgumentParser, top: bool):
    d = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    g = parser.add_argument_group("global options")
    g.add_argument("--format", choices=("tsv", "json"), default=d("tsv"))
    g.add_argument("--golden", action="store_true", default=d(False),
                   help="compare against the embedded reference data; exit 1 on mismatch")
    g.add_argument("--seed", type=int, default=d(0), help="seed for randomized routines")
    g.add_argument("--max-group-order", type=int, default=d(DEFAULT_MAX_ORDER))
    g.add_argument("--max-field-bits", type=int, default=d(DEFAULT_FIELD_BITS),
                   help="refuse fields with more than 2^bits elements")
    g.add_argument("--jobs", type=int, default=d(1), help="worker processes for verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="necklace-sandpile",
        description="Necklace bijections, their groups, and sandpile groups of de Bruijn-type graphs.")
    _globals(parser, top=True)
    shared = argparse.ArgumentParser(add_help=False)
    _globals(shared, top=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[shared], help=help_text, description=help_text)

    def np_args(sp, n_required=True, p_default=2):
        sp.add_argument("-n", type=int, required=n_required)
        sp.add_argument("-p", type=int, default=p_default)

    sp = add("necklaces", "list aperiodic necklaces (Lyndon words)")
    np_args(sp)
    sp.add_argument("--count", action="store_true", help="print the Moebius count only")
    sp.set_defaults(func=cmd_necklaces)

    sp = add("polys", "list monic irreducible polynomials with normal/primitive flags")
    np_args(sp)
    sp.add_argument("--kind", choices=("all", "normal", "primitive"), default="all")
    sp.set_defaults(func=cmd_polys)

    sp = add("map", "tabulate one bijection: necklace<TAB>polynomial")
    np_args(sp)
    sp.add_argument("--kind", choices=KINDS, default="reutenauer")
    sp.add_argument("--param", type=int, default=0, help="index of the normal/primitive parameter")
    sp.add_argument("--poly", help="choose the parameter by its normal/primitive polynomial")
    sp.set_defaults(func=cmd_map)

    sp = add("group", "structure of the Reutenauer or Golomb group")
    np_args(sp)
    sp.add_argument("--kind", choices=KINDS, default="reutenauer")
    sp.set_defaults(func=cmd_group)

    sp = add("orbits", "orbits of a necklace group")
    np_args(sp)
    sp.add_argument("--group", choices=KINDS, default="reutenauer")
    sp.add_argument("--averaging", action="store_true", help="show the averaging operator on orbits")
    sp.add_argument("--flip-extended", action="store_true", help="add the 0/1 flip to the group")
    sp.set_defaults(func=cmd_orbits)

    sp = add("sandpile", "sandpile group of the graph i -> p i + j on Z_n")
    np_args(sp)
    sp.add_argument("--method", choices=("snf", "closed-form", "both"), default="snf")
    sp.add_argument("--dump-matrix", action="store_true", help="print the Laplacian instead")
    sp.set_defaults(func=cmd_sandpile)

    sp = add("circulant", "circulant units modulo the shift subgroup")
    np_args(sp)
    sp.add_argument("--compare-reutenauer", action="store_true")
    sp.set_defaults(func=cmd_circulant)

    sp = add("table", "reproduce a group table for two colours")
    sp.add_argument("which", choices=("reutenauer", "golomb", "sandpile"))
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.set_defaults(func=cmd_table)

    sp = add("verify", "cross-check groups, sandpiles and closed forms")
    sp.add_argument("check", choices=CHECKS + ("all",))
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("-p", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = add("dump", "raw data in text formats")
    sp.add_argument("what", choices=("necklaces", "irreducibles", "map", "matrix", "orbits"))
    np_args(sp)
    sp.add_argument("--golomb", action="store_true", help="use the Golomb map/group")
    sp.add_argument("--param", type=int, default=0)
    sp.add_argument("--poly")
    sp.add_argument("--shifted", action="store_true", help="matrix in the difference basis")
    sp.set_defaults(func=cmd_dump)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    random.seed(args.seed)
    np.random.seed(args.seed)
    ctx = Context(args)
    try:
        args.func(ctx, args)
    except (ValueError, MemoryError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 1 if ctx.failed else 0


if __name__ == "__main__":
    sys.exit(main())
