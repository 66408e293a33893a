"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from . import cubic, diamond, engine, series, shifted, square, verify
from .errors import DomainError
from .gaussian import GaussianInt, format_gaussian, parse_gaussian_rational, unit_label
from .quat import cayley_matrix, cubic_index, enumerate_primitive, parse_quaternion


def _literal(parse: Callable) -> Callable:
    def convert(text: str):
        try:
            return parse(text)
        except DomainError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    convert.__name__ = parse.__name__
    return convert


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _emit_lines(records, out) -> None:
    for r in records:
        out.write(_dump(r) + "\n")


def _rat_matrix(m) -> list[list[str]]:
    return [[str(x) for x in row] for row in m]


def _gr(x) -> str:
    """A Gaussian rational as "(a+bi)/n" with a rational-integer denominator."""
    n = x.re.denominator * x.im.denominator // gcd(x.re.denominator, x.im.denominator)
    g = GaussianInt(int(x.re * n), int(x.im * n))
    num = format_gaussian(g)
    if n == 1:
        return num
    return f"({num})/{n}" if g.re and g.im else f"{num}/{n}"


# --- handlers -----------------------------------------------------------------


def cmd_square_rotations(args, out) -> int:
    records = []
    for z in square.enumerate_numerators(args.max_index):
        units = square.UNITS if args.all_units else (square.ONE,)
        for u in units:
            records.append(square.PlanarCoincidence(z, u).to_json())
    if args.format == "csv":
        for r in records:
            out.write(f"{r['sigma']},{r['z']},{r['unit']}\n")
    else:
        _emit_lines(records, out)
    return 0


def cmd_square_shifted(args, out) -> int:
    x = args.shift
    for sc in shifted.enumerate_shifted(x, args.max_index, rotations_only=args.rotations_only):
        rec = sc.coincidence.to_json()
        rec["representative"] = _gr(sc.representative)
        rec["csl"] = square.csl_basis(sc.coincidence).to_json()
        out.write(_dump(rec) + "\n")
    return 0


def _coincidence_json(c: square.PlanarCoincidence | None):
    return None if c is None else {"z": format_gaussian(c.numerator), "unit": unit_label(c.unit), "reflection": c.reflection}


def cmd_square_classify(args, out) -> int:
    if args.shift_class is not None:
        desc = shifted.classify_irrational(args.shift_class)
        out.write(_dump({"kind": desc.kind, "generator": _coincidence_json(desc.generator), "group": True}) + "\n")
        return 0
    if args.shift is None:
        raise DomainError("give --shift or --shift-class")
    x = args.shift
    eps = shifted.reflection_symmetry_generator(x)
    closure = shifted.group_closure_check(x, args.bound)
    rec = {
        "shift": _gr(x),
        "reflection_symmetry": None if eps is None else unit_label(eps),
        "closure": str(closure),
        "closed_up_to_bound": closure.closed,
    }
    if not closure.closed:
        a, b = closure.counterexample
        rec["counterexample"] = [_coincidence_json(a), _coincidence_json(b), _coincidence_json(closure.product)]
    out.write(_dump(rec) + "\n")
    return 0


def cmd_cubic_rotations(args, out) -> int:
    norms = [m * 2**k for m in range(1, args.max_index + 1, 2) for k in range(3)]
    for q in enumerate_primitive(4 * args.max_index, norms=norms):
        rec = {"q": q.to_json(), "norm": q.norm(), "sigma": cubic_index(q), "matrix": _rat_matrix(cayley_matrix(q))}
        if args.format == "csv":
            out.write(f"{rec['sigma']},{q}\n")
        else:
            out.write(_dump(rec) + "\n")
    return 0


def cmd_cubic_csl(args, out) -> int:
    q = args.quaternion
    if not q.is_primitive():
        raise DomainError(f"{q} is not primitive")
    kind = args.lattice
    lat = cubic.csl_cubic(kind, q, args.improper)
    rec = {
        "q": q.to_json(),
        "lattice": kind.value,
        "improper": args.improper,
        "sigma": lat.index_in(kind.lattice()),
        "csl": lat.to_json(),
        "dsc": cubic.dsc_cubic(kind, q, args.improper).to_json(),
    }
    out.write(_dump(rec) + "\n")
    return 0


def cmd_diamond(args, out) -> int:
    res = diamond.diamond_coincidence(diamond.DiamondIsometry(args.quaternion, args.improper))
    out.write(_dump(res.to_json()) + "\n")
    return 0


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None


def cmd_multilattice(args, out) -> int:
    data = _read_json(args.file)
    try:
        ml = engine.Multilattice.from_json(data)
        iso = _read_json(args.isometry) if args.isometry else data.get("isometry", data)
        if "R" not in iso:
            raise DomainError("no isometry: give --isometry or an 'R' matrix in the file")
        r = [[Fraction(x) for x in row] for row in iso["R"]]
        v = [Fraction(x) for x in iso["v"]] if "v" in iso else None
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"malformed multilattice input: {exc!r}") from None
    desc = engine.multilattice_coincidence(ml, r, v)
    out.write(_dump(desc.to_json()) + "\n")
    return 0


def cmd_series(args, out) -> int:
    f = series.CountingFunction.parse(args.which)
    if args.rotations:
        table = series.rotation_counts(f, args.max)
    else:
        table = series.coefficients(f, args.max, args.method)
    if args.format == "json":
        out.write(_dump({"which": args.which, "coefficients": [[m, v] for m, v in table.items()]}) + "\n")
    else:
        for m, v in table.items():
            out.write(f"{m},{v}\n")
    return 0


def cmd_verify(args, out) -> int:
    rep = verify.run_suite(args.suite, args.bound)
    out.write(_dump(rep.to_json()) + "\n")
    return 0 if rep.ok else 3


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="csl", description="Coincidence site lattices and multilattices.")
    sub = p.add_subparsers(dest="command", required=True)

    sq = sub.add_parser("square", help="square lattice and its shifts").add_subparsers(dest="action", required=True)
    r = sq.add_parser("rotations", help="canonical numerators of coincidence rotations")
    r.add_argument("--max-index", type=int, required=True)
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("--all-units", action="store_true", help="one record per unit instead of per numerator")
    r.set_defaults(handler=cmd_square_rotations)

    s = sq.add_parser("shifted", help="coincidence isometries of x + Z^2")
    s.add_argument("--shift", type=_literal(parse_gaussian_rational), required=True)
    s.add_argument("--max-index", type=int, required=True)
    s.add_argument("--rotations-only", action="store_true")
    s.set_defaults(handler=cmd_square_shifted)

    c = sq.add_parser("classify-shift", help="structure of OC(x + Z^2)")
    c.add_argument("--shift", type=_literal(parse_gaussian_rational))
    c.add_argument("--shift-class", type=_literal(shifted.parse_shift_class))
    c.add_argument("--bound", type=int, default=25)
    c.set_defaults(handler=cmd_square_classify)

    cu = sub.add_parser("cubic", help="cubic lattices").add_subparsers(dest="action", required=True)
    r = cu.add_parser("rotations", help="coincidence rotations by quaternion")
    r.add_argument("--max-index", type=int, required=True)
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.set_defaults(handler=cmd_cubic_rotations)
    r = cu.add_parser("csl", help="CSL and DSC for one quaternion")
    r.add_argument("--quaternion", type=_literal(parse_quaternion), required=True)
    r.add_argument("--lattice", type=_literal(cubic.CubicLatticeKind.parse), default=cubic.CubicLatticeKind.PRIMITIVE)
    r.add_argument("--improper", action="store_true")
    r.set_defaults(handler=cmd_cubic_csl)

    d = sub.add_parser("diamond", help="coincidence site multilattice of the diamond packing")
    d.add_argument("--quaternion", type=_literal(parse_quaternion), required=True)
    d.add_argument("--improper", action="store_true")
    d.set_defaults(handler=cmd_diamond)

    m = sub.add_parser("multilattice", help="CSML of a multilattice read from JSON")
    m.add_argument("--file", required=True, help='{"dim", "basis", "shifts"}, optionally with "R" and "v"')
    m.add_argument("--isometry", help='separate file holding {"R", "v"}')
    m.set_defaults(handler=cmd_multilattice)

    se = sub.add_parser("series", help="coefficient tables of counting functions")
    se.add_argument("--which", required=True, help='z2 | z3 | d3p | fcc-shift | shift:"p/q"')
    se.add_argument("--max", type=int, required=True)
    se.add_argument("--format", choices=("json", "csv"), default="csv")
    se.add_argument("--method", choices=("auto", "closed", "enumerate"), default="auto")
    se.add_argument("--rotations", action="store_true", help="count rotations instead of lattices")
    se.set_defaults(handler=cmd_series)

    v = sub.add_parser("verify", help="cross-check closed forms against the engine and oracle")
    v.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    v.add_argument("--bound", type=int, default=50)
    v.set_defaults(handler=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("max_index", "max", "bound"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            parser.print_usage(sys.stderr)
            sys.stderr.write(f"csl: error: --{name.replace('_', '-')} must be positive\n")
            return 2
    try:
        return args.handler(args, out)
    except DomainError as exc:
        sys.stderr.write(f"csl: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
