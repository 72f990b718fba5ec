"""Command-line front-end.

Exit codes: 0 on success, 1 on verification failure, 2 on usage or parse
errors.  Element I/O uses the JSON schema of :mod:`treehopf.algebra`; every
command writes deterministic output to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bases, morphisms, verify
from .algebra import (
    AlgebraTagError,
    FreeElement,
    element_from_json,
    element_to_json,
    element_to_latex,
    get_algebra,
    product_elements,
    coproduct_element,
    tensor_to_json,
)
from .realization import polynomial_to_json, realize_endofunction, realize_forest
from .structures import (
    Endofunction,
    EnumerationBoundError,
    FormatError,
    OrderedForest,
    StructureError,
)


class UsageError(Exception):
    pass


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    with open(path) as fh:
        return json.load(fh)


def _read_element(path: str) -> tuple[FreeElement, str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return element_from_json(json.loads(text))


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=None, separators=(",", ":"), sort_keys=False))
    sys.stdout.write("\n")


def _emit_element(x: FreeElement, basis: str, fmt: str) -> None:
    if fmt == "latex":
        sys.stdout.write(element_to_latex(x) + "\n")
    else:
        _emit(element_to_json(x, basis=basis))


def cmd_product(args) -> int:
    x, bx = _read_element(args.x)
    y, by = _read_element(args.y)
    if x.algebra != args.algebra or y.algebra != args.algebra:
        raise UsageError(f"elements are tagged {x.algebra}/{y.algebra}, not {args.algebra}")
    if {bx, by} - {args.basis}:
        raise UsageError(f"inputs carry basis {bx}/{by}, expected {args.basis}")
    if args.basis == "R":
        if args.algebra == "ho":
            rule = bases.r_product_forest
        elif args.algebra == "efsym":
            rule = bases.r_product_endo
        else:
            raise UsageError("R-basis products are available for ho and efsym")
        out = FreeElement(args.algebra)
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                out = out + (ca * cb) * rule(a, b)
        _emit_element(out, "R", args.format)
    else:
        _emit_element(product_elements(x, y), get_algebra(args.algebra).default_basis, args.format)
    return 0


def cmd_coproduct(args) -> int:
    x, basis = _read_element(args.x)
    if x.algebra != args.algebra:
        raise UsageError(f"element is tagged {x.algebra}, not {args.algebra}")
    if basis not in ("S", "M"):
        raise UsageError("coproduct expects an S-basis (or M-basis) element")
    _emit(tensor_to_json(coproduct_element(x)))
    return 0


def cmd_basis_change(args) -> int:
    x, basis = _read_element(args.x)
    if x.algebra != args.algebra:
        raise UsageError(f"element is tagged {x.algebra}, not {args.algebra}")
    if basis != args.src:
        raise UsageError(f"element carries basis {basis}, --from says {args.src}")
    if args.src == args.dst:
        raise UsageError("--from and --to must differ")
    out = bases.to_r_basis(x) if args.dst == "R" else bases.to_s_basis(x)
    _emit_element(out, args.dst, args.format)
    return 0


def cmd_realize(args, config: dict) -> int:
    size = args.indices if args.indices is not None else config.get("default_indices")
    if args.version in ("v1", "v2"):
        obj = OrderedForest.parse(args.object)
    else:
        obj = Endofunction.parse(args.object)
    if size is None:
        size = 2 * (obj.n if obj.n else 1) + 2
    if args.version in ("v1", "v2"):
        poly = realize_forest(obj, args.version, size)
    else:
        poly = realize_endofunction(obj, size)
    _emit(polynomial_to_json(poly, args.version, size))
    return 0


def cmd_morphism(args) -> int:
    x, _ = _read_element(args.x)
    if args.map == "pi":
        out, basis = morphisms.pi_hopf(x), "M"
    elif args.map == "f_F":
        out = x.map_keys(morphisms.forest_to_endo, algebra="efsym")
        basis = "S"
    elif args.map == "ck":
        out, basis = morphisms.ck_projection(x), "S"
    elif args.map == "plane":
        if x.algebra != "nck":
            raise UsageError("--map plane expects an nck element")
        out = x.map_keys(morphisms.plane_to_ordered, algebra="ho")
        basis = "S"
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown map {args.map}")
    _emit_element(out, basis, args.format)
    return 0


def cmd_dims(args, config: dict) -> int:
    ops = get_algebra(args.algebra)
    bound = config.get("enumeration_bound")
    counts = []
    for n in range(args.max_degree + 1):
        keys = ops.keys_of_degree(n) if bound is None else ops.keys_of_degree(n, bound)
        counts.append(str(len(keys)))
    sys.stdout.write(" ".join(counts) + "\n")
    return 0


def cmd_verify(args) -> int:
    outcomes = verify.run_suite(args.suite, args.max_degree)
    failures = 0
    for label, ok, detail in outcomes:
        status = "PASS" if ok else "FAIL"
        sys.stdout.write(f"{status} {label}: {detail}\n")
        failures += 0 if ok else 1
    sys.stdout.write(f"{len(outcomes) - failures}/{len(outcomes)} checks passed\n")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treehopf",
        description="Exact computation in combinatorial Hopf algebras on forests, words and endofunctions.",
    )
    parser.add_argument("--config", help="JSON config: enumeration_bound, default_indices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="multiply two elements")
    p.add_argument("--algebra", required=True)
    p.add_argument("--basis", choices=["S", "R"], default="S")
    p.add_argument("--format", choices=["json", "latex"], default="json")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("coproduct", help="coproduct of an element")
    p.add_argument("--algebra", required=True)
    p.add_argument("x")

    p = sub.add_parser("basis-change", help="rewrite between the S and R bases")
    p.add_argument("--from", dest="src", choices=["S", "R"], required=True)
    p.add_argument("--to", dest="dst", choices=["S", "R"], required=True)
    p.add_argument("--algebra", choices=["ho", "ck", "efsym"], required=True)
    p.add_argument("--format", choices=["json", "latex"], default="json")
    p.add_argument("x")

    p = sub.add_parser("realize", help="polynomial realization of one object")
    p.add_argument("--version", choices=["v1", "v2", "func"], required=True)
    p.add_argument("--indices", type=int, default=None, help="truncation N (default 2n+2)")
    p.add_argument("--object", required=True, help="text form of the forest or endofunction")

    p = sub.add_parser("morphism", help="apply a named map to an element")
    p.add_argument("--map", choices=["pi", "f_F", "ck", "plane"], required=True)
    p.add_argument("--format", choices=["json", "latex"], default="json")
    p.add_argument("x")

    p = sub.add_parser("dims", help="dimensions of the graded components")
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        choices=["coassoc", "compat", "antipode", "realization", "examples", "all"],
        required=True,
    )
    p.add_argument("--max-degree", type=int, default=3)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        if args.command == "product":
            return cmd_product(args)
        if args.command == "coproduct":
            return cmd_coproduct(args)
        if args.command == "basis-change":
            return cmd_basis_change(args)
        if args.command == "realize":
            return cmd_realize(args, config)
        if args.command == "morphism":
            return cmd_morphism(args)
        if args.command == "dims":
            return cmd_dims(args, config)
        if args.command == "verify":
            return cmd_verify(args)
        raise UsageError(f"unknown command {args.command}")  # pragma: no cover
    except (UsageError, FormatError, StructureError, AlgebraTagError, EnumerationBoundError,
            json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
