"""Command-line surface: dimension tables, basis generation, certification
sweeps over weight ranges, and expressing user-supplied expansions in
coordinates.

All numeric output is exact: rationals serialize as canonical strings
("p" or "p/q" in lowest terms, q > 1, at most one leading "-"), never as
floating point.  Exit codes: 0 success, 1 verification or consistency
failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction

from .arith import dimension_data, dimension_oracle
from .basis import (
    Basis,
    BasisElement,
    BasisKind,
    CuspCombo,
    Monomial,
    Product,
    Single,
    SpanError,
    basis_for,
    default_precision,
    express,
    verify_report,
)
from .qseries import QSeries

__all__ = [
    "format_rational",
    "parse_rational",
    "series_to_document",
    "series_from_document",
    "basis_to_document",
    "basis_from_document",
    "main",
    "run",
]

_RATIONAL_RE = re.compile(r"^-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?$")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string; reject anything non-canonical.

    U+2212 is accepted as a minus-sign alias on input (typeset sources
    and some editors produce it); output always uses ASCII "-".
    """
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string, got {type(text).__name__}")
    normalized = text.replace("\u2212", "-")
    if not _RATIONAL_RE.match(normalized):
        raise ValueError(f"malformed rational string {text!r}")
    value = Fraction(normalized)
    if str(value) != normalized:
        raise ValueError(f"non-canonical rational string {text!r}")
    return value


def series_to_document(series: QSeries) -> dict:
    return {
        "weight": series.weight,
        "precision": series.precision,
        "coefficients": [format_rational(c) for c in series.coeffs],
    }


def series_from_document(obj) -> QSeries:
    if not isinstance(obj, dict):
        raise ValueError("series document must be a JSON object")
    extra = set(obj) - {"weight", "precision", "coefficients"}
    if extra:
        raise ValueError(f"unexpected series document keys: {sorted(extra)}")
    weight = obj.get("weight")
    precision = obj.get("precision")
    coefficients = obj.get("coefficients")
    if not isinstance(weight, int) or isinstance(weight, bool):
        raise ValueError("series document needs an integer 'weight'")
    if not isinstance(precision, int) or isinstance(precision, bool):
        raise ValueError("series document needs an integer 'precision'")
    if not isinstance(coefficients, list):
        raise ValueError("series document needs a 'coefficients' list")
    if len(coefficients) != precision:
        raise ValueError(
            f"document precision {precision} does not match {len(coefficients)} coefficients"
        )
    return QSeries(weight, tuple(parse_rational(c) for c in coefficients))


def _descriptor_to_document(descriptor) -> dict:
    if isinstance(descriptor, Single):
        return {"type": "single", "weight": descriptor.weight}
    if isinstance(descriptor, Product):
        return {"type": "product", "u": descriptor.u, "v": descriptor.v}
    if isinstance(descriptor, CuspCombo):
        return {
            "type": "cusp-combo",
            "u": descriptor.u,
            "v": descriptor.v,
            "c": format_rational(descriptor.c),
        }
    if isinstance(descriptor, Monomial):
        return {"type": "monomial", "g4_exponent": descriptor.alpha, "g6_exponent": descriptor.beta}
    raise TypeError(f"unknown descriptor {descriptor!r}")


def _descriptor_from_document(obj) -> Single | Product | CuspCombo | Monomial:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("descriptor must be an object with a 'type' key")
    kind = obj["type"]
    if kind == "single":
        return Single(obj["weight"])
    if kind == "product":
        return Product(obj["u"], obj["v"])
    if kind == "cusp-combo":
        return CuspCombo(obj["u"], obj["v"], parse_rational(obj["c"]))
    if kind == "monomial":
        return Monomial(obj["g4_exponent"], obj["g6_exponent"])
    raise ValueError(f"unknown descriptor type {kind!r}")


def basis_to_document(basis: Basis) -> dict:
    return {
        "weight": basis.weight,
        "kind": basis.kind.value,
        "precision": basis.precision,
        "elements": [
            {
                "descriptor": _descriptor_to_document(el.descriptor),
                "label": el.descriptor.label(),
                "coefficients": [format_rational(c) for c in el.series.coeffs],
            }
            for el in basis.elements
        ],
    }


def basis_from_document(obj) -> Basis:
    if not isinstance(obj, dict):
        raise ValueError("basis document must be a JSON object")
    try:
        weight = obj["weight"]
        kind = BasisKind(obj["kind"])
        precision = obj["precision"]
        elements = []
        for entry in obj["elements"]:
            descriptor = _descriptor_from_document(entry["descriptor"])
            coeffs = tuple(parse_rational(c) for c in entry["coefficients"])
            elements.append(BasisElement(descriptor, QSeries(weight, coeffs)))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed basis document: {exc}") from exc
    return Basis(weight, kind, precision, tuple(elements))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_dims(args) -> int:
    if args.weight is not None:
        weights = [args.weight]
    else:
        dimension_data(args.max_weight)  # validate before sweeping
        weights = list(range(4, args.max_weight + 1, 2))
    rows = [dimension_data(w) for w in weights]
    if args.format == "json":
        payload = [
            {"weight": d.weight, "dim_cusp": d.dim_cusp, "dim_modular": d.dim_modular}
            for d in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        print(f"{'weight':>6}  {'dim_S':>5}  {'dim_M':>5}")
        for d in rows:
            print(f"{d.weight:>6}  {d.dim_cusp:>5}  {d.dim_modular:>5}")
    return 0


def _csv_descriptor(descriptor) -> str:
    # the c column carries the cusp correction, so the descriptor cell
    # keeps a symbolic placeholder
    if isinstance(descriptor, CuspCombo):
        return f"G_{descriptor.u}*G_{descriptor.v} + c*G_{descriptor.u + descriptor.v}"
    return descriptor.label()


def _cmd_basis(args) -> int:
    dims = dimension_data(args.weight)
    precision = args.prec if args.prec is not None else default_precision(args.weight)
    if precision < dims.dim_cusp + 2:
        raise ValueError(
            f"precision {precision} too small for weight {args.weight}: "
            f"need >= {dims.dim_cusp + 2}"
        )
    basis = basis_for(args.weight, args.kind, precision)
    if args.format == "json":
        print(json.dumps(basis_to_document(basis), indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["descriptor", "c"] + [f"a_{i}" for i in range(basis.precision)])
        for el in basis.elements:
            c = format_rational(el.descriptor.c) if isinstance(el.descriptor, CuspCombo) else ""
            writer.writerow(
                [_csv_descriptor(el.descriptor), c]
                + [format_rational(x) for x in el.series.coeffs]
            )
    else:
        print(
            f"# basis weight={basis.weight} kind={basis.kind.value} "
            f"precision={basis.precision} elements={len(basis.elements)}"
        )
        for el in basis.elements:
            print(el.descriptor.label())
            print("    " + ", ".join(format_rational(x) for x in el.series.coeffs))
    return 0


def _tamper(basis: Basis) -> Basis:
    """Deterministically break one coefficient so verification must fail.

    A nonzero constant term trips the cusp vanishing check; for the
    single-element full-space basis of a cuspless weight a zeroed constant
    term makes the 1x1 coefficient matrix singular.
    """
    element = basis.elements[0]
    bad = Fraction(1) if basis.kind is BasisKind.NEW_S else Fraction(0)
    coeffs = (bad,) + element.series.coeffs[1:]
    broken = BasisElement(element.descriptor, QSeries(element.series.weight, coeffs))
    return Basis(basis.weight, basis.kind, basis.precision, (broken,) + basis.elements[1:])


def _cmd_verify(args) -> int:
    dimension_data(args.max_weight)
    all_ok = True
    for weight in range(4, args.max_weight + 1, 2):
        oracle = dimension_oracle(weight)
        corrupt_kind = None
        if args.corrupt_weight == weight:
            corrupt_kind = (
                BasisKind.NEW_S if dimension_data(weight).dim_cusp else BasisKind.NEW_M
            )
        reports = []
        for kind in (BasisKind.NEW_M, BasisKind.CLASSICAL, BasisKind.NEW_S):
            basis = basis_for(weight, kind)
            if kind is corrupt_kind:
                basis = _tamper(basis)
            reports.append(verify_report(basis))
        new_m, classical, new_s = reports
        checks = [
            ("dim", new_m.element_count == new_m.expected_count == oracle),
            ("new-m det", new_m.determinant is not None and new_m.determinant != 0),
            (
                "classical det",
                classical.determinant is not None and classical.determinant != 0,
            ),
            ("cusp a_0", new_s.constant_terms_vanish is True),
            (
                "cusp det",
                new_s.determinant != 0 if new_s.determinant is not None else True,
            ),
        ]
        ok = all(flag for _, flag in checks) and new_s.counts_match
        all_ok = all_ok and ok
        status = "pass" if ok else "FAIL"
        detail = "  ".join(f"{name}:{'ok' if flag else 'BAD'}" for name, flag in checks)
        cusp_note = "vacuous" if new_s.determinant is None else "checked"
        print(f"weight {weight:>3}  {detail}  [cusp {cusp_note}]  {status}")
    total = (args.max_weight - 2) // 2
    print(f"verified weights 4..{args.max_weight}: {'all pass' if all_ok else 'FAILURES'} ({total} weights)")
    return 0 if all_ok else 1


def _cmd_express(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read input file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"input is not valid JSON: {exc}") from exc
    target = series_from_document(raw)
    if target.weight != args.weight:
        raise ValueError(
            f"document weight {target.weight} does not match requested weight {args.weight}"
        )
    basis = basis_for(args.weight, args.kind, max(target.precision, default_precision(args.weight)))
    try:
        coords = express(target, basis)
    except SpanError as exc:
        print(
            f"input is not in the span of the {args.kind} weight-{args.weight} basis: {exc}",
            file=sys.stderr,
        )
        return 1
    print(json.dumps([format_rational(c) for c in coords]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eisbasis",
        description="Exact Eisenstein-product bases for level-one modular forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dims = sub.add_parser("dims", help="dimension table for the weight-2k spaces")
    group = p_dims.add_mutually_exclusive_group(required=True)
    group.add_argument("--weight", type=int, help="single even weight >= 4")
    group.add_argument("--max-weight", type=int, help="sweep even weights 4..W")
    p_dims.add_argument("--format", choices=["text", "json"], default="text")
    p_dims.set_defaults(func=_cmd_dims)

    p_basis = sub.add_parser("basis", help="construct and print a basis")
    p_basis.add_argument("--weight", type=int, required=True)
    p_basis.add_argument(
        "--kind", choices=[k.value for k in BasisKind], required=True
    )
    p_basis.add_argument("--prec", type=int, default=None, help="number of q-coefficients")
    p_basis.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p_basis.set_defaults(func=_cmd_basis)

    p_verify = sub.add_parser("verify", help="certify all bases up to a weight bound")
    p_verify.add_argument("--max-weight", type=int, required=True)
    p_verify.add_argument("--corrupt-weight", type=int, default=None, help=argparse.SUPPRESS)
    p_verify.set_defaults(func=_cmd_verify)

    p_express = sub.add_parser("express", help="coordinates of a series in a chosen basis")
    p_express.add_argument("--weight", type=int, required=True)
    p_express.add_argument(
        "--kind", choices=[k.value for k in BasisKind], required=True
    )
    p_express.add_argument("--input", required=True, help="path to a series document (JSON)")
    p_express.set_defaults(func=_cmd_express)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
