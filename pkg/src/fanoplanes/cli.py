"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad weight, box violation,
failed consistency check), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import textwrap
from typing import Optional

from .bott import bott_cohomology
from .bundles import fano_class, fano_dimension, fano_tangent_chern
from .chow import ChowClass, GrassmannianContext, coeff_to_json, format_class, integrate
from .invariants import (
    chi_cotangent,
    chi_topological,
    ci_hodge,
    evaluate,
    hilbert_polynomial,
    hodge_diamond,
    hrr_chi,
    threefold_invariants,
)
from .koszul import (
    DEGENERATION,
    block_sum,
    cohomology_contributions,
    euler_check,
    koszul_term_table,
    sheaf_cohomology_estimate,
)
from .partitions import Partition, lr_coefficients
from .reproduce import format_report, reproduce
from .schur_decomp import format_decomposition, wedge_E

HILBERT_NOTE = ("chi(O(m)) = (2^8*11/3)(m-1)(2(m-1)^2+1); the variant (2^7*11/3)(m-1)(5(m-1)^2-2) "
                "is off by a factor of 2 at m = 0 and m = 2")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _grassmannian(text: str) -> GrassmannianContext:
    parts = _int_list(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected k,n")
    try:
        return GrassmannianContext(*parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _classes_json(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"malformed JSON: {exc}")
    if not isinstance(data, list) or not data:
        raise argparse.ArgumentTypeError("expected a nonempty JSON array of classes")
    return data


def _width() -> int:
    try:
        return max(20, int(os.environ.get("FANOPLANES_WIDTH", "100")))
    except ValueError:
        return 100


def _wrap(text: str) -> str:
    return "\n".join(textwrap.fill(line, _width(), subsequent_indent="    ") for line in text.splitlines())


def _parse_class(ctx: GrassmannianContext, item) -> ChowClass:
    """A class is a partition array, a list of {partition, coeff} terms, or a full class object."""
    if isinstance(item, dict):
        if "grassmannian" in item and list(item["grassmannian"]) != ctx.to_json():
            raise ValueError(f"class lives on Gr{tuple(item['grassmannian'])}, not Gr({ctx.k},{ctx.n})")
        return ChowClass.from_terms_json(ctx, item["terms"])
    if isinstance(item, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in item):
        return ChowClass.schubert(ctx, item)
    if isinstance(item, list):
        return ChowClass.from_terms_json(ctx, item)
    raise ValueError(f"cannot read a class from {item!r}")


def _product(ctx: GrassmannianContext, items) -> ChowClass:
    out = ChowClass.one(ctx)
    for item in items:
        out = out * _parse_class(ctx, item)
    return out


# -- handlers: each returns (json-able object, text) -------------------------

def cmd_partitions_lr(args):
    expansion = lr_coefficients(args.lam, args.mu)
    terms = sorted(expansion.items(), reverse=True)
    data = {"terms": [{"partition": list(p), "coeff": c} for p, c in terms]}
    text = " + ".join((f"{c}*" if c != 1 else "") + "s(" + ",".join(map(str, p)) + ")" for p, c in terms)
    return data, text or "0"


def cmd_chow_mul(args):
    a = _product(args.grassmannian, args.classes)
    return a.to_json(), format_class(a)


def cmd_chow_integrate(args):
    value = integrate(_product(args.grassmannian, args.classes))
    return {"grassmannian": args.grassmannian.to_json(), "integral": coeff_to_json(value)}, str(value)


def _fano_ctx(args) -> GrassmannianContext:
    if args.k is not None or args.n is not None:
        k = args.k if args.k is not None else args.grassmannian.k
        n = args.n if args.n is not None else args.grassmannian.n
        return GrassmannianContext(k, n)
    return args.grassmannian


def cmd_fano_class(args):
    a = fano_class(_fano_ctx(args), args.degrees)
    return a.to_json(), format_class(a)


def cmd_fano_degree(args):
    ctx = _fano_ctx(args)
    d = fano_dimension(ctx, args.degrees)
    value = integrate((ChowClass.schubert(ctx, (1,)) ** max(d, 0)) * fano_class(ctx, args.degrees))
    return {"grassmannian": ctx.to_json(), "degrees": args.degrees, "dimension": d,
            "degree": coeff_to_json(value)}, str(value)


def cmd_fano_tangent(args):
    ctx = _fano_ctx(args)
    c = fano_tangent_chern(ctx, args.degrees, args.max_degree)
    text = "\n".join(f"c{d} = {format_class(c[d])}" for d in range(1, c.max_degree + 1))
    return c.to_json(), text


def _inv(args):
    return threefold_invariants(args.grassmannian, tuple(args.degrees))


def cmd_invariants_hrr(args):
    value = hrr_chi(_inv(args), args.m)
    return {"m": args.m, "chi": value}, str(value)


def cmd_invariants_hilbert(args):
    inv = _inv(args)
    coeffs = hilbert_polynomial(inv)
    values = {m: hrr_chi(inv, m) for m in range(-5, 11)}
    for m, v in values.items():
        if evaluate(coeffs, m) != v:
            raise ArithmeticError(f"Hilbert polynomial disagrees with Riemann-Roch at m={m}")
    data = {"coefficients": [coeff_to_json(c) for c in coeffs],
            "values": [{"m": m, "chi": v} for m, v in values.items()],
            "note": HILBERT_NOTE}
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c:
            mono = "" if d == 0 else ("m" if d == 1 else f"m^{d}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
    text = "chi(O(m)) = " + (" + ".join(terms) or "0") + f"\nnote: {HILBERT_NOTE}"
    return data, text


def cmd_invariants_ci_hodge(args):
    res = ci_hodge(args.n)
    return res.to_json(), f"n={res.n}  chi(X)={res.euler}  middle Hodge numbers: " + " ".join(map(str, res.middle))


def _diamond(args):
    inv = _inv(args)
    est = sheaf_cohomology_estimate()
    middle = ci_hodge(inv.context.n - 1).middle
    return hodge_diamond(hrr_chi(inv, 0), est.h[2], chi_cotangent(inv), chi_topological(inv), middle)


def cmd_invariants_hodge_diamond(args):
    d = _diamond(args)
    text = d.format() + "\nassumptions: " + ", ".join(d.assumptions)
    return d.to_json(), text


def cmd_bott(args):
    res = bott_cohomology(args.weight, args.grassmannian)
    data = {"weight": args.weight, "grassmannian": args.grassmannian.to_json(), **res.to_json()}
    if res.is_zero:
        return data, "zero (singular weight)"
    full = ",".join(map(str, res.full_weight(args.grassmannian.n)))
    return data, f"H^{res.degree} = Schur({full}) V, dimension {res.dimension}"


def cmd_koszul_wedge(args):
    d = wedge_E(args.r)
    return {"r": args.r, **d.to_json()}, f"wedge^{args.r} E* = {format_decomposition(d)}"


def cmd_koszul_table(args):
    rows = [koszul_term_table(args.r)] if args.r is not None else [koszul_term_table(r) for r in range(19)]
    data = {"rows": [row.to_json() for row in rows]}
    lines = []
    for row in rows:
        pieces = []
        for t in row.terms:
            name = ("" if t.mult == 1 else str(t.mult)) + "G(" + ",".join(map(str, t.weight)) + ")"
            pieces.append(f"*{name}*" if t.active else name)
        lines.append(f"{row.r:>2} | " + " + ".join(pieces))
    lines.append("(*...* marks summands with nonzero cohomology)")
    return data, "\n".join(lines)


def cmd_koszul_cohomology(args):
    table = cohomology_contributions()
    est = sheaf_cohomology_estimate(args.assume_degeneration, table)
    data = {"E1": table.to_json()["entries"], **est.to_json(),
            "conjectural": bool(est.conjectural)}
    for e in data["E1"]:
        e["conjectural"] = False
    lines = [f"E1^({p},{q}) = C^{d}" for (p, q), d in table.dims().items()]
    lines += [f"h^{i}(O_F) = {v}   [{est.derived_from[i]}]" for i, v in enumerate(est.h)]
    for (p, q), d in sorted(est.conjectural.items()):
        lines.append(f"E2^({p},{q}) = C^{d}   [conjectural: assumes {DEGENERATION}]")
    return data, "\n".join(lines)


def cmd_koszul_euler_check(args):
    table = cohomology_contributions()
    chi = euler_check(table)
    hrr = hrr_chi(threefold_invariants(GrassmannianContext(3, 10), (2, 2, 2)), 0)
    data = {"koszul": chi, "hrr": hrr, "blocks": {str(q): block_sum(table, q) for q in (0, 7, 14, 21)}}
    return data, f"chi(O) = {chi} (Koszul) = {hrr} (HRR)"


def cmd_reproduce(args):
    checks = reproduce()
    data = {"checks": [c.to_json() for c in checks], "passed": all(c.passed for c in checks)}
    return data, format_report(checks)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--grassmannian", type=_grassmannian, default=argparse.SUPPRESS,
                        metavar="K,N")
    common.add_argument("--degrees", type=_int_list, default=argparse.SUPPRESS, metavar="D1,D2,...")

    parser = argparse.ArgumentParser(prog="fanoplanes", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--grassmannian", type=_grassmannian, default=GrassmannianContext(3, 10),
                        metavar="K,N")
    parser.add_argument("--degrees", type=_int_list, default=[2, 2, 2], metavar="D1,D2,...")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, handler, **kw):
        p = group.add_parser(name, parents=[common], **kw)
        p.set_defaults(handler=handler)
        return p

    def branch(name, help_text):
        p = sub.add_parser(name, help=help_text)
        return p.add_subparsers(dest="action", required=True)

    g = branch("partitions", "partition combinatorics")
    p = leaf(g, "lr", cmd_partitions_lr, help="Littlewood-Richardson expansion")
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--mu", type=_int_list, required=True)

    g = branch("chow", "Chow ring of Gr(k,n)")
    for name, handler in (("mul", cmd_chow_mul), ("integrate", cmd_chow_integrate)):
        p = leaf(g, name, handler, help=f"{name} a product of classes")
        p.add_argument("--classes", type=_classes_json, required=True,
                       help="JSON array; each entry a partition or a list of {partition, coeff}")

    g = branch("fano", "Fano scheme of planes")
    for name, handler in (("class", cmd_fano_class), ("degree", cmd_fano_degree),
                          ("tangent", cmd_fano_tangent)):
        p = leaf(g, name, handler)
        p.add_argument("--k", type=int)
        p.add_argument("--n", type=int)
        if name == "tangent":
            p.add_argument("--max-degree", type=int)

    g = branch("invariants", "Riemann-Roch and Hodge numbers")
    p = leaf(g, "hrr", cmd_invariants_hrr)
    p.add_argument("--m", type=int, required=True)
    leaf(g, "hilbert", cmd_invariants_hilbert)
    p = leaf(g, "ci-hodge", cmd_invariants_ci_hodge)
    p.add_argument("--n", type=int, required=True)
    leaf(g, "hodge-diamond", cmd_invariants_hodge_diamond)

    p = sub.add_parser("bott", parents=[common], help="Borel-Weil-Bott")
    p.set_defaults(handler=cmd_bott)
    p.add_argument("--weight", type=_int_list, required=True)

    g = branch("koszul", "Koszul complex and spectral sequence")
    p = leaf(g, "wedge", cmd_koszul_wedge)
    p.add_argument("--r", type=int, required=True)
    p = leaf(g, "table", cmd_koszul_table)
    p.add_argument("--r", type=int)
    p = leaf(g, "cohomology", cmd_koszul_cohomology)
    p.add_argument("--assume-degeneration", action="store_true")
    leaf(g, "euler-check", cmd_koszul_euler_check)

    p = sub.add_parser("reproduce", parents=[common], help="recompute every reference value")
    p.set_defaults(handler=cmd_reproduce)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text = args.handler(args)
    except (ValueError, ArithmeticError, TypeError, KeyError) as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc), "type": type(exc).__name__}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(_wrap(text))
    if args.handler is cmd_reproduce and not data["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
