"""Command-line interface.

Verbs: present, alexander, gamma, distinct, distinct-range, verify-tau,
fold, wp, selftest.  Results go to stdout, diagnostics to stderr.

Exit codes: 0 output produced / every check verified; 1 a mathematical
check was refuted; 2 usage or parse error; 3 internal invariant
violation.  Identical argument lists produce byte-identical stdout; no
floating point is involved anywhere.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .constructions import (
    BadPair,
    DistinctnessCertificate,
    InvalidP,
    MismatchError,
    distinctness_certificate,
    double_presentation,
    fold_images,
    gamma_artifacts,
    gamma_presentation,
    gamma_tab_presentation,
    standard_presentation,
    tau_word,
    torus_wirtinger,
)
from .fileformat import (
    PresentationSyntaxError,
    UnknownGenerator,
    ZeroExponent,
    parse_presentation,
    parse_word,
    presentation_to_text,
)
from .fox import (
    NotInfiniteCyclicAbelianization,
    alexander_matrix,
    alexander_polynomial,
    elementary_ideal,
)
from .laurent import LaurentPoly, laurent_gcd
from .presentations import abelianization, add_relator
from .torus import (
    BadParams,
    TorusKnotParams,
    apply_images,
    is_in_commutator_subgroup,
    normal_form,
    product_to_amalgam,
    verify_homomorphism,
    wirtinger_standard_images,
)
from .words import ForeignGenerator

USAGE_ERRORS = (
    PresentationSyntaxError,
    UnknownGenerator,
    ZeroExponent,
    InvalidP,
    BadPair,
    BadParams,
    ForeignGenerator,
    FileNotFoundError,
    IsADirectoryError,
    PermissionError,
)


def poly_to_json(poly: LaurentPoly) -> dict:
    """{"min_exp": int, "coeffs": decimal strings, ascending, dense}."""
    if poly.is_zero():
        return {"min_exp": 0, "coeffs": []}
    return {
        "min_exp": poly.min_exp(),
        "coeffs": [str(c) for c in poly.dense_coeffs()],
    }


def poly_from_json(obj: dict) -> LaurentPoly:
    base = int(obj["min_exp"])
    return LaurentPoly(
        {base + i: int(c) for i, c in enumerate(obj["coeffs"])}
    )


def emit_certificate_json(cert: DistinctnessCertificate) -> str:
    payload = {
        "schema_version": 1,
        "p": cert.p,
        "k": cert.k,
        "mode": cert.mode,
        "phi_index": cert.phi_index,
        "divides_in_k": cert.divides_in_k,
        "divides_in_p": cert.divides_in_p,
        "valid": cert.valid,
        "polynomials": {
            "annihilator_p": poly_to_json(cert.poly_p),
            "annihilator_k": poly_to_json(cert.poly_k),
            "phi": poly_to_json(cert.phi),
        },
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def parse_certificate_json(text: str) -> DistinctnessCertificate:
    obj = json.loads(text)
    if obj.get("schema_version") != 1:
        raise ValueError(f"unsupported schema_version {obj.get('schema_version')!r}")
    polys = obj["polynomials"]
    return DistinctnessCertificate(
        p=obj["p"],
        k=obj["k"],
        mode=obj["mode"],
        phi_index=obj["phi_index"],
        divides_in_k=obj["divides_in_k"],
        divides_in_p=obj["divides_in_p"],
        valid=obj["valid"],
        poly_p=poly_from_json(polys["annihilator_p"]),
        poly_k=poly_from_json(polys["annihilator_k"]),
        phi=poly_from_json(polys["phi"]),
    )


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _coeff_line(poly: LaurentPoly) -> str:
    return " ".join(str(c) for c in poly.dense_coeffs()) if poly else "0"


def _cmd_present(args, out) -> int:
    builders = {
        "wirtinger": lambda p: torus_wirtinger(p),
        "standard": lambda p: standard_presentation(p, p + 1),
        "gamma": gamma_presentation,
        "gamma-tab": gamma_tab_presentation,
        "double": lambda p: double_presentation(p)[0],
    }
    pres = builders[args.form](args.p)
    out.write(presentation_to_text(pres))
    return 0


def _cmd_alexander(args, out) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        pres = parse_presentation(fh.read())
    out.write(_coeff_line(alexander_polynomial(pres)) + "\n")
    return 0


def _certificate_text(cert: DistinctnessCertificate) -> str:
    lines = [
        f"distinctness certificate (p={cert.p}, k={cert.k})",
        f"mode: {cert.mode}",
        f"phi index: {cert.phi_index}",
        f"phi: {cert.phi}",
        f"annihilator(p={cert.p}): {cert.poly_p}",
        f"annihilator(k={cert.k}): {cert.poly_k}",
        "phi divides annihilator(k) and (t-1)*annihilator(k): "
        + _yesno(cert.divides_in_k),
        f"phi divides annihilator(p): {_yesno(cert.divides_in_p)}",
        f"valid: {_yesno(cert.valid)}",
    ]
    return "\n".join(lines) + "\n"


def _cmd_distinct(args, out) -> int:
    cert = distinctness_certificate(args.p, args.k)
    if args.json:
        out.write(emit_certificate_json(cert) + "\n")
    else:
        out.write(_certificate_text(cert))
    return 0 if cert.valid else 1


def _cmd_distinct_range(args, out) -> int:
    if args.min < 1 or args.max < args.min:
        raise BadPair(f"need 1 <= min <= max, got ({args.min}, {args.max})")
    certs = [
        distinctness_certificate(p, k)
        for p in range(args.min, args.max + 1)
        for k in range(p + 1, args.max + 1)
    ]
    if args.json:
        out.write(
            json.dumps(
                [json.loads(emit_certificate_json(c)) for c in certs],
                sort_keys=True,
                indent=2,
            )
            + "\n"
        )
    else:
        for c in certs:
            out.write(
                f"p={c.p} k={c.k} mode={c.mode} phi_index={c.phi_index} "
                f"valid={_yesno(c.valid)}\n"
            )
        valid = sum(1 for c in certs if c.valid)
        out.write(f"summary: {valid}/{len(certs)} certificates valid\n")
    return 0 if all(c.valid for c in certs) else 1


def _cmd_gamma(args, out) -> int:
    art = gamma_artifacts(args.p)
    ab = abelianization(art.presentation)
    tab_ab = abelianization(art.tab_presentation)
    fox_tab = elementary_ideal(
        alexander_matrix(art.tab_presentation, tab_ab.degree_map), 1
    )
    fox_gamma = elementary_ideal(
        alexander_matrix(art.presentation, ab.degree_map), 1
    )
    tab_matches = set(g.items() for g in fox_tab.gens) == set(
        g.items() for g in art.order_ideal.gens
    )
    gamma_gcd = (
        laurent_gcd(fox_gamma.gens) if fox_gamma.gens else LaurentPoly.zero()
    )
    if args.json:
        payload = {
            "p": art.p,
            "presentation": presentation_to_text(art.presentation),
            "tab_presentation": presentation_to_text(art.tab_presentation),
            "degree_map": ab.degree_map,
            "annihilator": poly_to_json(art.p_poly),
            "module_relations": [
                [poly_to_json(art.module_presentation.relations.entry(i, j)) for j in range(2)]
                for i in range(3)
            ],
            "order_ideal": [poly_to_json(g) for g in art.order_ideal.gens],
            "fox_ideal_tab": [poly_to_json(g) for g in fox_tab.gens],
            "fox_ideal_gamma": [poly_to_json(g) for g in fox_gamma.gens],
            "fox_tab_matches_order_ideal": tab_matches,
            "fox_gamma_gcd_equals_annihilator": gamma_gcd == art.p_poly,
        }
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return 0
    out.write(f"artifacts for p = {art.p}\n\n")
    out.write("four-generator presentation:\n")
    out.write(presentation_to_text(art.presentation))
    out.write(
        "degree map: "
        + " ".join(f"{g}={d}" for g, d in ab.degree_map.items())
        + "\n\n"
    )
    out.write("three-generator presentation (t = x y, a = t^p v, b = t^p y):\n")
    out.write(presentation_to_text(art.tab_presentation))
    out.write("\n")
    out.write(f"annihilator polynomial: {art.p_poly}\n")
    out.write(f"  coefficients (ascending from t^0): {_coeff_line(art.p_poly)}\n\n")
    out.write("module relation matrix (columns a, b):\n")
    rel = art.module_presentation.relations
    for i in range(rel.rows):
        out.write(
            "  [" + ", ".join(str(rel.entry(i, j)) for j in range(rel.cols)) + "]\n"
        )
    out.write("\norder ideal generators:\n")
    for g in art.order_ideal.gens:
        out.write(f"  {g}\n")
    out.write("\nfox-calculus cross-checks:\n")
    out.write(
        "  elementary ideal E1 of the three-generator presentation matches "
        f"the order ideal: {_yesno(tab_matches)}\n"
    )
    out.write(
        "  gcd of E1 of the four-generator presentation equals the "
        f"annihilator: {_yesno(gamma_gcd == art.p_poly)}\n"
    )
    return 0


def _cmd_verify_tau(args, out) -> int:
    p = args.p
    tau = tau_word(p)
    tk = TorusKnotParams(p, p + 1)
    sums_zero = tau.exponent_sums() == {}
    images = wirtinger_standard_images(p)
    tau_image = apply_images(tau, images)
    nf = normal_form(tk, product_to_amalgam(tau_image))
    nontrivial = not nf.is_trivial()
    in_commutator = is_in_commutator_subgroup(tk, tau_image)
    quotient = add_relator(torus_wirtinger(p), tau)
    ab = abelianization(quotient)
    delta = alexander_polynomial(quotient) if ab.is_infinite_cyclic() else None
    delta_trivial = delta == LaurentPoly.one()
    out.write(f"tau = {tau}\n")
    out.write(f"exponent sums all zero: {_yesno(sums_zero)}\n")
    out.write(f"image in the torus knot group: {tau_image}\n")
    out.write(f"image normal form: {nf}\n")
    out.write(f"image nontrivial: {_yesno(nontrivial)}\n")
    out.write(f"image lies in the commutator subgroup: {_yesno(in_commutator)}\n")
    out.write(
        "quotient abelianization infinite cyclic: "
        + _yesno(ab.is_infinite_cyclic())
        + "\n"
    )
    out.write(
        "quotient alexander polynomial: "
        + (str(delta) if delta is not None else "undefined")
        + "\n"
    )
    ok = sums_zero and nontrivial and in_commutator and ab.is_infinite_cyclic() and delta_trivial
    out.write("verdict: " + ("VERIFIED" if ok else "REFUTED") + "\n")
    return 0 if ok else 1


def _cmd_fold(args, out) -> int:
    p = args.p
    report = verify_homomorphism(
        gamma_presentation(p), TorusKnotParams(p, p + 1), fold_images()
    )
    out.write(f"fold u -> x, v -> y, x -> x, y -> y onto <x, y | x^{p} y^{p + 1}>\n")
    for check in report.relator_checks:
        image = str(check.image) if not check.image.is_identity() else "1"
        out.write(
            f"relator {check.relator} maps to {image}: "
            + ("trivial" if check.trivial else f"NONTRIVIAL ({check.normal_form})")
            + "\n"
        )
    out.write(f"images reach x: {_yesno(report.hits_x)}\n")
    out.write(f"images reach y: {_yesno(report.hits_y)}\n")
    ok = report.is_homomorphism and report.surjective
    out.write(
        "verdict: "
        + ("HOMOMORPHISM, SURJECTIVE" if ok else "REFUTED")
        + "\n"
    )
    return 0 if ok else 1


def _cmd_wp(args, out) -> int:
    tk = TorusKnotParams(args.p, args.q)
    word = parse_word(args.word, {"x", "y"})
    out.write(str(normal_form(tk, word)) + "\n")
    return 0


def _cmd_selftest(args, out) -> int:
    ok = acceptance.run_all(lambda line: out.write(line + "\n"))
    out.write("selftest: " + ("all criteria passed" if ok else "FAILURES") + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcert",
        description="Exact group-theoretic certificates for the doubled "
        "torus-knot family.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("present", help="print a presentation file")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument(
        "--form",
        choices=("wirtinger", "standard", "gamma", "gamma-tab", "double"),
        default="wirtinger",
    )
    sp.set_defaults(func=_cmd_present)

    sp = sub.add_parser("alexander", help="alexander polynomial of a presentation file")
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=_cmd_alexander)

    sp = sub.add_parser("gamma", help="full artifact bundle for one p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_gamma)

    sp = sub.add_parser("distinct", help="distinctness certificate for a pair p < k")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_distinct)

    sp = sub.add_parser("distinct-range", help="certificates for all pairs in a range")
    sp.add_argument("--min", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_distinct_range)

    sp = sub.add_parser("verify-tau", help="consequence suite for the seam commutator")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=_cmd_verify_tau)

    sp = sub.add_parser("fold", help="verify the fold onto the torus knot group")
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=_cmd_fold)

    sp = sub.add_parser("wp", help="normal form in <x, y | x^p = y^q>")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--word", required=True)
    sp.set_defaults(func=_cmd_wp)

    sp = sub.add_parser("selftest", help="run the full acceptance suite")
    sp.set_defaults(func=_cmd_selftest)

    return parser


def run(argv: list[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotInfiniteCyclicAbelianization as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return 1
    except MismatchError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
