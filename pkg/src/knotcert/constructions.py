"""Constructions for the doubled torus-knot family and its invariant
certificates.

The pipeline: a Wirtinger-style presentation of the (p, p+1) torus knot
group; the seam commutator tau = [a1, a1...ap]; the doubled knot group
with its meridian identification; the four-generator quotient groups
G_p = <u,v,x,y | u^p v^(p+1), x^p y^(p+1), uv=xy, vu=yx>; their
three-generator rewriting over t = xy, a = t^p v, b = t^p y; the
annihilator polynomial and the order ideal of the associated Alexander
module; and, finally, pairwise distinctness certificates built from exact
cyclotomic divisibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fox import IdealGenerators, ModulePresentation, elementary_ideal
from .laurent import LaurentMatrix, LaurentPoly, cyclotomic, divide_exact, divides
from .presentations import Presentation
from .torus import TorusKnotParams
from .words import Word, commutator, relator_equivalent, replace_subword


class InvalidP(ValueError):
    """Family parameter out of range."""


class BadPair(ValueError):
    """Distinctness certificates need 1 <= p < k."""


class MismatchError(AssertionError):
    """The two independent routes to the same presentation disagree.

    Raised by gamma_tab_presentation when rewriting the four-generator
    presentation does not reproduce the closed-form relators; this is a
    built-in fidelity check, so a raise means an implementation bug.
    """


def _gen(name: str, exp: int = 1) -> Word:
    return Word.gen(name, exp)


def _strand_product(prefix: str, p: int) -> Word:
    """a1 a2 ... ap (or b1 ... bp)."""
    out = Word.identity()
    for i in range(1, p + 1):
        out = out * _gen(f"{prefix}{i}")
    return out


def _wirtinger_relators(z: str, prefix: str, p: int) -> list[Word]:
    # z = (a1 ... ap) a1, then z a1 z^-1 = ap and z a_k z^-1 = a_(k-1).
    strand = _strand_product(prefix, p)
    rels = [_gen(z) * (strand * _gen(f"{prefix}1")).inverse()]
    rels.append(
        _gen(z) * _gen(f"{prefix}1") * _gen(z, -1) * _gen(f"{prefix}{p}", -1)
    )
    for k in range(2, p + 1):
        rels.append(
            _gen(z) * _gen(f"{prefix}{k}") * _gen(z, -1) * _gen(f"{prefix}{k - 1}", -1)
        )
    return rels


def torus_wirtinger(p: int) -> Presentation:
    """Arc-generator presentation of the (p, p+1) torus knot group,
    read off a stack of p+1 twist regions:

        <z, a1..ap | z = a1...ap a1, z a1 z^-1 = ap, z a_k z^-1 = a_(k-1)>

    One relator is redundant (the presentation is flagged wirtinger).
    """
    if p < 2:
        raise InvalidP(f"need p >= 2, got {p}")
    gens = ("z",) + tuple(f"a{i}" for i in range(1, p + 1))
    return Presentation(gens, _wirtinger_relators("z", "a", p), wirtinger=True)


def tau_word(p: int) -> Word:
    """The seam commutator [a1, a1 a2 ... ap] in the Wirtinger generators;
    the curve the doubling construction is performed along.  Its exponent
    sums all vanish, so it lies in the commutator subgroup.
    """
    if p < 2:
        raise InvalidP(f"need p >= 2, got {p}")
    return commutator(_gen("a1"), _strand_product("a", p))


def standard_presentation(p: int, q: int) -> Presentation:
    """Two-generator presentation <x, y | x^p y^q> of the (p, q) torus
    knot group (relator-product convention)."""
    TorusKnotParams(p, q)  # validates coprimality and ranges
    return Presentation(("x", "y"), [_gen("x", p) * _gen("y", q)])


def double_presentation(p: int) -> tuple[Presentation, Word]:
    """The knot group of the doubled knot, plus the doubled seam word.

    Two Wirtinger-presented copies (generators z, a1..ap and w, b1..bp)
    are glued along a sphere meeting the knot twice, so the two meridians
    a1 and b1 are identified; the relator a1 b1^-1 carries that gluing.
    The returned word is [a1, a1..ap] * [b1, b1..bp]^-1.
    """
    if p < 2:
        raise InvalidP(f"need p >= 2, got {p}")
    gens = (
        ("z",)
        + tuple(f"a{i}" for i in range(1, p + 1))
        + ("w",)
        + tuple(f"b{i}" for i in range(1, p + 1))
    )
    relators = (
        _wirtinger_relators("z", "a", p)
        + _wirtinger_relators("w", "b", p)
        + [_gen("a1") * _gen("b1", -1)]
    )
    word = commutator(_gen("a1"), _strand_product("a", p)) * commutator(
        _gen("b1"), _strand_product("b", p)
    ).inverse()
    return Presentation(gens, relators), word


def gamma_presentation(p: int) -> Presentation:
    """The four-generator quotient group of the doubled construction:

        <u, v, x, y | u^p v^(p+1), x^p y^(p+1), u v y^-1 x^-1, v u x^-1 y^-1>

    (equations uv = xy and vu = yx written as relators).
    """
    if p < 1:
        raise InvalidP(f"need p >= 1, got {p}")
    u, v, x, y = (_gen(n) for n in ("u", "v", "x", "y"))
    relators = [
        _gen("u", p) * _gen("v", p + 1),
        _gen("x", p) * _gen("y", p + 1),
        u * v * y.inverse() * x.inverse(),
        v * u * x.inverse() * y.inverse(),
    ]
    return Presentation(("u", "v", "x", "y"), relators)


def fold_images() -> dict[str, Word]:
    """The fold u -> x, v -> y, x -> x, y -> y collapsing the two halves
    of gamma_presentation onto the torus knot group <x, y | x^p y^(p+1)>."""
    return {
        "u": _gen("x"),
        "v": _gen("y"),
        "x": _gen("x"),
        "y": _gen("y"),
    }


def _tab_images(p: int) -> dict[str, Word]:
    # Inverting t = xy, a = t^p v, b = t^p y (and uv = xy for u):
    #   y = t^-p b,  v = t^-p a,  x = t b^-1 t^p,  u = t a^-1 t^p.
    t, a, b = _gen("t"), _gen("a"), _gen("b")
    return {
        "u": t * a.inverse() * _gen("t", p),
        "v": _gen("t", -p) * a,
        "x": t * b.inverse() * _gen("t", p),
        "y": _gen("t", -p) * b,
    }


def _tab_by_substitution(p: int) -> list[Word]:
    images = _tab_images(p)
    words = []
    for r in gamma_presentation(p).relators:
        img = r
        for g, rep in images.items():
            img = img.substitute(g, rep)
        words.append(img)
    if not words[2].is_identity():
        raise MismatchError(
            f"relator uv=xy should dissolve under the change of variables, got {words[2]}"
        )
    return [words[0].cyclically_reduced(), words[1].cyclically_reduced(),
            words[3].cyclically_reduced()]


def _conj_power(exp: int, core: Word) -> Word:
    return _gen("t", exp) * core * _gen("t", -exp)


def _tab_by_formula(p: int) -> list[Word]:
    def product_relator(letter: str) -> Word:
        out = Word.identity()
        for k in range(p):
            out = out * _conj_power(k * (p + 1) + 1, _gen(letter, -1))
        for k in range(p + 1):
            out = out * _conj_power(p * p - k * p, _gen(letter))
        return out.cyclically_reduced()

    exchange = (
        _gen("a") * _gen("t") * _gen("a", -1) * _gen("t", -1)
        * _gen("t") * _gen("b") * _gen("t", -1) * _gen("b", -1)
    )
    return [product_relator("a"), product_relator("b"), exchange.cyclically_reduced()]


def gamma_tab_presentation(p: int) -> Presentation:
    """gamma_presentation(p) rewritten over t = xy, a = t^p v, b = t^p y:

        < t, a, b |  prod_k t^(k(p+1)+1) a^-1 t^-(k(p+1)+1)
                     * prod_k t^(p^2-kp) a t^-(p^2-kp),
                     (same with b),
                     a t a^-1 t^-1  t b t^-1 b^-1 >

    Built twice: once by substituting the inverted variable definitions
    into the four-generator relators, once literally from the conjugation
    exponent formulas; MismatchError if the routes disagree.
    """
    if p < 1:
        raise InvalidP(f"need p >= 1, got {p}")
    by_subst = _tab_by_substitution(p)
    by_formula = _tab_by_formula(p)
    if by_subst != by_formula:
        raise MismatchError(
            "substitution and closed-form routes disagree: "
            f"{by_subst} vs {by_formula}"
        )
    return Presentation(("t", "a", "b"), by_formula)


@dataclass(frozen=True)
class ConsistencyReport:
    p: int
    verified: bool
    steps: tuple[str, ...]


def derive_gamma_consistency(
    p: int,
    meridian_lhs: Word | None = None,
    meridian_rhs: Word | None = None,
) -> ConsistencyReport:
    """Reconcile the doubled picture with gamma_presentation mechanically.

    In the doubled group the two half meridians satisfy a1 = (xy)^-1 and
    b1 = (uv)^-1, so killing the doubled seam word [a1, y][b1, v]^-1 and
    identifying the meridians (uv = xy) must force the remaining relator
    vu = yx.  The check substitutes the meridian expressions, rewrites one
    uv -> xy occurrence, cyclically reduces, and compares the survivor
    with the relator v u x^-1 y^-1 up to cyclic permutation and inversion.
    The trace is p-independent because y and v are single generators here.
    """
    if p < 2:
        raise InvalidP(f"need p >= 2, got {p}")
    if meridian_lhs is None:
        meridian_lhs = _gen("u") * _gen("v")
    if meridian_rhs is None:
        meridian_rhs = _gen("x") * _gen("y")
    steps = []
    word = commutator(_gen("a1"), _gen("y")) * commutator(
        _gen("b1"), _gen("v")
    ).inverse()
    steps.append(f"seam word: {word}")
    word = word.substitute("a1", (_gen("x") * _gen("y")).inverse())
    steps.append(f"substitute a1 = (x y)^-1: {word}")
    word = word.substitute("b1", (_gen("u") * _gen("v")).inverse())
    steps.append(f"substitute b1 = (u v)^-1: {word}")
    rewritten = replace_subword(word, meridian_lhs, meridian_rhs)
    if rewritten is None:
        steps.append(f"meridian relation {meridian_lhs} -> {meridian_rhs}: no occurrence")
        rewritten = word
    else:
        steps.append(
            f"rewrite one {meridian_lhs} -> {meridian_rhs}: {rewritten}"
        )
    survivor = rewritten.cyclically_reduced()
    target = _gen("v") * _gen("u") * _gen("x", -1) * _gen("y", -1)
    verified = relator_equivalent(survivor, target)
    steps.append(
        f"cyclically reduced survivor {survivor} "
        f"{'matches' if verified else 'does not match'} relator {target} "
        "up to cyclic permutation and inversion"
    )
    return ConsistencyReport(p=p, verified=verified, steps=tuple(steps))


def annihilator_poly(p: int, form: str = "sum") -> LaurentPoly:
    """The polynomial annihilating each generator of the Alexander module
    of gamma_presentation(p); equals the Alexander polynomial of the
    (p, p+1) torus knot.

    form="sum":    sum_{k=0..p} t^(p^2-kp) - sum_{k=0..p-1} t^(k(p+1)+1)
    form="closed": (t^(p(p+1)) - 1)(t - 1) / ((t^(p+1) - 1)(t^p - 1))

    Both are returned canonical; their equality for p = 1..12 is part of
    the acceptance suite.
    """
    if p < 1:
        raise InvalidP(f"need p >= 1, got {p}")
    if form == "sum":
        poly = LaurentPoly(
            [(p * p - k * p, 1) for k in range(p + 1)]
        ) - LaurentPoly([(k * (p + 1) + 1, 1) for k in range(p)])
        return poly.canonical()
    if form == "closed":
        tpow = LaurentPoly.t_power
        one = LaurentPoly.one()
        num = (tpow(p * (p + 1)) - one) * (tpow(1) - one)
        den = (tpow(p + 1) - one) * (tpow(p) - one)
        return divide_exact(num, den).canonical()
    raise ValueError(f"unknown form {form!r}")


def order_ideal(p: int) -> tuple[ModulePresentation, IdealGenerators]:
    """The Alexander module of gamma_presentation(p) and its order ideal.

    The module is <a, b | pp(t) a = 0, pp(t) b = 0, (1-t) a - (1-t) b = 0>
    over Z[t, t^-1] with pp = annihilator_poly(p); the order ideal is the
    ideal of 2x2 minors of the relation matrix, generated by pp^2 and
    (t-1) pp (the unit ideal when p = 1, since pp(1) is the constant 1).
    """
    if p < 1:
        raise InvalidP(f"need p >= 1, got {p}")
    pp = annihilator_poly(p)
    zero = LaurentPoly.zero()
    one_minus_t = LaurentPoly.one() - LaurentPoly.t_power(1)
    relations = LaurentMatrix(
        3, 2, [pp, zero, zero, pp, one_minus_t, -one_minus_t]
    )
    module = ModulePresentation(module_generators=("a", "b"), relations=relations)
    return module, elementary_ideal(relations, 0)


@dataclass(frozen=True)
class DistinctnessCertificate:
    """Exact divisibility facts separating the groups for p < k.

    cyclotomic mode (p >= 2): Phi = cyclotomic(k(k+1)) divides both order
    ideal generators for k, so a primitive k(k+1)-th root of unity kills
    everything in that ideal; Phi not dividing annihilator_poly(p) means
    (being irreducible) it misses pp_p^2, which lies in the other ideal.

    unit_ideal mode (p = 1): the p = 1 ideal is the whole ring while the
    k ideal is proper, certified by the common cyclotomic divisor.
    """

    p: int
    k: int
    mode: str
    phi_index: int
    divides_in_k: bool
    divides_in_p: bool
    valid: bool
    poly_p: LaurentPoly
    poly_k: LaurentPoly
    phi: LaurentPoly


def distinctness_certificate(p: int, k: int) -> DistinctnessCertificate:
    if p < 1 or p >= k:
        raise BadPair(f"need 1 <= p < k, got ({p}, {k})")
    phi_index = k * (k + 1)
    phi = cyclotomic(phi_index)
    poly_p = annihilator_poly(p)
    poly_k = annihilator_poly(k)
    t_minus_1 = LaurentPoly.t_power(1) - LaurentPoly.one()
    divides_in_k = divides(phi, poly_k) and divides(phi, (t_minus_1 * poly_k).canonical())
    divides_in_p = divides(phi, poly_p)
    if p >= 2:
        mode = "cyclotomic"
        valid = divides_in_k and not divides_in_p
    else:
        mode = "unit_ideal"
        ideal_p = order_ideal(p)[1]
        ideal_k = order_ideal(k)[1]
        proper_certified = not ideal_k.is_unit_ideal() and all(
            divides(phi, g) for g in ideal_k.gens
        )
        valid = ideal_p.is_unit_ideal() and proper_certified
    return DistinctnessCertificate(
        p=p,
        k=k,
        mode=mode,
        phi_index=phi_index,
        divides_in_k=divides_in_k,
        divides_in_p=divides_in_p,
        valid=valid,
        poly_p=poly_p,
        poly_k=poly_k,
        phi=phi,
    )


@dataclass(frozen=True)
class GammaArtifacts:
    """Everything the pipeline derives for one parameter p."""

    p: int
    presentation: Presentation
    tab_presentation: Presentation
    p_poly: LaurentPoly
    module_presentation: ModulePresentation
    order_ideal: IdealGenerators


def gamma_artifacts(p: int) -> GammaArtifacts:
    """Bundle the group, its rewriting, the annihilator polynomial (both
    displayed forms are checked against each other) and the order ideal."""
    poly = annihilator_poly(p, "sum")
    closed = annihilator_poly(p, "closed")
    if poly != closed:
        raise MismatchError(f"annihilator forms disagree at p={p}: {poly} vs {closed}")
    module, ideal = order_ideal(p)
    assert ideal == elementary_ideal(module.relations, 0)
    return GammaArtifacts(
        p=p,
        presentation=gamma_presentation(p),
        tab_presentation=gamma_tab_presentation(p),
        p_poly=poly,
        module_presentation=module,
        order_ideal=ideal,
    )
