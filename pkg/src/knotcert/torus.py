"""Exact word problem for torus knot groups, and homomorphism checking.

The group <x, y | x^p = y^q> (p, q coprime, both >= 2) is a central
extension of the free product Z/p * Z/q by the infinite cyclic center
generated by c = x^p = y^q.  Every element is uniquely c^m * s where s is
an alternating product of x-syllables with exponent in [1, p-1] and
y-syllables with exponent in [1, q-1]; two words are equal in the group
iff their normal forms coincide.

Convention care: the presentation <x, y | x^p y^q = 1> (relator-product
form) gives an isomorphic group via y -> y^-1.  normal_form always works
in the amalgam form x^p = y^q; callers checking maps into the
relator-product form pass convention="product" and the images are
transported through that isomorphism first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .presentations import Presentation
from .words import ForeignGenerator, Word


class BadParams(ValueError):
    """Torus knot parameters must be coprime with p >= 2 and q >= 2 here."""


@dataclass(frozen=True)
class TorusKnotParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 2:
            raise BadParams(f"need p >= 1 and q >= 2, got ({self.p}, {self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise BadParams(f"({self.p}, {self.q}) are not coprime")


@dataclass(frozen=True)
class TorusNF:
    """Normal form c^central * alternating syllables, c = x^p = y^q."""

    params: TorusKnotParams
    central_exponent: int
    syllables: tuple[tuple[str, int], ...]

    def is_trivial(self) -> bool:
        return self.central_exponent == 0 and not self.syllables

    def as_word(self) -> Word:
        return Word.gen("x", self.params.p * self.central_exponent) * Word(
            self.syllables
        )

    def __str__(self) -> str:
        if self.is_trivial():
            return "trivial"
        parts = []
        if self.central_exponent:
            parts.append(
                "c" if self.central_exponent == 1 else f"c^{self.central_exponent}"
            )
        parts.extend(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)
        return " ".join(parts)


def normal_form(tk: TorusKnotParams, w: Word) -> TorusNF:
    """Unique normal form of a word over {x, y} in <x, y | x^p = y^q>.

    Rewrites x^(+-p) and y^(+-q) to central powers, folds exponents into
    [1, p-1] / [1, q-1] with carries into the central exponent, and merges
    adjacent syllables until the alternating form is reached.
    """
    if tk.p < 2 or tk.q < 2:
        raise BadParams(f"word problem needs p, q >= 2, got ({tk.p}, {tk.q})")
    modulus = {"x": tk.p, "y": tk.q}
    foreign = w.generators() - {"x", "y"}
    if foreign:
        raise ForeignGenerator(f"word uses generator(s) {sorted(foreign)}, not x, y")
    central = 0
    stack: list[tuple[str, int]] = []
    for g, e in w.syllables:
        if stack and stack[-1][0] == g:
            e += stack.pop()[1]
        m, r = divmod(e, modulus[g])
        central += m
        if r:
            stack.append((g, r))
        # r == 0: the syllable became central; the stack stays alternating
    return TorusNF(params=tk, central_exponent=central, syllables=tuple(stack))


def product_to_amalgam(w: Word) -> Word:
    """Transport along the isomorphism <x,y | x^p y^q> -> <x,y | x^p = y^q>,
    x -> x, y -> y^-1."""
    return w.substitute("y", Word.gen("y", -1))


def is_trivial_in_product_group(tk: TorusKnotParams, w: Word) -> bool:
    """Word problem for the relator-product presentation <x, y | x^p y^q>."""
    return normal_form(tk, product_to_amalgam(w)).is_trivial()


def apply_images(w: Word, images: Mapping[str, Word]) -> Word:
    """Substitute images for every generator of w and reduce."""
    out = Word.identity()
    for g, e in w.syllables:
        if g not in images:
            raise ForeignGenerator(f"no image supplied for generator {g!r}")
        out = out * (images[g] ** e)
    return out


@dataclass(frozen=True)
class RelatorCheck:
    relator: Word
    image: Word
    trivial: bool
    normal_form: TorusNF


@dataclass(frozen=True)
class HomomorphismReport:
    params: TorusKnotParams
    convention: str
    relator_checks: tuple[RelatorCheck, ...]
    hits_x: bool
    hits_y: bool

    @property
    def is_homomorphism(self) -> bool:
        return all(c.trivial for c in self.relator_checks)

    @property
    def surjective(self) -> bool:
        return self.is_homomorphism and self.hits_x and self.hits_y


def verify_homomorphism(
    source: Presentation,
    tk: TorusKnotParams,
    images: Mapping[str, Word],
    convention: str = "product",
) -> HomomorphismReport:
    """Certify a map from a presented group to a torus knot group.

    Each relator's image must have trivial normal form; that makes the
    assignment a homomorphism.  Surjectivity is established when the image
    set visibly contains elements equal to x and to y in the target.
    ``convention`` names the target presentation the images are written
    against: "product" for <x,y | x^p y^q = 1>, "amalgam" for
    <x,y | x^p = y^q>.
    """
    if convention not in ("product", "amalgam"):
        raise ValueError(f"unknown convention {convention!r}")
    missing = set(source.generators) - set(images)
    if missing:
        raise ForeignGenerator(f"no image supplied for generator(s) {sorted(missing)}")
    transport = product_to_amalgam if convention == "product" else (lambda w: w)
    checks = []
    for r in source.relators:
        img = apply_images(r, images)
        nf = normal_form(tk, transport(img))
        checks.append(
            RelatorCheck(relator=r, image=img, trivial=nf.is_trivial(), normal_form=nf)
        )

    def image_equals(target_word: Word) -> bool:
        goal = normal_form(tk, transport(target_word))
        return any(
            normal_form(tk, transport(apply_images(Word.gen(g), images))) == goal
            for g in source.generators
        )

    return HomomorphismReport(
        params=tk,
        convention=convention,
        relator_checks=tuple(checks),
        hits_x=image_equals(Word.gen("x")),
        hits_y=image_equals(Word.gen("y")),
    )


def is_in_commutator_subgroup(
    tk: TorusKnotParams, w: Word, convention: str = "product"
) -> bool:
    """True iff w dies in the abelianization of the torus knot group.

    The abelianization is Z; for the relator-product presentation the
    degree map is {x: q, y: -p}, for the amalgam form it is {x: q, y: p}.
    """
    if tk.p < 2 or tk.q < 2:
        raise BadParams(f"need p, q >= 2, got ({tk.p}, {tk.q})")
    foreign = w.generators() - {"x", "y"}
    if foreign:
        raise ForeignGenerator(f"word uses generator(s) {sorted(foreign)}, not x, y")
    if convention == "product":
        degree_map = {"x": tk.q, "y": -tk.p}
    elif convention == "amalgam":
        degree_map = {"x": tk.q, "y": tk.p}
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return w.degree(degree_map) == 0


def wirtinger_standard_images(p: int, meridian_degree: int = 1) -> dict[str, Word]:
    """A generator dictionary from the Wirtinger-style presentation of the
    (p, p+1) torus knot onto <x, y | x^p y^(p+1) = 1>.

    With meridian_degree=+1: z -> x and a_k -> x^-(k-1) (x y) x^(k-1), so
    each meridian image has weighted degree +1 under {x: p+1, y: -p}.
    With meridian_degree=-1 the orientation-reversed dictionary
    z -> x^-1, a_k -> x^(k-1) (y^-1 x^-1) x^-(k-1) is returned; both are
    machine-verified by verify_homomorphism in the test suite.
    """
    if p < 2:
        raise BadParams(f"need p >= 2, got {p}")
    if meridian_degree == 1:
        images = {"z": Word.gen("x")}
        a1 = Word.gen("x") * Word.gen("y")
        for k in range(1, p + 1):
            shift = Word.gen("x", -(k - 1))
            images[f"a{k}"] = shift * a1 * shift.inverse()
    elif meridian_degree == -1:
        images = {"z": Word.gen("x", -1)}
        a1 = Word.gen("y", -1) * Word.gen("x", -1)
        for k in range(1, p + 1):
            shift = Word.gen("x", k - 1)
            images[f"a{k}"] = shift * a1 * shift.inverse()
    else:
        raise ValueError("meridian_degree must be +1 or -1")
    return images
