"""Fox free differential calculus and Alexander invariants.

The Fox derivative d/dg on a free group satisfies dg/dg = 1,
d(g^-1)/dg = -g^-1, dh/dg = 0 for h != g, and the product rule
d(uv)/dg = du/dg + u * dv/dg.  Abelianizing the Jacobian of a
presentation's relators through a degree map G -> Z yields the Alexander
matrix over Z[t, t^-1]; its ideals of minors are isomorphism invariants
of the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .laurent import LaurentMatrix, LaurentPoly, laurent_gcd, minors
from .presentations import Presentation, abelianization
from .words import Word


class UnmappedGenerator(ValueError):
    """A group ring element mentions a generator missing from the degree map."""


class NotInfiniteCyclicAbelianization(ValueError):
    """Alexander polynomial requires abelianization Z (rank 1, no torsion)."""


class GroupRingElement:
    """Finite Z-linear combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, int] = {}
        for w, c in items:
            if c:
                acc[w] = acc.get(w, 0) + c
                if not acc[w]:
                    del acc[w]
        self.terms = acc

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    @classmethod
    def from_word(cls, w: Word, coeff: int = 1) -> "GroupRingElement":
        return cls({w: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> tuple[tuple[Word, int], ...]:
        return tuple(
            sorted(self.terms.items(), key=lambda wc: (wc[0].length(), wc[0].syllables))
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.items())

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
            if not acc[w]:
                del acc[w]
        out = GroupRingElement.zero()
        out.terms = acc
        return out

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        acc: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                acc[w] = acc.get(w, 0) + c1 * c2
                if not acc[w]:
                    del acc[w]
        out = GroupRingElement.zero()
        out.terms = acc
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "GroupRingElement(0)"
        parts = []
        for w, c in self.items():
            name = str(w) if not w.is_identity() else "1"
            parts.append(f"{c:+d}*({name})")
        return f"GroupRingElement({' '.join(parts)})"


def fox_derivative(w: Word, gen: str) -> GroupRingElement:
    """d(w)/d(gen) in the integral group ring of the free group."""
    acc: dict[Word, int] = {}

    def put(word: Word, coeff: int):
        acc[word] = acc.get(word, 0) + coeff
        if not acc[word]:
            del acc[word]

    prefix = Word.identity()
    for g, e in w.syllables:
        if g == gen:
            if e > 0:
                # d(g^e) = 1 + g + ... + g^(e-1)
                for i in range(e):
                    put(prefix * Word.gen(g, i) if i else prefix, 1)
            else:
                # e < 0: d(g^e) = -(g^-1 + g^-2 + ... + g^e)
                for i in range(-1, e - 1, -1):
                    put(prefix * Word.gen(g, i), -1)
        prefix = prefix * Word.gen(g, e)
    return GroupRingElement(acc)


def abelianize_element(
    e: GroupRingElement, degree_map: Mapping[str, int]
) -> LaurentPoly:
    """Send each word to t^(weighted exponent sum) and collect coefficients."""
    acc: dict[int, int] = {}
    for w, c in e.terms.items():
        missing = w.generators() - set(degree_map)
        if missing:
            raise UnmappedGenerator(
                f"no degree assigned for generator(s) {sorted(missing)}"
            )
        d = w.degree(degree_map)
        acc[d] = acc.get(d, 0) + c
    return LaurentPoly(acc)


def fox_matrix(
    generators: Iterable[str],
    relators: Iterable[Word],
    degree_map: Mapping[str, int],
) -> LaurentMatrix:
    gens = tuple(generators)
    rels = tuple(relators)
    entries = [
        abelianize_element(fox_derivative(r, g), degree_map)
        for r in rels
        for g in gens
    ]
    return LaurentMatrix(len(rels), len(gens), entries)


def alexander_matrix(P: Presentation, degree_map: Mapping[str, int]) -> LaurentMatrix:
    """Abelianized Fox Jacobian: entry (i, j) is the image of
    d(relator_i)/d(generator_j) under the degree map.
    """
    for r in P.relators:
        if r.degree(degree_map) != 0:
            raise ValueError(f"degree map does not kill relator {r}")
    return fox_matrix(P.generators, P.relators, degree_map)


@dataclass(frozen=True)
class IdealGenerators:
    """Canonical generator list for an ideal of Z[t, t^-1]: no zeros, all
    canonical, deduplicated; collapses to (1,) when any generator is a
    unit, since the ideal is then the whole ring.
    """

    gens: tuple[LaurentPoly, ...]

    @classmethod
    def from_polys(cls, polys: Iterable[LaurentPoly]) -> "IdealGenerators":
        seen = set()
        out = []
        for f in polys:
            c = f.canonical()
            if c.is_zero():
                continue
            if c.is_unit():
                return cls(gens=(LaurentPoly.one(),))
            if c.items() not in seen:
                seen.add(c.items())
                out.append(c)
        return cls(gens=tuple(out))

    def is_unit_ideal(self) -> bool:
        return any(g == LaurentPoly.one() for g in self.gens)

    def is_zero_ideal(self) -> bool:
        return not self.gens


@dataclass(frozen=True)
class ModulePresentation:
    """A module over Z[t, t^-1] given by generators and a relation matrix
    (one row per relation, one column per module generator).
    """

    module_generators: tuple[str, ...]
    relations: LaurentMatrix

    def __post_init__(self):
        if self.relations.cols != len(self.module_generators):
            raise ValueError("relation matrix shape does not match generators")


def elementary_ideal(M: LaurentMatrix, k: int) -> IdealGenerators:
    """The k-th elementary (Fitting) ideal: the ideal of (n-k) x (n-k)
    minors, n = column count.  E_k for k >= n is the whole ring; when
    n - k exceeds the row count the ideal is zero.
    """
    n = M.cols
    if k >= n:
        return IdealGenerators(gens=(LaurentPoly.one(),))
    size = n - k
    if size > M.rows:
        return IdealGenerators(gens=())
    return IdealGenerators.from_polys(minors(M, size))


def alexander_polynomial(P: Presentation) -> LaurentPoly:
    """Canonical generator of the smallest principal ideal containing the
    first elementary ideal of the Alexander matrix, i.e. the gcd of all
    maximal minors.

    For a presentation marked Wirtinger with as many relators as
    generators, the last (redundant) relator is dropped first; the first
    elementary ideal is unchanged either way, the drop just avoids
    needless minors.  Returns 1 for the one-generator free presentation
    and 0 if every maximal minor vanishes.
    """
    ab = abelianization(P)
    if not ab.is_infinite_cyclic():
        raise NotInfiniteCyclicAbelianization(
            f"abelianization has rank {ab.free_rank} and torsion {list(ab.torsion)}"
        )
    relators = P.relators
    if P.wirtinger and len(relators) == len(P.generators):
        relators = relators[:-1]
    M = fox_matrix(P.generators, relators, ab.degree_map)
    ideal = elementary_ideal(M, 1)
    if ideal.is_zero_ideal():
        return LaurentPoly.zero()
    return laurent_gcd(ideal.gens)
