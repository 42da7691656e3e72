"""Finitely presented groups: presentations, scripted Tietze moves, and
abelianization via Smith normal form.

Relators are stored freely and cyclically reduced; two relators are "the
same" up to cyclic permutation and inversion, and eliminate_generator
checks its precondition at that level of equality.  No heuristic
simplification is ever attempted: every transformation is a
precondition-checked move that preserves the group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .intlinalg import IntMatrix, smith_normal_form
from .words import ForeignGenerator, Word, relator_equivalent


class NoDefiningRelator(ValueError):
    """eliminate_generator found no relator matching gen = defining word."""


def _valid_name(name: str) -> bool:
    return bool(name) and all(c.isalnum() or c == "_" for c in name)


class Presentation:
    """An ordered generator list plus a list of relator words.

    Relators are stored freely and cyclically reduced; relators that
    reduce to the identity impose nothing and are not stored.

    The ``wirtinger`` flag marks presentations built with one knowingly
    redundant relator (one generator and one relator per arc of a knot
    diagram); downstream Alexander computations may drop the last relator
    of such presentations.
    """

    __slots__ = ("generators", "relators", "wirtinger")

    def __init__(
        self,
        generators: Iterable[str],
        relators: Iterable[Word] = (),
        wirtinger: bool = False,
    ):
        gens = tuple(generators)
        for g in gens:
            if not _valid_name(g):
                raise ValueError(f"invalid generator name {g!r}")
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be unique")
        gen_set = set(gens)
        rels = []
        for r in relators:
            foreign = r.generators() - gen_set
            if foreign:
                raise ForeignGenerator(
                    f"relator {r} uses unknown generator(s) {sorted(foreign)}"
                )
            reduced = r.cyclically_reduced()
            if not reduced.is_identity():
                rels.append(reduced)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))
        object.__setattr__(self, "wirtinger", bool(wirtinger))

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Presentation)
            and self.generators == other.generators
            and self.relators == other.relators
        )

    def __repr__(self) -> str:
        gens = ", ".join(self.generators)
        rels = "; ".join(str(r) for r in self.relators)
        return f"Presentation(<{gens} | {rels}>)"


@dataclass(frozen=True)
class AbelianizationResult:
    free_rank: int
    torsion: tuple[int, ...]
    degree_map: Optional[dict[str, int]]

    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.torsion


def exponent_matrix(P: Presentation) -> IntMatrix:
    """Relator exponent sums: one row per relator, one column per generator."""
    index = {g: j for j, g in enumerate(P.generators)}
    rows = []
    for r in P.relators:
        row = [0] * len(P.generators)
        for g, e in r.syllables:
            row[index[g]] += e
        rows.append(row)
    return IntMatrix(len(P.relators), len(P.generators), [e for row in rows for e in row])


def add_relator(P: Presentation, w: Word) -> Presentation:
    """Quotient by the normal closure of w: append w as a relator."""
    foreign = w.generators() - set(P.generators)
    if foreign:
        raise ForeignGenerator(
            f"word {w} uses unknown generator(s) {sorted(foreign)}"
        )
    return Presentation(P.generators, P.relators + (w,), wirtinger=P.wirtinger)


def eliminate_generator(P: Presentation, gen: str, defining: Word) -> Presentation:
    """Tietze move: remove gen, using a relator equivalent to
    gen * defining^-1; gen is replaced by defining in the other relators.
    The group is unchanged up to isomorphism.
    """
    if gen not in P.generators:
        raise NoDefiningRelator(f"{gen!r} is not a generator")
    if gen in defining.generators():
        raise NoDefiningRelator(f"defining word for {gen!r} must not mention it")
    target = Word.gen(gen) * defining.inverse()
    found = None
    for i, r in enumerate(P.relators):
        if relator_equivalent(r, target):
            found = i
            break
    if found is None:
        raise NoDefiningRelator(
            f"no relator matches {gen} = {defining} up to cyclic moves"
        )
    new_gens = tuple(g for g in P.generators if g != gen)
    new_rels = [
        r.substitute(gen, defining)
        for j, r in enumerate(P.relators)
        if j != found
    ]
    return Presentation(new_gens, new_rels, wirtinger=False)


def abelianization(P: Presentation) -> AbelianizationResult:
    """Invariant factors of the abelianized group, from the SNF of the
    exponent-sum matrix.  When the result is infinite cyclic, a degree map
    is attached: the generator images under a fixed isomorphism to Z,
    signed so the first generator with nonzero image maps positively.
    """
    n = len(P.generators)
    snf = smith_normal_form(exponent_matrix(P))
    diag = snf.diagonal()
    rank = sum(1 for d in diag if d)
    free_rank = n - rank
    torsion = tuple(d for d in diag if d > 1)
    degree_map = None
    if free_rank == 1 and not torsion:
        # kernel of the exponent matrix = V * e_j for the unique index j
        # whose diagonal entry is absent or zero
        free_index = next(
            j for j in range(n) if j >= len(diag) or diag[j] == 0
        )
        column = snf.V.column(free_index)
        first = next(c for c in column if c)
        if first < 0:
            column = [-c for c in column]
        degree_map = dict(zip(P.generators, column))
    return AbelianizationResult(free_rank=free_rank, torsion=torsion, degree_map=degree_map)
