import random

import pytest

from knotcert.presentations import (
    NoDefiningRelator,
    Presentation,
    abelianization,
    add_relator,
    eliminate_generator,
    exponent_matrix,
)
from knotcert.words import ForeignGenerator, Word


def W(*syllables):
    return Word(syllables)


def trefoil_wirtinger():
    # <z, a1, a2 | z = a1 a2 a1, z a1 z^-1 = a2, z a2 z^-1 = a1>
    return Presentation(
        ("z", "a1", "a2"),
        [
            W(("z", 1), ("a1", -1), ("a2", -1), ("a1", -1)),
            W(("z", 1), ("a1", 1), ("z", -1), ("a2", -1)),
            W(("z", 1), ("a2", 1), ("z", -1), ("a1", -1)),
        ],
    )


class TestPresentation:
    def test_duplicate_generators_rejected(self):
        with pytest.raises(ValueError):
            Presentation(("x", "x"))

    def test_foreign_relator_rejected(self):
        with pytest.raises(ForeignGenerator):
            Presentation(("x",), [Word.gen("y")])

    def test_relators_stored_cyclically_reduced(self):
        P = Presentation(("x", "y"), [W(("x", 1), ("y", 1), ("x", -1))])
        assert P.relators == (Word.gen("y"),)

    def test_trivial_relators_dropped(self):
        P = Presentation(("x",), [W(("x", 1), ("x", -1))])
        assert P.relators == ()


class TestAddRelator:
    def test_appends(self):
        P = Presentation(("x", "y"))
        Q = add_relator(P, Word.gen("x") * Word.gen("y"))
        assert Q.generators == P.generators
        assert Q.relators == (Word.gen("x") * Word.gen("y"),)

    def test_foreign_generator(self):
        with pytest.raises(ForeignGenerator):
            add_relator(Presentation(("x",)), Word.gen("y"))

    def test_identity_relator_imposes_nothing(self):
        P = Presentation(("x",), [Word.gen("x", 2)])
        assert add_relator(P, Word.identity()).relators == P.relators

    def test_killing_a_generator(self):
        P = add_relator(Presentation(("g", "h")), Word.gen("g"))
        ab = abelianization(P)
        assert ab.free_rank == 1 and not ab.torsion

    def test_free_rank_non_increasing(self):
        rng = random.Random(21)
        gens = ("a", "b", "c")
        for _ in range(100):
            rels = [
                Word(
                    (rng.choice(gens), rng.choice((-2, -1, 1, 2)))
                    for _ in range(rng.randint(0, 6))
                )
                for _ in range(rng.randint(0, 3))
            ]
            P = Presentation(gens, rels)
            w = Word(
                (rng.choice(gens), rng.choice((-2, -1, 1, 2)))
                for _ in range(rng.randint(0, 6))
            )
            assert abelianization(add_relator(P, w)).free_rank <= abelianization(P).free_rank


class TestEliminateGenerator:
    def test_trefoil_two_generator_form(self):
        P = trefoil_wirtinger()
        defining = W(("z", 1), ("a1", 1), ("z", -1))
        Q = eliminate_generator(P, "a2", defining)
        assert Q.generators == ("z", "a1")
        assert len(Q.relators) == 2
        # the group is unchanged: abelianization still Z with the same map
        ab = abelianization(Q)
        assert ab.is_infinite_cyclic()
        assert ab.degree_map == {"z": 3, "a1": 1}

    def test_simple_collapse(self):
        P = Presentation(("g", "h"), [Word.gen("g") * Word.gen("h", -1)])
        Q = eliminate_generator(P, "g", Word.gen("h"))
        assert Q.generators == ("h",)
        assert Q.relators == ()

    def test_defining_mentions_generator(self):
        P = Presentation(("g", "h"), [Word.gen("g") * Word.gen("h", -1)])
        with pytest.raises(NoDefiningRelator):
            eliminate_generator(P, "g", Word.gen("g"))

    def test_no_matching_relator(self):
        P = Presentation(("g", "h"), [Word.gen("g", 2)])
        with pytest.raises(NoDefiningRelator):
            eliminate_generator(P, "g", Word.gen("h"))

    def test_preserves_abelianization_random(self):
        rng = random.Random(22)
        gens = ("a", "b", "c")
        for _ in range(100):
            rels = [
                Word(
                    (rng.choice(gens), rng.choice((-2, -1, 1, 2)))
                    for _ in range(rng.randint(0, 5))
                )
                for _ in range(rng.randint(0, 2))
            ]
            # adjoin a fresh generator with a defining relator, then remove it
            defining = Word(
                (rng.choice(gens), rng.choice((-2, -1, 1, 2)))
                for _ in range(rng.randint(0, 5))
            )
            P = Presentation(gens, rels)
            extended = Presentation(
                gens + ("d",),
                list(rels) + [Word.gen("d") * defining.inverse()],
            )
            Q = eliminate_generator(extended, "d", defining)
            assert abelianization(Q).free_rank == abelianization(P).free_rank
            assert abelianization(Q).torsion == abelianization(P).torsion


class TestAbelianization:
    def test_exponent_matrix(self):
        P = trefoil_wirtinger()
        assert exponent_matrix(P).row_lists() == [
            [1, -2, -1],
            [0, 1, -1],
            [0, -1, 1],
        ]

    def test_trefoil_wirtinger_degree_map(self):
        ab = abelianization(trefoil_wirtinger())
        assert ab.is_infinite_cyclic()
        assert ab.degree_map == {"z": 3, "a1": 1, "a2": 1}

    def test_finite_cyclic(self):
        ab = abelianization(Presentation(("x",), [Word.gen("x", 2)]))
        assert ab.free_rank == 0
        assert ab.torsion == (2,)
        assert ab.degree_map is None

    def test_free_group(self):
        ab = abelianization(Presentation(("x", "y")))
        assert ab.free_rank == 2
        assert ab.degree_map is None

    def test_degree_map_sign_convention(self):
        # first generator with nonzero image comes out positive
        P = Presentation(("x", "y"), [Word.gen("x", 2) * Word.gen("y", 3)])
        assert abelianization(P).degree_map == {"x": 3, "y": -2}

    def test_degree_map_kills_relators_random(self):
        rng = random.Random(23)
        gens = ("a", "b", "c")
        found = 0
        for _ in range(400):
            rels = [
                Word(
                    (rng.choice(gens), rng.choice((-2, -1, 1, 2)))
                    for _ in range(rng.randint(1, 6))
                )
                for _ in range(rng.randint(1, 3))
            ]
            P = Presentation(gens, rels)
            ab = abelianization(P)
            if ab.degree_map is None:
                continue
            found += 1
            for r in P.relators:
                assert r.degree(ab.degree_map) == 0
        assert found > 20
