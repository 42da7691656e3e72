import random

import pytest

from knotcert.laurent import (
    AllZero,
    DivisionByZero,
    InvalidIndex,
    LaurentMatrix,
    LaurentPoly,
    NotDivisible,
    SizeTooLarge,
    cyclotomic,
    divide_exact,
    divides,
    laurent_det,
    laurent_gcd,
    minors,
)

ONE = LaurentPoly.one()
T = LaurentPoly.t_power(1)


def poly(pairs):
    return LaurentPoly(pairs)


def random_poly(rng, max_terms=4, exp_range=(-5, 5), coeff_range=(-6, 6)):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        c = rng.randint(*coeff_range)
        terms[rng.randint(*exp_range)] = c
    return LaurentPoly(terms)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (T + ONE) * (T - ONE) == poly({2: 1, 0: -1})

    def test_additive_identity(self):
        f = poly({-3: 2, 1: 5})
        assert f + LaurentPoly.zero() == f

    def test_known_product_is_degree_six_annihilator(self):
        # (t^2 - t + 1)(t^4 - t^2 + 1), expanded by hand
        f = poly({2: 1, 1: -1, 0: 1})
        g = poly({4: 1, 2: -1, 0: 1})
        assert f * g == poly({6: 1, 5: -1, 3: 1, 1: -1, 0: 1})

    def test_no_zero_coefficients_stored(self):
        f = poly({0: 1, 1: 1}) - poly({1: 1})
        assert f.items() == ((0, 1),)

    def test_int_scaling_and_pow(self):
        assert (T * 3).items() == ((1, 3),)
        assert T ** 4 == LaurentPoly.t_power(4)
        assert (T + ONE) ** 0 == ONE


class TestCanonical:
    def test_zero(self):
        assert LaurentPoly.zero().canonical() == LaurentPoly.zero()

    def test_negative_exponents_and_sign(self):
        # -t^-1 + t^-2 normalizes to 1 - t; multiplying back by the unit
        # t^-2 recovers the input
        f = poly({-1: -1, -2: 1})
        c = f.canonical()
        assert c == poly({0: 1, 1: -1})
        assert c.shifted(-2) == f

    def test_sign_flip(self):
        # lowest coefficient must come out positive
        assert poly({0: -1, 1: 1}).canonical() == poly({0: 1, 1: -1})

    def test_already_canonical(self):
        f = poly({2: 1, 1: -1, 0: 1})
        assert f.canonical() == f

    def test_idempotent(self):
        rng = random.Random(11)
        for _ in range(100):
            f = random_poly(rng)
            assert f.canonical().canonical() == f.canonical()

    def test_multiplicative(self):
        rng = random.Random(12)
        for _ in range(200):
            f, g = random_poly(rng), random_poly(rng)
            assert (f * g).canonical() == (f.canonical() * g.canonical()).canonical()


class TestDivision:
    def test_simple_quotient(self):
        assert divide_exact(poly({2: 1, 0: -1}), T - ONE) == T + ONE

    def test_product_of_cyclotomic_style_factors(self):
        # (t^6 - 1)(t - 1) / ((t^3 - 1)(t^2 - 1)), checked by long division
        num = (LaurentPoly.t_power(6) - ONE) * (T - ONE)
        den = (LaurentPoly.t_power(3) - ONE) * (poly({2: 1}) - ONE)
        assert divide_exact(num, den) == poly({2: 1, 1: -1, 0: 1})

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            divide_exact(poly({2: 1, 0: 1}), T + ONE)

    def test_zero_divisor(self):
        with pytest.raises(DivisionByZero):
            divide_exact(ONE, LaurentPoly.zero())

    def test_zero_dividend(self):
        assert divide_exact(LaurentPoly.zero(), T) == LaurentPoly.zero()

    def test_round_trip_random(self):
        rng = random.Random(13)
        count = 0
        while count < 300:
            f, g = random_poly(rng), random_poly(rng)
            if g.is_zero():
                continue
            count += 1
            assert divide_exact(f * g, g) == f

    def test_divides_predicate(self):
        assert divides(T - ONE, poly({2: 1, 0: -1}))
        assert not divides(T + ONE, poly({2: 1, 0: 1}))
        assert divides(LaurentPoly.zero(), LaurentPoly.zero())
        assert not divides(LaurentPoly.zero(), ONE)


class TestCyclotomic:
    def test_first_two(self):
        assert cyclotomic(1) == T - ONE
        assert cyclotomic(2) == T + ONE

    def test_twelfth(self):
        assert cyclotomic(12) == poly({4: 1, 2: -1, 0: 1})

    def test_invalid_index(self):
        with pytest.raises(InvalidIndex):
            cyclotomic(0)
        with pytest.raises(InvalidIndex):
            cyclotomic(-3)

    def test_product_identity_up_to_200(self):
        for n in range(1, 201):
            prod = ONE
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic(d)
            assert prod == poly({n: 1, 0: -1}), n


class TestGcd:
    def test_linear_factor(self):
        assert laurent_gcd([poly({2: 1, 0: -1}), T - ONE]) == (T - ONE).canonical()

    def test_common_quadratic_factor(self):
        pp = poly({2: 1, 1: -1, 0: 1})
        assert laurent_gcd([pp * pp, (T - ONE) * pp]) == pp

    def test_content_gcd(self):
        assert laurent_gcd([poly({0: 6}), poly({1: 4})]) == poly({0: 2})

    def test_all_zero(self):
        with pytest.raises(AllZero):
            laurent_gcd([LaurentPoly.zero(), LaurentPoly.zero()])
        with pytest.raises(AllZero):
            laurent_gcd([])

    def test_gcd_divides_inputs_random(self):
        rng = random.Random(14)
        for _ in range(150):
            fs = [random_poly(rng) for _ in range(rng.randint(1, 4))]
            if all(f.is_zero() for f in fs):
                continue
            g = laurent_gcd(fs)
            for f in fs:
                divide_exact(f, g)  # must not raise


def cofactor_det(rows):
    # independent oracle: first-row cofactor expansion
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero()
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        sub = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = entry * cofactor_det(sub)
        total = total + (term if j % 2 == 0 else -term)
    return total


class TestMinorsAndDet:
    def test_det_matches_cofactor_oracle(self):
        rng = random.Random(15)
        for _ in range(120):
            n = rng.randint(1, 4)
            rows = [
                [random_poly(rng, max_terms=2, exp_range=(-2, 2), coeff_range=(-3, 3)) for _ in range(n)]
                for _ in range(n)
            ]
            assert laurent_det([row[:] for row in rows]) == cofactor_det(rows)

    def test_det_matches_cofactor_oracle_5x5(self):
        rng = random.Random(16)
        for _ in range(10):
            rows = [
                [random_poly(rng, max_terms=2, exp_range=(-2, 2), coeff_range=(-3, 3)) for _ in range(5)]
                for _ in range(5)
            ]
            assert laurent_det([row[:] for row in rows]) == cofactor_det(rows)

    def test_order_ideal_shape_matrix(self):
        pp = poly({2: 1, 1: -1, 0: 1})
        one_minus_t = ONE - T
        m = LaurentMatrix(
            3, 2, [pp, LaurentPoly.zero(), LaurentPoly.zero(), pp, one_minus_t, -one_minus_t]
        )
        got = minors(m, 2)
        assert got == [(pp * pp).canonical(), (one_minus_t * pp).canonical()]

    def test_identity(self):
        m = LaurentMatrix(2, 2, [ONE, LaurentPoly.zero(), LaurentPoly.zero(), ONE])
        assert minors(m, 2) == [ONE]

    def test_rank_deficient(self):
        m = LaurentMatrix(2, 2, [T, T, T, T])
        assert minors(m, 2) == []

    def test_size_too_large(self):
        m = LaurentMatrix(2, 2, [ONE] * 4)
        with pytest.raises(SizeTooLarge):
            minors(m, 3)

    def test_empty_minor_is_one(self):
        m = LaurentMatrix(2, 2, [T] * 4)
        assert minors(m, 0) == [ONE]

    def test_bad_entry_count(self):
        with pytest.raises(ValueError):
            LaurentMatrix(2, 2, [ONE])
