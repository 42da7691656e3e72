"""Exact arithmetic in Z[t, t^-1]: Laurent polynomials, cyclotomic
polynomials, gcds, and matrix minors over the Laurent ring.

A Laurent polynomial is stored sparsely as a map from integer exponent to
integer coefficient.  All arithmetic is exact; there is no floating point
anywhere in this module.  The units of Z[t, t^-1] are +-t^k, so equality
"up to units" is decided by comparing canonical forms (see
:meth:`LaurentPoly.canonical`).
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Exact division failed: the divisor does not divide the dividend."""


class DivisionByZero(ZeroDivisionError):
    """Division by the zero polynomial."""


class InvalidIndex(ValueError):
    """Cyclotomic index must be a positive integer."""


class AllZero(ValueError):
    """gcd of an empty or all-zero family is undefined."""


class SizeTooLarge(ValueError):
    """Requested minor size exceeds a matrix dimension."""


class LaurentPoly:
    """An element of Z[t, t^-1] with arbitrary-precision coefficients.

    >>> f = LaurentPoly({0: 1, 1: -1, 2: 1})
    >>> str(f)
    '1 - t + t^2'
    >>> str(f * f.shifted(-2))
    't^-2 - 2*t^-1 + 3 - 2*t + t^2'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            if c:
                acc[exp] = acc.get(exp, 0) + c
                if not acc[exp]:
                    del acc[exp]
        self._coeffs = acc

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def t_power(cls, exp: int) -> "LaurentPoly":
        return cls({exp: 1})

    def items(self) -> tuple[tuple[int, int], ...]:
        """Sorted (exponent, coefficient) pairs."""
        return tuple(sorted(self._coeffs.items()))

    def coeff(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def min_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no minimum exponent")
        return min(self._coeffs)

    def max_exp(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no maximum exponent")
        return max(self._coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self.items())

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
            if not acc[e]:
                del acc[e]
        out = LaurentPoly.zero()
        out._coeffs = acc
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
                if not acc[e]:
                    del acc[e]
        out = LaurentPoly.zero()
        out._coeffs = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by the unit t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def canonical(self) -> "LaurentPoly":
        """The unique unit multiple with minimum exponent 0 and positive
        lowest coefficient; canonical(0) = 0.  Idempotent.

        >>> str(LaurentPoly({-1: -1, -2: 1}).canonical())
        '1 - t'
        """
        if not self._coeffs:
            return self
        m = self.min_exp()
        shifted = self.shifted(-m)
        if shifted.coeff(0) < 0:
            return -shifted
        return shifted

    def is_unit(self) -> bool:
        """True for +-t^k."""
        return len(self._coeffs) == 1 and abs(next(iter(self._coeffs.values()))) == 1

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self._coeffs.values()) if self._coeffs else 0

    def value_at_one(self) -> int:
        return sum(self._coeffs.values())

    def dense_coeffs(self) -> list[int]:
        """Coefficients from min_exp to max_exp inclusive ([] for zero)."""
        if not self._coeffs:
            return []
        lo, hi = self.min_exp(), self.max_exp()
        return [self.coeff(e) for e in range(lo, hi + 1)]

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


def divide_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return q with f = q*g, or raise NotDivisible.

    Divisibility in Z[t, t^-1] reduces to divisibility in Z[t] after
    stripping the unit t^min_exp from each operand.
    """
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero()
    fm, gm = f.min_exp(), g.min_exp()
    num = f.shifted(-fm).dense_coeffs()
    den = g.shifted(-gm).dense_coeffs()
    if len(num) < len(den):
        raise NotDivisible(f"({f}) is not divisible by ({g})")
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    lead = den[-1]
    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + len(den) - 1]
        if top == 0:
            continue
        q, r = divmod(top, lead)
        if r:
            raise NotDivisible(f"({f}) is not divisible by ({g})")
        quot[i] = q
        for j, d in enumerate(den):
            rem[i + j] -= q * d
    if any(rem):
        raise NotDivisible(f"({f}) is not divisible by ({g})")
    return LaurentPoly({i + fm - gm: c for i, c in enumerate(quot)})


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    """True when g divides f in Z[t, t^-1]."""
    if g.is_zero():
        return f.is_zero()
    try:
        divide_exact(f, g)
        return True
    except NotDivisible:
        return False


_cyclotomic_cache: dict[int, LaurentPoly] = {}


def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial, the minimal polynomial of a
    primitive n-th root of unity.

    Computed by exact division of t^n - 1 by the cyclotomic polynomials of
    the proper divisors of n.  Over Z, a primitive n-th root of unity is a
    root of f exactly when cyclotomic(n) divides f.

    >>> str(cyclotomic(12))
    '1 - t^2 + t^4'
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidIndex(f"cyclotomic index must be a positive integer, got {n!r}")
    if n in _cyclotomic_cache:
        return _cyclotomic_cache[n]
    poly = LaurentPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            poly = divide_exact(poly, cyclotomic(d))
    _cyclotomic_cache[n] = poly
    return poly


def _primitive_part(f: LaurentPoly) -> LaurentPoly:
    c = f.content()
    if c <= 1:
        return f.canonical()
    return LaurentPoly({e: coef // c for e, coef in f.items()}).canonical()


def _pp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    # Primitive polynomial-remainder sequence on primitive, canonical inputs.
    while not b.is_zero():
        da = a.max_exp() - a.min_exp()
        db = b.max_exp() - b.min_exp()
        if da < db:
            a, b = b, a
            continue
        if db == 0:
            # b is a unit times a constant; primitive, so gcd is 1
            return LaurentPoly.one()
        lead = b.coeff(b.max_exp())
        scaled = a * (lead ** (da - db + 1))
        # pseudo-remainder by dense long division in Z[t]
        num = scaled.shifted(-scaled.min_exp()).dense_coeffs() if scaled else []
        den = b.shifted(-b.min_exp()).dense_coeffs()
        for i in range(len(num) - len(den), -1, -1):
            top = num[i + len(den) - 1]
            if top == 0:
                continue
            q = top // den[-1]
            assert top % den[-1] == 0
            for j, d in enumerate(den):
                num[i + j] -= q * d
        rem = LaurentPoly(dict(enumerate(num)))
        a, b = b, _primitive_part(rem)
    return a.canonical()


def laurent_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Canonical gcd of a family of Laurent polynomials.

    Computed as the gcd of the integer contents times the gcd of the
    primitive parts; the result divides every input and is canonical.
    """
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise AllZero("gcd requires at least one nonzero polynomial")
    content = 0
    for f in nonzero:
        content = math.gcd(content, f.content())
    g = _primitive_part(nonzero[0])
    for f in nonzero[1:]:
        if g == LaurentPoly.one():
            break
        g = _pp_gcd(g, _primitive_part(f))
    return (g * content).canonical()


class LaurentMatrix:
    """A rows x cols matrix of Laurent polynomials, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[LaurentPoly]):
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)
        if len(self.entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries, got {len(self.entries)}"
            )

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[LaurentPoly]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"LaurentMatrix({self.rows}x{self.cols}: {body})"


def laurent_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant over Z[t, t^-1] by fraction-free (Bareiss) elimination.

    Every division performed is exact in the ring, so no rational
    arithmetic is needed.  The empty matrix has determinant 1.
    """
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    m = [row[:] for row in rows]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if pivot_row is None:
            return LaurentPoly.zero()
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = LaurentPoly.zero()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def minors(M: LaurentMatrix, k: int) -> list[LaurentPoly]:
    """All k x k minor determinants of M, canonicalized, with zeros and
    duplicates removed, in lexicographic order of (row set, column set).
    """
    if k > min(M.rows, M.cols):
        raise SizeTooLarge(
            f"minor size {k} exceeds matrix dimensions {M.rows}x{M.cols}"
        )
    if k < 0:
        raise SizeTooLarge(f"minor size must be nonnegative, got {k}")
    if k == 0:
        return [LaurentPoly.one()]
    grid = M.row_lists()
    seen = set()
    out = []
    for row_idx in itertools.combinations(range(M.rows), k):
        for col_idx in itertools.combinations(range(M.cols), k):
            sub = [[grid[i][j] for j in col_idx] for i in row_idx]
            det = laurent_det(sub).canonical()
            if det.is_zero():
                continue
            key = det.items()
            if key not in seen:
                seen.add(key)
                out.append(det)
    return out
