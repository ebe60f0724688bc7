"""
Laurent polynomials in x_0..x_{n-1} with polynomial dependence on y_0..y_{n-1}.

A value is stored as a numerator in the sympy sparse ring ZZ[x, y] together
with an integer shift vector on the x variables. The normal form pulls every
common power of x_i out of the numerator, so two values are equal exactly when
their canonical encodings are equal.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from cambrian.errors import NonLaurentResult

logger = logging.getLogger(__name__)

Encoding = tuple[tuple[tuple[tuple[int, ...], int], ...], tuple[int, ...]]


class LaurentRing:
    """The coefficient ring shared by every cluster variable of one seed pattern."""

    def __init__(self, n: int):
        self.n = n
        names = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)]
        self.ring, *self._gens = ring(",".join(names), ZZ)

    def x(self, i: int) -> "LaurentPolynomial":
        return LaurentPolynomial(self, self.ring.one, tuple(1 if k == i else 0 for k in range(self.n)))

    def y(self, j: int) -> "LaurentPolynomial":
        return LaurentPolynomial(self, self._gens[self.n + j], (0,) * self.n)

    @property
    def one(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, self.ring.one, (0,) * self.n)

    def monomial(self, x_exponents: Sequence[int], y_exponents: Sequence[int]) -> "LaurentPolynomial":
        """x^a y^b with a possibly negative and b nonnegative."""
        if any(b < 0 for b in y_exponents):
            raise NonLaurentResult(f"negative y exponent in {tuple(y_exponents)}")
        numerator = self.ring.from_dict({(0,) * self.n + tuple(y_exponents): 1})
        return LaurentPolynomial(self, numerator, tuple(x_exponents))


@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    base: LaurentRing
    numerator: PolyElement
    shift: tuple[int, ...]

    def __post_init__(self):
        numerator, shift = _normalize(self.base, self.numerator, self.shift)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "shift", shift)

    @cached_property
    def encoding(self) -> Encoding:
        """Sorted (monomial, coefficient) terms plus the x shift."""
        terms = tuple(sorted((tuple(m), int(c)) for m, c in self.numerator.items()))
        return terms, self.shift

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self) -> int:
        return hash(self.encoding)

    def __lt__(self, other: "LaurentPolynomial") -> bool:
        return self.encoding < other.encoding

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        common = tuple(min(a, b) for a, b in zip(self.shift, other.shift, strict=True))
        total = self._lift(common) + other._lift(common)
        return LaurentPolynomial(self.base, total, common)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        shift = tuple(a + b for a, b in zip(self.shift, other.shift, strict=True))
        return LaurentPolynomial(self.base, self.numerator * other.numerator, shift)

    def __pow__(self, exponent: int) -> "LaurentPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are only defined through exact_divide")
        shift = tuple(exponent * a for a in self.shift)
        return LaurentPolynomial(self.base, self.numerator**exponent, shift)

    def exact_divide(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Divide, requiring the quotient to be a Laurent polynomial again."""
        try:
            quotient = self.numerator.exquo(other.numerator)
        except ExactQuotientFailed as e:
            logger.error(f"Exchange relation does not divide: {self} / {other}")
            raise NonLaurentResult(f"{self} is not divisible by {other}") from e
        shift = tuple(a - b for a, b in zip(self.shift, other.shift, strict=True))
        return LaurentPolynomial(self.base, quotient, shift)

    def is_zero(self) -> bool:
        return not self.numerator

    def terms(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """(x exponents, y exponents, coefficient) for every term."""
        n = self.base.n
        return [
            (
                tuple(m[i] + self.shift[i] for i in range(n)),
                tuple(m[n:]),
                int(c),
            )
            for m, c in self.numerator.items()
        ]

    def multidegree(
        self, x_degrees: Sequence[Sequence[int]], y_degrees: Sequence[Sequence[int]]
    ) -> tuple[int, ...]:
        """Common degree of all terms under a Z^n grading; raises when inhomogeneous."""
        degrees = set()
        for x_exp, y_exp, _ in self.terms():
            degree = [0] * len(x_degrees[0])
            for exponent, weight in zip(x_exp, x_degrees, strict=True):
                for k, w in enumerate(weight):
                    degree[k] += exponent * w
            for exponent, weight in zip(y_exp, y_degrees, strict=True):
                for k, w in enumerate(weight):
                    degree[k] += exponent * w
            degrees.add(tuple(degree))
        if len(degrees) != 1:
            raise NonLaurentResult(f"{self} is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def _lift(self, common: tuple[int, ...]) -> PolyElement:
        offset = tuple(a - b for a, b in zip(self.shift, common, strict=True))
        return self.numerator.mul_monom(offset + (0,) * self.base.n)

    def __str__(self) -> str:
        expression = self.numerator.as_expr()
        for i, power in enumerate(self.shift):
            if power:
                expression = expression * self.base.ring.symbols[i] ** power
        return str(expression)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"


def _normalize(
    base: LaurentRing, numerator: PolyElement, shift: tuple[int, ...]
) -> tuple[PolyElement, tuple[int, ...]]:
    if not numerator:
        return base.ring.zero, (0,) * base.n
    n = base.n
    monomials = list(numerator.keys())
    lowest = [min(m[i] for m in monomials) for i in range(n)]
    if any(lowest):
        numerator = base.ring.from_dict(
            {
                tuple(m[i] - lowest[i] for i in range(n)) + tuple(m[n:]): c
                for m, c in numerator.items()
            }
        )
        shift = tuple(s + low for s, low in zip(shift, lowest, strict=True))
    return numerator, tuple(shift)
