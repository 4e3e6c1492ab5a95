"""Exact univariate Laurent polynomial arithmetic.

Coefficients are arbitrary-precision integers, exponents are (possibly
negative) machine integers.  Values are immutable and hashable, so they can
be memoised and compared for exact equality.  The same class doubles as the
half-power workspace: a polynomial in z with q = z**2 embeds any expression
involving q**(1/2).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

#: Trailing degree of the zero polynomial.
NEG_INFINITY = float("-inf")

TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class LaurentPolynomial:
    """Sparse exponent -> coefficient map; the empty map is zero."""

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsLike = ()):
        data: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, coeff in items:
            if coeff:
                data[exp] = data.get(exp, 0) + coeff
                if not data[exp]:
                    del data[exp]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        """The single term coeff * q**exp."""
        return cls({exp: coeff})

    def terms(self) -> tuple[tuple[int, int], ...]:
        """Nonzero (exponent, coefficient) pairs, exponents ascending."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({} if other == 0 else {0: other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data = dict(self._terms)
        for exp, coeff in other._terms.items():
            data[exp] = data.get(exp, 0) + coeff
            if not data[exp]:
                del data[exp]
        return _wrap(data)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return _wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        data: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                data[e] = data.get(e, 0) + c1 * c2
        return _wrap({e: c for e, c in data.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by the monomial q**k."""
        return _wrap({e + k: c for e, c in self._terms.items()})

    def substitute_reciprocal(self) -> "LaurentPolynomial":
        """The image under q -> q**(-1), i.e. negate every exponent."""
        return _wrap({-e: c for e, c in self._terms.items()})

    def to_half_power_domain(self) -> "LaurentPolynomial":
        """Re-read a polynomial in q as one in z with q = z**2 (exponents double)."""
        return _wrap({2 * e: c for e, c in self._terms.items()})

    def from_half_power_domain(self) -> "LaurentPolynomial":
        """Extract a polynomial in q from the z-workspace (exponents halve).

        Every exponent must be even; an odd exponent means a claimed
        integrality was violated upstream.
        """
        for e in self._terms:
            if e % 2:
                raise ValueError(f"odd exponent {e} in half-power extraction")
        return _wrap({e // 2: c for e, c in self._terms.items()})

    def evaluate(self, x) -> Fraction:
        """Exact evaluation at a rational point."""
        x = Fraction(x)
        if x == 0 and any(e < 0 for e in self._terms):
            raise ZeroDivisionError("evaluation at 0 with negative exponents")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * x**e
        return total

    def trailing_degree(self):
        """Smallest exponent with a nonzero coefficient; -inf for zero."""
        if not self._terms:
            return NEG_INFINITY
        return min(self._terms)

    def degree(self):
        if not self._terms:
            return NEG_INFINITY
        return max(self._terms)

    def to_json_dict(self) -> dict:
        """Stable JSON form: ascending exponents, decimal-string coefficients."""
        return {"terms": [{"exp": e, "coeff": str(c)} for e, c in self.terms()]}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial({dict(self.terms())!r})"


def _wrap(data: dict[int, int]) -> LaurentPolynomial:
    poly = LaurentPolynomial.__new__(LaurentPolynomial)
    object.__setattr__(poly, "_terms", data)
    return poly


def _coerce(value) -> "LaurentPolynomial":
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return _wrap({0: value} if value else {})
    return NotImplemented


#: The variable itself, for building expressions: Q**3 - 2 * Q + 1.
Q = LaurentPolynomial.monomial(1)
ZERO = LaurentPolynomial.zero()
ONE = LaurentPolynomial.one()
