"""q-rook polynomials and the rank distributions they encode.

Every polynomial comes in two independent flavours: an enumerative form
(sum the statistic over explicitly enumerated placements on a diagram) and
a recursive form (peel off the last anti-diagonal of the count sequence).
The two must agree; the test suite holds them to that.

Counting formulas, with q the field size:

    general      W_r = (q-1)^r * q^(|F|-r) * R_r(1/q)
    alternating  W_r = (q-1)^(r/2) * q^((|F|-|X|-r)/2) * A_r(q^(-1/2))
    symmetric    W_r = sum over 2t+s=r of
                       (q-1)^(t+s) * q^((|F|-t-s)/2) * S_{t,s}(q^(-1/2))

where |X| counts cells on the principal diagonal, A_r sums
q^(inv + r/2 - |X|) over alternating placements and S_{t,s} sums q^inv
over symmetric placements with t transpose pairs and s diagonal rooks.
The half-integer substitutions are carried out exactly in a z-workspace
with q = z**2; the combined exponents always come out even.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import placements, sequences
from .diagrams import FerrersDiagram
from .laurent import ONE, ZERO, LaurentPolynomial, Q

Seq = tuple[int, ...]


class QRookCache:
    """Memo tables for the sequence-level recursions.

    Keys are normalised sequences; one cache may be shared across any number
    of top-level calls, and distinct caches are fully independent.
    """

    def __init__(self):
        self.classical: dict[tuple[Seq, int], LaurentPolynomial] = {}
        self.alternating: dict[tuple[Seq, int], LaurentPolynomial] = {}
        self.symmetric: dict[tuple[Seq, int, int], LaurentPolynomial] = {}


# ---------------------------------------------------------------------------
# enumerative forms


def qrook_enumerative(diagram: FerrersDiagram, r: int) -> LaurentPolynomial:
    """Sum of q^inv over all size-r placements; q^|F| at r = 0, zero outside."""
    if r < 0:
        return ZERO
    terms: dict[int, int] = {}
    for p in placements.enumerate_placements(diagram, r):
        e = placements.inv(diagram, p)
        terms[e] = terms.get(e, 0) + 1
    return LaurentPolynomial(terms)


def qrook_alt_enumerative(diagram: FerrersDiagram, r: int) -> LaurentPolynomial:
    """Sum of q^(inv + r/2 - |X|) over alternating placements of size r."""
    if not diagram.is_symmetric():
        raise ValueError("alternating polynomials need a symmetric diagram")
    if r < 0 or r % 2 == 1:
        return ZERO
    shift = r // 2 - len(diagram.xi_cells())
    terms: dict[int, int] = {}
    for p in placements.enumerate_alternating(diagram, r):
        e = placements.inv(diagram, p) + shift
        terms[e] = terms.get(e, 0) + 1
    return LaurentPolynomial(terms)


def qrook_sym_enumerative(diagram: FerrersDiagram, t: int, s: int) -> LaurentPolynomial:
    """Sum of q^inv over symmetric placements with t pairs and s diagonal rooks."""
    if not diagram.is_symmetric():
        raise ValueError("symmetric polynomials need a symmetric diagram")
    if t < 0 or s < 0:
        return ZERO
    terms: dict[int, int] = {}
    for p in placements.enumerate_symmetric(diagram, t, s):
        e = placements.inv(diagram, p)
        terms[e] = terms.get(e, 0) + 1
    return LaurentPolynomial(terms)


# ---------------------------------------------------------------------------
# recursive forms


def _prepare(seq, symmetric: bool) -> Seq:
    if symmetric:
        return sequences.normalize(sequences.validate_symmetric_sequence(seq))
    return sequences.normalize(sequences.validate_sequence(seq))


def qrook_recursive(
    seq, r: int, cache: QRookCache | None = None
) -> LaurentPolynomial:
    """Classical polynomial from the diagonal counts alone.

    Peeling the last diagonal of (d_1, ..., d_l):

        R_r(d) = R_r(d_1..d_{l-1}) * q^{d_l}
               + sum_{j=1}^{d_l} R_{r-1}(d_2-1, ..., d_{l-1}-1, j-1) * q^{d_l-j}
    """
    s = _prepare(seq, symmetric=False)
    if cache is None:
        cache = QRookCache()
    return _rec_classical(s, r, cache)


def _rec_classical(s: Seq, r: int, cache: QRookCache) -> LaurentPolynomial:
    if r < 0 or r > max(s, default=0):
        return ZERO
    if r == 0:
        return Q ** sum(s)
    key = (s, r)
    hit = cache.classical.get(key)
    if hit is not None:
        return hit
    d_last = s[-1]
    head = sequences.normalize(s[:-1])
    total = _rec_classical(head, r, cache).shift(d_last)
    body = tuple(d - 1 for d in s[1:-1])
    for j in range(1, d_last + 1):
        reduced = sequences.normalize(body + (j - 1,))
        total = total + _rec_classical(reduced, r - 1, cache).shift(d_last - j)
    cache.classical[key] = total
    return total


def qrook_alt_recursive(
    seq, r: int, cache: QRookCache | None = None
) -> LaurentPolynomial:
    """Alternating polynomial from the diagonal counts alone.

    With a_l = d_l mod 2:

        A_r(d) = A_r(d_1..d_{l-1}) * q^{d_l - a_l}
               + sum_{j=1}^{floor(d_l/2)}
                     A_{r-2}(d_3-2, ..., d_{l-1}-2, 2j-2) * q^{d_l - 2j - a_l}

    Zero for odd or out-of-range r; the base value on the empty sequence is 1.
    """
    s = _prepare(seq, symmetric=True)
    if cache is None:
        cache = QRookCache()
    return _rec_alternating(s, r, cache)


def _rec_alternating(s: Seq, r: int, cache: QRookCache) -> LaurentPolynomial:
    if r < 0 or r % 2 == 1 or r > max(s, default=0):
        return ZERO
    if not s:
        return ONE
    key = (s, r)
    hit = cache.alternating.get(key)
    if hit is not None:
        return hit
    d_last = s[-1]
    a_last = d_last % 2
    head = sequences.normalize(s[:-1])
    total = _rec_alternating(head, r, cache).shift(d_last - a_last)
    body = tuple(d - 2 for d in s[2:-1])
    for j in range(1, d_last // 2 + 1):
        reduced = sequences.normalize(body + (2 * j - 2,))
        total = total + _rec_alternating(reduced, r - 2, cache).shift(d_last - 2 * j - a_last)
    cache.alternating[key] = total
    return total


def qrook_sym_recursive(
    seq, t: int, s: int, cache: QRookCache | None = None
) -> LaurentPolynomial:
    """Symmetric polynomial from the diagonal counts alone.

    With a_l = d_l mod 2:

        S_{t,s}(d) = S_{t,s}(d_1..d_{l-1}) * q^{d_l}
                   + a_l * S_{t,s-1}(d_2-1, ..., d_l-1)
                   + sum_{j=1}^{floor(d_l/2)}
                         S_{t-1,s}(d_3-2, ..., d_{l-1}-2, 2j-2) * q^{d_l - 2j}
    """
    d = _prepare(seq, symmetric=True)
    if cache is None:
        cache = QRookCache()
    return _rec_symmetric(d, t, s, cache)


def _rec_symmetric(d: Seq, t: int, s: int, cache: QRookCache) -> LaurentPolynomial:
    if t < 0 or s < 0 or 2 * t + s > max(d, default=0):
        return ZERO
    if not d:
        return ONE if (t, s) == (0, 0) else ZERO
    if (t, s) == (0, 0):
        return Q ** sum(d)
    key = (d, t, s)
    hit = cache.symmetric.get(key)
    if hit is not None:
        return hit
    d_last = d[-1]
    a_last = d_last % 2
    head = sequences.normalize(d[:-1])
    total = _rec_symmetric(head, t, s, cache).shift(d_last)
    if a_last:
        middle = sequences.normalize(tuple(x - 1 for x in d[1:]))
        total = total + _rec_symmetric(middle, t, s - 1, cache)
    body = tuple(x - 2 for x in d[2:-1])
    for j in range(1, d_last // 2 + 1):
        reduced = sequences.normalize(body + (2 * j - 2,))
        total = total + _rec_symmetric(reduced, t - 1, s, cache).shift(d_last - 2 * j)
    cache.symmetric[key] = total
    return total


# ---------------------------------------------------------------------------
# rank distributions


@dataclass(frozen=True)
class SymbolicRankDistribution:
    """Per-rank matrix counts as exact polynomials in the field size."""

    kind: str
    diagram: FerrersDiagram
    polynomials: tuple[LaurentPolynomial, ...] = field(default=())

    def counts_at(self, q: int) -> tuple[int, ...]:
        values = []
        for poly in self.polynomials:
            value = poly.evaluate(q)
            if value.denominator != 1:
                raise ArithmeticError(f"non-integer count {value} at q={q}")
            values.append(int(value))
        return tuple(values)

    def free_cell_count(self) -> int:
        size = self.diagram.size
        xi = len(self.diagram.xi_cells())
        if self.kind == "general":
            return size
        if self.kind == "symmetric":
            return (size + xi) // 2
        return (size - xi) // 2

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "diagram": self.diagram.to_json_dict(),
            "ranks": [
                {"rank": r, **poly.to_json_dict()}
                for r, poly in enumerate(self.polynomials)
            ],
        }


def _check_polynomial_exponents(poly: LaurentPolynomial, context: str) -> LaurentPolynomial:
    if poly.terms() and poly.trailing_degree() < 0:
        raise ArithmeticError(f"negative exponent in {context}: {poly}")
    return poly


def _general_w(size: int, r: int, rook_poly: LaurentPolynomial) -> LaurentPolynomial:
    w = (Q - 1) ** r * rook_poly.substitute_reciprocal().shift(size - r)
    return _check_polynomial_exponents(w, f"rank-{r} general count")


def _alt_w(size: int, xi: int, r: int, alt_poly: LaurentPolynomial) -> LaurentPolynomial:
    if r % 2 == 1:
        return ZERO
    z2_minus_1 = LaurentPolynomial({2: 1, 0: -1})
    w_z = (z2_minus_1 ** (r // 2)) * alt_poly.substitute_reciprocal().shift(size - xi - r)
    w = w_z.from_half_power_domain()
    return _check_polynomial_exponents(w, f"rank-{r} alternating count")


def _sym_w(
    size: int, r: int, sym_poly_at: dict[tuple[int, int], LaurentPolynomial]
) -> LaurentPolynomial:
    z2_minus_1 = LaurentPolynomial({2: 1, 0: -1})
    w_z = ZERO
    for t in range(r // 2 + 1):
        s = r - 2 * t
        poly = sym_poly_at[(t, s)]
        w_z = w_z + (z2_minus_1 ** (t + s)) * poly.substitute_reciprocal().shift(size - t - s)
    w = w_z.from_half_power_domain()
    return _check_polynomial_exponents(w, f"rank-{r} symmetric count")


def rank_distribution_general(diagram: FerrersDiagram) -> SymbolicRankDistribution:
    """Rank counts for all matrices supported on the diagram."""
    size = diagram.size
    polys = tuple(
        _general_w(size, r, qrook_enumerative(diagram, r))
        for r in range(diagram.degree() + 1)
    )
    return SymbolicRankDistribution("general", diagram, polys)


def rank_distribution_alternating(diagram: FerrersDiagram) -> SymbolicRankDistribution:
    """Rank counts for alternating matrices supported on a symmetric diagram."""
    if not diagram.is_symmetric():
        raise ValueError("alternating distribution needs a symmetric diagram")
    size = diagram.size
    xi = len(diagram.xi_cells())
    polys = tuple(
        _alt_w(size, xi, r, qrook_alt_enumerative(diagram, r))
        for r in range(diagram.degree() + 1)
    )
    return SymbolicRankDistribution("alternating", diagram, polys)


def rank_distribution_symmetric(diagram: FerrersDiagram) -> SymbolicRankDistribution:
    """Rank counts for symmetric matrices supported on a symmetric diagram."""
    if not diagram.is_symmetric():
        raise ValueError("symmetric distribution needs a symmetric diagram")
    size = diagram.size
    polys = []
    for r in range(diagram.degree() + 1):
        table = {
            (t, r - 2 * t): qrook_sym_enumerative(diagram, t, r - 2 * t)
            for t in range(r // 2 + 1)
        }
        polys.append(_sym_w(size, r, table))
    return SymbolicRankDistribution("symmetric", diagram, tuple(polys))


# sequence-level counts, used by the recurrence checks


def w_alternating(seq, r: int, cache: QRookCache | None = None) -> LaurentPolynomial:
    """Rank-r alternating matrix count of any diagram with these diagonal counts."""
    s = _prepare(seq, symmetric=True)
    if r < 0:
        return ZERO
    if r == 0:
        return ONE
    if r % 2 == 1:
        return ZERO
    size = sum(s)
    xi = sum(1 for d in s if d % 2 == 1)
    return _alt_w(size, xi, r, qrook_alt_recursive(s, r, cache))


def w_symmetric(seq, r: int, cache: QRookCache | None = None) -> LaurentPolynomial:
    """Rank-r symmetric matrix count of any diagram with these diagonal counts."""
    s = _prepare(seq, symmetric=True)
    if r < 0:
        return ZERO
    if r == 0:
        return ONE
    if cache is None:
        cache = QRookCache()
    size = sum(s)
    table = {
        (t, r - 2 * t): qrook_sym_recursive(s, t, r - 2 * t, cache)
        for t in range(r // 2 + 1)
    }
    return _sym_w(size, r, table)


# ---------------------------------------------------------------------------
# trailing degrees


def trailing_degree_closed_form(diagram: FerrersDiagram, r: int) -> int:
    """Trailing degree of the classical polynomial: sum_i max(0, d_i - r)."""
    if not 1 <= r <= diagram.degree():
        raise ValueError(f"rank {r} outside 1..{diagram.degree()}")
    return sum(max(0, d - r) for d in diagram.diagonal_sequence())


def trailing_degree_alt_closed_form(diagram: FerrersDiagram, r: int) -> int:
    """Trailing degree of the alternating polynomial for even placement size r >= 2.

    Charges each anti-diagonal by how many of its cells an alternating
    placement can delete: r cells through the transpose-pair hooks, plus the
    center cell when the diagonal has one (odd count):

        sum_i max(0, d_i - r - (d_i mod 2)).

    On diagrams whose odd-indexed counts are all odd this collapses to the
    familiar split max(0, d_{2i-1} - r - 1) + max(0, d_{2i} - r); the split
    form overcharges diagonals that have an even count at an odd index,
    since those contain no center cell to delete.
    """
    if not diagram.is_symmetric():
        raise ValueError("alternating trailing degree needs a symmetric diagram")
    if r < 2 or r % 2 == 1:
        raise ValueError("placement size must be an even integer >= 2")
    if not placements.enumerate_alternating(diagram, r):
        raise ValueError(f"no alternating placement of size {r}")
    return sum(max(0, d - r - (d % 2)) for d in diagram.diagonal_sequence())
