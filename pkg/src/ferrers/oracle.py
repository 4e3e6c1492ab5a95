"""Independent ground truth: exhaustive matrix enumeration over small fields.

Nothing in here knows about rook polynomials.  A distribution is produced
by literally walking every assignment of field elements to the free cells
of a diagram with a mixed-radix counter and computing each matrix rank by
Gaussian elimination over table-driven field arithmetic.  The inner loop is
JIT-compiled when numba is available (a pure-Python twin of the same loop
is kept for environments without it and for cross-checking the kernel).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

from .diagrams import Cell, FerrersDiagram

#: Default cap on the number of enumerated matrices per call.
DEFAULT_BUDGET = 10**8

KINDS = ("general", "symmetric", "alternating")

#: Fixed modulus polynomials for the supported prime-power orders, as
#: coefficient tuples (constant first): x^2+x+1 over GF(2), x^3+x+1 over
#: GF(2), x^2+1 over GF(3).
_MODULI = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (1, 0, 1)),
}


class BudgetExceededError(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def resolve_budget(budget: int | None = None) -> int:
    """Explicit budget, or the QROOK_BUDGET environment override, or the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("QROOK_BUDGET")
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FiniteField:
    """A small finite field given by complete operation tables.

    Elements are the indices 0..order-1; 0 and 1 are the additive and
    multiplicative identities.  For prime order the tables are plain modular
    arithmetic; for orders 4, 8 and 9 the index is read base-p as the
    coefficient vector of a polynomial reduced by a fixed modulus.
    """

    order: int
    characteristic: int
    add_table: np.ndarray
    mul_table: np.ndarray
    neg_table: np.ndarray
    inv_table: np.ndarray

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def __repr__(self) -> str:
        return f"FiniteField(order={self.order})"


def _polynomial_tables(p: int, modulus: tuple[int, ...], q: int):
    """Addition/multiplication tables for GF(p)[x] modulo a fixed polynomial."""
    deg = len(modulus) - 1

    def digits(a: int) -> list[int]:
        out = []
        for _ in range(deg):
            out.append(a % p)
            a //= p
        return out

    def undigits(v: list[int]) -> int:
        return sum(c * p**k for k, c in enumerate(v))

    add = np.zeros((q, q), dtype=np.uint8)
    mul = np.zeros((q, q), dtype=np.uint8)
    for a in range(q):
        va = digits(a)
        for b in range(q):
            vb = digits(b)
            add[a, b] = undigits([(x + y) % p for x, y in zip(va, vb)])
            prod = [0] * (2 * deg - 1)
            for i, x in enumerate(va):
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % p
            # reduce by the modulus, leading coefficient is 1
            for k in range(len(prod) - 1, deg - 1, -1):
                c = prod[k]
                if c:
                    prod[k] = 0
                    for t in range(deg + 1):
                        prod[k - deg + t] = (prod[k - deg + t] - c * modulus[t]) % p
            mul[a, b] = undigits(prod[:deg])
    return add, mul


def _check_field_axioms(q: int, add: np.ndarray, mul: np.ndarray):
    elements = range(q)
    for a in elements:
        if add[a, 0] != a or mul[a, 1] != a or mul[a, 0] != 0:
            raise AssertionError("identity axiom failed")
        if a and not any(mul[a, b] == 1 for b in elements):
            raise AssertionError("missing multiplicative inverse")
        if not any(add[a, b] == 0 for b in elements):
            raise AssertionError("missing additive inverse")
    for a in elements:
        for b in elements:
            if add[a, b] != add[b, a] or mul[a, b] != mul[b, a]:
                raise AssertionError("commutativity failed")
            for c in elements:
                if add[add[a, b], c] != add[a, add[b, c]]:
                    raise AssertionError("additive associativity failed")
                if mul[mul[a, b], c] != mul[a, mul[b, c]]:
                    raise AssertionError("multiplicative associativity failed")
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    raise AssertionError("distributivity failed")


def make_field(q: int) -> FiniteField:
    """Build and verify the field with q elements (q prime, or 4, 8, 9)."""
    if _is_prime(q):
        p = q
        idx = np.arange(q, dtype=np.int64)
        add = ((idx[:, None] + idx[None, :]) % q).astype(np.uint8)
        mul = ((idx[:, None] * idx[None, :]) % q).astype(np.uint8)
    elif q in _MODULI:
        p, modulus = _MODULI[q]
        add, mul = _polynomial_tables(p, modulus, q)
    else:
        raise ValueError(f"unsupported field order {q} (prime or one of 4, 8, 9)")
    _check_field_axioms(q, add, mul)
    neg = np.zeros(q, dtype=np.uint8)
    inv = np.zeros(q, dtype=np.uint8)
    for a in range(q):
        neg[a] = next(b for b in range(q) if add[a, b] == 0)
        if a:
            inv[a] = next(b for b in range(1, q) if mul[a, b] == 1)
    add.setflags(write=False)
    mul.setflags(write=False)
    neg.setflags(write=False)
    inv.setflags(write=False)
    return FiniteField(q, p, add, mul, neg, inv)


@dataclass(frozen=True)
class FieldMatrix:
    """A dense matrix of field-element indices."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise ValueError("entry grid does not match the declared dimensions")


def rank(field: FiniteField, matrix: FieldMatrix) -> int:
    """Row-echelon rank by Gaussian elimination over the field tables."""
    n, m = matrix.rows, matrix.cols
    if any(not 0 <= e < field.order for row in matrix.entries for e in row):
        raise ValueError(f"matrix entries must be element indices below {field.order}")
    work = [list(row) for row in matrix.entries]
    rk = 0
    for col in range(m):
        pivot = next((r for r in range(rk, n) if work[r][col]), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        pivot_inv = field.inv(work[rk][col])
        for r in range(rk + 1, n):
            f = work[r][col]
            if f:
                factor = field.mul(f, pivot_inv)
                for c in range(col, m):
                    work[r][c] = field.add(
                        work[r][c], field.neg(field.mul(factor, work[rk][c]))
                    )
        rk += 1
        if rk == n:
            break
    return rk


@dataclass(frozen=True)
class RankDistribution:
    """Exact matrix counts per rank from an exhaustive enumeration."""

    q: int
    kind: str
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json_dict(self) -> dict:
        return {"q": self.q, "kind": self.kind, "counts": [str(c) for c in self.counts]}


def free_cells(diagram: FerrersDiagram, kind: str) -> list[Cell]:
    """Cells carrying an independent entry for the given matrix kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "general":
        return diagram.cells()
    if not diagram.is_symmetric():
        raise ValueError(f"{kind} matrices need a symmetric diagram")
    if kind == "symmetric":
        return [(i, j) for (i, j) in diagram.cells() if i <= j]
    return [(i, j) for (i, j) in diagram.cells() if i < j]


def _tally_loop(q, n, m, num_digits, ops_digit, ops_row, ops_col, ops_negate,
                add_t, mul_t, neg_t, inv_t, counts):
    """Mixed-radix walk over all q**num_digits assignments, tallying ranks.

    Written in the numba subset of Python; the same source runs uncompiled
    as the fallback implementation.
    """
    digits = np.zeros(num_digits, dtype=np.int64)
    M = np.zeros((n, m), dtype=np.uint8)
    R = np.zeros((n, m), dtype=np.uint8)
    total = 1
    for _ in range(num_digits):
        total *= q
    for _ in range(total):
        for k in range(ops_digit.shape[0]):
            value = digits[ops_digit[k]]
            if ops_negate[k]:
                M[ops_row[k], ops_col[k]] = neg_t[value]
            else:
                M[ops_row[k], ops_col[k]] = value
        for i in range(n):
            for j in range(m):
                R[i, j] = M[i, j]
        rk = 0
        for col in range(m):
            pivot = -1
            for r in range(rk, n):
                if R[r, col] != 0:
                    pivot = r
                    break
            if pivot < 0:
                continue
            if pivot != rk:
                for c in range(col, m):
                    tmp = R[rk, c]
                    R[rk, c] = R[pivot, c]
                    R[pivot, c] = tmp
            pivot_inv = inv_t[R[rk, col]]
            for r in range(rk + 1, n):
                f = R[r, col]
                if f != 0:
                    factor = mul_t[f, pivot_inv]
                    for c in range(col, m):
                        R[r, c] = add_t[R[r, c], neg_t[mul_t[factor, R[rk, c]]]]
            rk += 1
            if rk == n:
                break
        counts[rk] += 1
        k = num_digits - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] == q:
                digits[k] = 0
                k -= 1
            else:
                break


if HAVE_NUMBA:
    _tally_compiled = njit(cache=True)(_tally_loop)
else:  # pragma: no cover
    _tally_compiled = _tally_loop


def brute_force_distribution(
    field: FiniteField,
    diagram: FerrersDiagram,
    kind: str,
    budget: int | None = None,
    compiled: bool = True,
) -> RankDistribution:
    """Exact rank tallies over every matrix of the given kind supported on the diagram."""
    free = free_cells(diagram, kind)
    limit = resolve_budget(budget)
    total = field.order ** len(free)
    if total > limit:
        raise BudgetExceededError(
            f"{total} matrices exceed the enumeration budget of {limit}"
        )
    if kind == "general":
        n, m = diagram.num_rows, diagram.num_columns
    else:
        n = m = diagram.num_columns
    if not free:
        # Single all-zero matrix; e.g. the alternating kind on a diagram
        # whose only cells sit on the principal diagonal.
        counts = [1] + [0] * diagram.degree()
        return RankDistribution(field.order, kind, tuple(counts))

    ops: list[tuple[int, int, int, int]] = []  # digit index, row, col, negate flag
    for k, (i, j) in enumerate(free):
        ops.append((k, i - 1, j - 1, 0))
        if kind == "symmetric" and i != j:
            ops.append((k, j - 1, i - 1, 0))
        elif kind == "alternating":
            ops.append((k, j - 1, i - 1, 1))
    ops_digit = np.array([o[0] for o in ops], dtype=np.int64)
    ops_row = np.array([o[1] for o in ops], dtype=np.int64)
    ops_col = np.array([o[2] for o in ops], dtype=np.int64)
    ops_negate = np.array([o[3] for o in ops], dtype=np.uint8)
    tallies = np.zeros(min(n, m) + 1, dtype=np.int64)
    loop = _tally_compiled if compiled else _tally_loop
    loop(
        field.order, n, m, len(free),
        ops_digit, ops_row, ops_col, ops_negate,
        field.add_table, field.mul_table, field.neg_table, field.inv_table,
        tallies,
    )
    degree = diagram.degree()
    if any(tallies[degree + 1 :]):
        raise RuntimeError("observed a rank above the diagram degree")
    return RankDistribution(field.order, kind, tuple(int(c) for c in tallies[: degree + 1]))
