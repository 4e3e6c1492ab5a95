"""Machine checks of the structural identities over exhaustively enumerated boards.

Each check walks a finite domain of diagrams or sequences, tests one
identity on every instance, and returns a structured report listing any
counterexamples.  Symbolic polynomial equality is the primary comparison;
where a finite-field oracle is consulted it forms a second, independent
layer on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import oracle, placements, qrook
from .diagrams import (
    enumerate_diagrams,
    enumerate_symmetric_diagrams,
    equivalence_classes,
)
from .laurent import ZERO, LaurentPolynomial, Q


@dataclass(frozen=True)
class Failure:
    input: str
    expected: str
    actual: str

    def to_json_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected, "actual": self.actual}


@dataclass
class VerificationReport:
    check: str
    domain: str
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, label: str, expected, actual):
        self.instances += 1
        if expected != actual:
            self.failures.append(Failure(label, str(expected), str(actual)))

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "domain": self.domain,
            "instances": self.instances,
            "passed": self.passed,
            "failures": [f.to_json_dict() for f in self.failures],
        }


def check_corollary_equivalences(
    max_rows: int = 4, max_cols: int = 4, field_orders: tuple[int, ...] = (2, 3)
) -> VerificationReport:
    """Six equivalent ways of comparing two diagrams must induce one partition.

    For every pair in the board: equal diagonal counts <=> equal rank-1
    polynomial <=> equal polynomials at every size <=> equal rank-1 matrix
    count at each field order <=> equal full count distributions <=> equal
    classical rook numbers (polynomial values at q = 1).
    """
    report = VerificationReport(
        "equivalences",
        f"all diagram pairs in the {max_rows}x{max_cols} board, fields {field_orders}",
    )
    diagrams = enumerate_diagrams(max_rows, max_cols)
    fingerprints = []
    for d in diagrams:
        dist = qrook.rank_distribution_general(d)
        all_r = tuple(qrook.qrook_enumerative(d, r) for r in range(d.degree() + 1))
        fingerprints.append(
            {
                "sequence": d.diagonal_sequence(),
                "r1": qrook.qrook_enumerative(d, 1),
                "all_r": all_r,
                "w1": tuple(
                    dist.counts_at(q)[1] if d.degree() >= 1 else 0 for q in field_orders
                ),
                "dist": tuple(dist.counts_at(q) for q in field_orders),
                "rook_numbers": tuple(int(p.evaluate(1)) for p in all_r),
            }
        )
    keys = ("sequence", "r1", "all_r", "w1", "dist", "rook_numbers")
    for a in range(len(diagrams)):
        for b in range(a + 1, len(diagrams)):
            verdicts = {k: fingerprints[a][k] == fingerprints[b][k] for k in keys}
            label = f"{diagrams[a]} vs {diagrams[b]}"
            report.record(label, "all six criteria agree", _agreement(verdicts))
    return report


def _agreement(verdicts: dict[str, bool]) -> str:
    if len(set(verdicts.values())) == 1:
        return "all six criteria agree"
    return "split: " + ", ".join(f"{k}={v}" for k, v in verdicts.items())


def check_theorem_altsym(
    max_size: int = 5,
    field_orders: tuple[int, ...] = (2, 3),
    budget: int | None = None,
) -> VerificationReport:
    """q^|X| times the top alternating count equals the top symmetric count.

    Holds at r = degree when the degree is even.  Checked symbolically for
    every symmetric diagram in the board and numerically against the
    exhaustive oracle at each field order that fits the budget.
    """
    report = VerificationReport(
        "altsym",
        f"symmetric diagrams in the {max_size}x{max_size} board, fields {field_orders}",
    )
    cache = qrook.QRookCache()
    fields = {q: oracle.make_field(q) for q in field_orders}
    for d in enumerate_symmetric_diagrams(max_size):
        r = d.degree()
        if r % 2 == 1:
            continue
        seq = d.diagonal_sequence()
        xi = sum(1 for x in seq if x % 2 == 1)
        lhs = qrook.w_alternating(seq, r, cache).shift(xi)
        rhs = qrook.w_symmetric(seq, r, cache)
        report.record(f"{d} symbolic at r={r}", str(rhs), str(lhs))
        for q, fq in fields.items():
            try:
                alt = oracle.brute_force_distribution(fq, d, "alternating", budget)
                sym = oracle.brute_force_distribution(fq, d, "symmetric", budget)
            except oracle.BudgetExceededError:
                continue
            report.record(
                f"{d} oracle at r={r}, q={q}",
                sym.counts[r],
                q**xi * alt.counts[r],
            )
    return report


def check_w_recurrences(
    max_size: int = 5, field_orders: tuple[int, ...] = (2, 3)
) -> VerificationReport:
    """Last-diagonal recurrences for the alternating and symmetric counts.

    For a symmetric sequence (d_1..d_l) with a_l = d_l mod 2 and ranks
    r >= 2 the following hold as polynomial identities in the field size:

        alt:  W_r(d) = W_r(d_1..d_{l-1})
                     + (q-1) q^{l-2} sum_j W_{r-2}(d_3-2,...,d_{l-1}-2, 2j-2)
        sym:  W_r(d) = W_r(d_1..d_{l-1})
                     + a_l (q-1) q^{(l-1)/2} W_{r-1}(d_2-1,...,d_l-1)
                     + (q-1) q^{l-1} sum_j W_{r-2}(d_3-2,...,d_{l-1}-2, 2j-2)
        odd d_l: W_r(d) = W_r(d_1,...,d_l - 1)
                        + (q-1) q^{(l-1)/2} W_{r-1}(d_2-1,...,d_l-1)

    with j running over 1..floor(d_l/2).  Each identity is also evaluated
    at the given field orders as an extra numeric layer.
    """
    report = VerificationReport(
        "wrecurrences",
        f"symmetric sequences realized in the {max_size}x{max_size} board, ranks >= 2",
    )
    cache = qrook.QRookCache()
    seqs = sorted(
        {d.diagonal_sequence() for d in enumerate_symmetric_diagrams(max_size)}
    )
    for seq in seqs:
        if not seq:
            report.record("() alt rank 2", str(ZERO), str(qrook.w_alternating((), 2, cache)))
            report.record("() sym rank 2", str(ZERO), str(qrook.w_symmetric((), 2, cache)))
            continue
        ell = len(seq)
        d_last = seq[-1]
        a_last = d_last % 2
        head = seq[:-1]
        middle = tuple(x - 1 for x in seq[1:])
        reduced = [
            tuple(x - 2 for x in seq[2:-1]) + (2 * j - 2,)
            for j in range(1, d_last // 2 + 1)
        ]
        for r in range(2, max(seq) + 1):
            label = f"{seq} r={r}"
            lhs_alt = qrook.w_alternating(seq, r, cache)
            if r % 2 == 1:
                report.record(f"{label} alt (odd)", str(ZERO), str(lhs_alt))
            else:
                tail = ZERO
                for red in reduced:
                    tail = tail + qrook.w_alternating(red, r - 2, cache)
                rhs_alt = qrook.w_alternating(head, r, cache) + (Q - 1) * tail.shift(ell - 2)
                _record_poly(report, f"{label} alt", rhs_alt, lhs_alt, field_orders)

            lhs_sym = qrook.w_symmetric(seq, r, cache)
            tail = ZERO
            for red in reduced:
                tail = tail + qrook.w_symmetric(red, r - 2, cache)
            rhs_sym = qrook.w_symmetric(head, r, cache) + (Q - 1) * tail.shift(ell - 1)
            if a_last:
                rhs_sym = rhs_sym + (Q - 1) * qrook.w_symmetric(middle, r - 1, cache).shift(
                    (ell - 1) // 2
                )
            _record_poly(report, f"{label} sym", rhs_sym, lhs_sym, field_orders)

            if a_last:
                rhs_odd = qrook.w_symmetric(head + (d_last - 1,), r, cache) + (
                    Q - 1
                ) * qrook.w_symmetric(middle, r - 1, cache).shift((ell - 1) // 2)
                _record_poly(report, f"{label} sym (odd tail)", rhs_odd, lhs_sym, field_orders)
    return report


def _record_poly(
    report: VerificationReport,
    label: str,
    expected: LaurentPolynomial,
    actual: LaurentPolynomial,
    field_orders: tuple[int, ...],
):
    report.record(label, str(expected), str(actual))
    for q in field_orders:
        report.record(f"{label} at q={q}", expected.evaluate(q), actual.evaluate(q))


def check_bijection_histograms(max_rows: int = 5, max_cols: int = 5) -> VerificationReport:
    """Within a diagonal-equivalence class all statistic histograms coincide.

    Classical histograms are compared for every placement size; on classes
    with several symmetric members the alternating and symmetric variants
    are compared as well.
    """
    report = VerificationReport(
        "histograms", f"equivalence classes of the {max_rows}x{max_cols} board"
    )
    classes = equivalence_classes(enumerate_diagrams(max_rows, max_cols))
    for seq, members in classes.items():
        if len(members) < 2:
            continue
        degree = max(seq, default=0)
        reference = members[0]
        for r in range(degree + 1):
            expected = placements.inv_histogram(reference, r)
            for other in members[1:]:
                report.record(
                    f"class {seq}: {reference} vs {other}, r={r}",
                    expected,
                    placements.inv_histogram(other, r),
                )
        symmetric_members = [d for d in members if d.is_symmetric()]
        if len(symmetric_members) >= 2:
            ref = symmetric_members[0]
            for other in symmetric_members[1:]:
                for r in range(0, degree + 1, 2):
                    report.record(
                        f"class {seq}: {ref} vs {other}, alt r={r}",
                        placements.inv_histogram_alternating(ref, r),
                        placements.inv_histogram_alternating(other, r),
                    )
                for t in range(degree // 2 + 1):
                    for s in range(degree - 2 * t + 1):
                        report.record(
                            f"class {seq}: {ref} vs {other}, sym t={t} s={s}",
                            placements.inv_histogram_symmetric(ref, t, s),
                            placements.inv_histogram_symmetric(other, t, s),
                        )
    return report


#: CLI-facing registry: name -> callable taking (rows, cols, field_orders).
ALL_CHECKS = {
    "equivalences": lambda rows, cols, fields: check_corollary_equivalences(rows, cols, fields),
    "altsym": lambda rows, cols, fields: check_theorem_altsym(min(rows, cols), fields),
    "wrecurrences": lambda rows, cols, fields: check_w_recurrences(min(rows, cols), fields),
    "histograms": lambda rows, cols, fields: check_bijection_histograms(rows, cols),
}
