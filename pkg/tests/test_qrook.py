import pytest

from ferrers.diagrams import enumerate_diagrams, enumerate_symmetric_diagrams, parse_diagram
from ferrers.laurent import ONE, ZERO, Q
from ferrers.placements import inv
from ferrers.qrook import (
    QRookCache,
    qrook_alt_enumerative,
    qrook_alt_recursive,
    qrook_enumerative,
    qrook_recursive,
    qrook_sym_enumerative,
    qrook_sym_recursive,
    rank_distribution_alternating,
    rank_distribution_general,
    rank_distribution_symmetric,
    trailing_degree_alt_closed_form,
    trailing_degree_closed_form,
    w_alternating,
    w_symmetric,
)

B22 = parse_diagram("2,2")
F5332 = parse_diagram("4,3,3,2,1")


def test_enumerative_goldens():
    assert qrook_enumerative(B22, 2) == Q + 1
    assert qrook_enumerative(B22, 1) == Q**3 + 2 * Q**2 + Q
    assert qrook_enumerative(B22, 0) == Q**4
    assert qrook_enumerative(B22, 3) == ZERO
    assert qrook_enumerative(B22, -1) == ZERO


def test_rank_one_closed_form():
    # R_1 = sum_i d_i q^(|F| - i)
    for d in enumerate_diagrams(4, 4):
        expected = sum(
            (Q ** (d.size - i)) * count
            for i, count in enumerate(d.diagonal_sequence(), start=1)
        )
        expected = expected if expected != 0 else ZERO
        assert qrook_enumerative(d, 1) == expected


def test_recursive_golden():
    assert qrook_recursive((1, 2, 1), 2) == Q + 1
    assert qrook_recursive((1, 2, 1), 3) == ZERO
    assert qrook_recursive((), 0) == ONE
    assert qrook_recursive((0, 1, 2), 1) == qrook_recursive((1, 2), 1)
    with pytest.raises(ValueError):
        qrook_recursive((2, 1), 1)


def test_recursive_equals_enumerative_on_equivalence_class():
    cache = QRookCache()
    members = [parse_diagram("5,2,2,1,1"), parse_diagram("4,4,3"), parse_diagram("3,3,2,2,1")]
    for r in range(4):
        via_seq = qrook_recursive((1, 2, 3, 3, 2), r, cache)
        for m in members:
            assert qrook_enumerative(m, r) == via_seq


def test_recursion_matches_enumeration_small_board():
    cache = QRookCache()
    for d in enumerate_diagrams(4, 4):
        seq = d.diagonal_sequence()
        for r in range(d.degree() + 2):
            assert qrook_recursive(seq, r, cache) == qrook_enumerative(d, r)


def test_alternating_goldens():
    assert qrook_alt_enumerative(B22, 2) == ONE
    assert qrook_alt_enumerative(B22, 1) == ZERO
    assert qrook_alt_enumerative(B22, 0) == Q**2
    assert qrook_alt_recursive((1, 2, 1), 2) == ONE
    assert qrook_alt_recursive((1, 2, 1), 3) == ZERO
    with pytest.raises(ValueError):
        qrook_alt_enumerative(parse_diagram("3,1"), 2)


def test_symmetric_goldens():
    assert qrook_sym_enumerative(parse_diagram("1"), 0, 1) == ONE
    assert qrook_sym_enumerative(B22, 1, 0) == Q
    assert qrook_sym_recursive((1, 2, 1), 1, 0) == Q
    assert qrook_sym_recursive((1, 2, 1), 1, 2) == ZERO
    assert qrook_sym_recursive((1, 2), 0, 1) == Q**2


def test_alt_sym_recursions_match_enumeration_small_board():
    cache = QRookCache()
    for d in enumerate_symmetric_diagrams(4):
        seq = d.diagonal_sequence()
        for r in range(d.degree() + 2):
            assert qrook_alt_recursive(seq, r, cache) == qrook_alt_enumerative(d, r)
        for t in range(d.degree() // 2 + 1):
            for s in range(d.degree() - 2 * t + 2):
                assert qrook_sym_recursive(seq, t, s, cache) == qrook_sym_enumerative(d, t, s)


def test_sym_with_no_diagonal_rooks_is_shifted_alternating():
    # S_{t,0} = q^(|X| - t) * A_{2t}
    for d in enumerate_symmetric_diagrams(5):
        xi = len(d.xi_cells())
        for t in range(d.degree() // 2 + 1):
            assert qrook_sym_enumerative(d, t, 0) == qrook_alt_enumerative(d, 2 * t).shift(xi - t)


def test_class_members_share_all_polynomials():
    classes = {}
    for d in enumerate_diagrams(4, 4):
        classes.setdefault(d.diagonal_sequence(), []).append(d)
    for seq, members in classes.items():
        for r in range(max(seq, default=0) + 1):
            polys = {qrook_enumerative(m, r) for m in members}
            assert len(polys) == 1


def test_distinct_sequences_have_distinct_rank_one_polynomials():
    seen = {}
    for d in enumerate_diagrams(5, 5):
        key = qrook_enumerative(d, 1)
        seq = d.diagonal_sequence()
        assert seen.setdefault(key, seq) == seq


def test_rank_distribution_general_goldens():
    dist = rank_distribution_general(parse_diagram("1"))
    assert dist.polynomials[0] == ONE
    assert dist.polynomials[1] == Q - 1

    dist = rank_distribution_general(B22)
    assert dist.counts_at(2) == (1, 9, 6)

    dist = rank_distribution_general(F5332)
    assert sum(dist.counts_at(2)) == 2**13


def test_rank_distribution_symmetric_goldens():
    dist = rank_distribution_symmetric(parse_diagram("2,1"))
    assert dist.polynomials[2] == Q * (Q - 1)
    assert rank_distribution_symmetric(parse_diagram("1")).polynomials[1] == Q - 1
    assert sum(rank_distribution_symmetric(parse_diagram("3,3,3")).counts_at(2)) == 2**6


def test_rank_distribution_alternating_goldens():
    dist = rank_distribution_alternating(B22)
    assert dist.polynomials[2] == Q - 1
    assert dist.polynomials[0] == ONE
    assert dist.polynomials[1] == ZERO


def test_w_sequence_level_goldens():
    assert w_symmetric((1, 2), 2) == Q * (Q - 1)
    assert w_alternating((1, 2, 1), 2) == Q - 1
    assert w_alternating((1, 2, 1), 2) == w_symmetric((1,), 1)
    assert w_alternating((1,), 2) == ZERO == w_symmetric((), 1)


def test_distribution_totals():
    # the counts over all ranks must exhaust the ambient space
    for d in enumerate_diagrams(3, 3):
        dist = rank_distribution_general(d)
        for q in (2, 3, 4, 5):
            assert sum(dist.counts_at(q)) == q**d.size
    for d in enumerate_symmetric_diagrams(4):
        xi = len(d.xi_cells())
        sym = rank_distribution_symmetric(d)
        alt = rank_distribution_alternating(d)
        for q in (2, 3, 4, 5):
            assert sum(sym.counts_at(q)) == q ** ((d.size + xi) // 2)
            assert sum(alt.counts_at(q)) == q ** ((d.size - xi) // 2)


def test_distribution_polynomials_have_nonnegative_exponents():
    for d in enumerate_diagrams(4, 4):
        for poly in rank_distribution_general(d).polynomials:
            assert poly.is_zero() or poly.trailing_degree() >= 0
    for d in enumerate_symmetric_diagrams(5):
        for dist in (rank_distribution_symmetric(d), rank_distribution_alternating(d)):
            for poly in dist.polynomials:
                assert poly.is_zero() or poly.trailing_degree() >= 0


def test_trailing_degree_goldens():
    assert trailing_degree_closed_form(B22, 1) == 1
    assert trailing_degree_closed_form(B22, 2) == 0
    assert trailing_degree_closed_form(F5332, 4) == 0
    with pytest.raises(ValueError):
        trailing_degree_closed_form(B22, 3)
    with pytest.raises(ValueError):
        trailing_degree_closed_form(B22, 0)


def test_trailing_degree_matches_polynomials():
    for d in enumerate_diagrams(4, 4):
        for r in range(1, d.degree() + 1):
            poly = qrook_enumerative(d, r)
            assert trailing_degree_closed_form(d, r) == poly.trailing_degree()


def test_alt_trailing_degree():
    assert trailing_degree_alt_closed_form(B22, 2) == 0
    assert trailing_degree_alt_closed_form(parse_diagram("3,3,3"), 2) == 0
    with pytest.raises(ValueError):
        trailing_degree_alt_closed_form(B22, 1)
    with pytest.raises(ValueError):
        trailing_degree_alt_closed_form(B22, 0)
    with pytest.raises(ValueError):
        trailing_degree_alt_closed_form(B22, 4)  # no alternating placement that large


def test_alt_trailing_degree_matches_polynomials():
    for d in enumerate_symmetric_diagrams(5):
        for r in range(2, d.degree() + 1, 2):
            poly = qrook_alt_enumerative(d, r)
            if poly.is_zero():
                continue
            assert trailing_degree_alt_closed_form(d, r) == poly.trailing_degree()


def test_canonical_trailing_placement():
    # On a canonical-form diagram, rooks on the rightmost cell of each of
    # the r topmost rows (when that is a valid placement) attain the
    # trailing degree.
    for d in enumerate_diagrams(5, 5):
        if d.canonical_form() != d:
            continue
        rows = d.row_lengths()
        for r in range(1, d.degree() + 1):
            if r > len(rows):
                continue
            placement = [(i, rows[i - 1]) for i in range(1, r + 1)]
            if len({c for _, c in placement}) < r:
                continue  # two rows end in the same column: no such placement
            assert inv(d, placement) == trailing_degree_closed_form(d, r)


def test_alternating_polynomials_stay_laurent_but_report_negatives():
    # The shifted exponent inv + r/2 - |X| is not obviously non-negative;
    # record whether a negative power ever shows up at this scale.
    negatives = []
    for d in enumerate_symmetric_diagrams(5):
        for r in range(0, d.degree() + 1, 2):
            poly = qrook_alt_enumerative(d, r)
            if not poly.is_zero() and poly.trailing_degree() < 0:
                negatives.append((d, r, poly.trailing_degree()))
    print(f"alternating polynomials with negative exponents in 5x5: {negatives or 'none'}")


def test_value_at_one_counts_placements():
    # classical rook numbers are the polynomial values at q = 1
    from ferrers.placements import enumerate_placements

    for d in enumerate_diagrams(4, 4):
        for r in range(d.degree() + 1):
            count = len(enumerate_placements(d, r))
            assert qrook_enumerative(d, r).evaluate(1) == count


def test_cache_is_shared_and_consistent():
    cache = QRookCache()
    first = qrook_recursive((1, 2, 3, 3, 2), 3, cache)
    assert cache.classical
    assert qrook_recursive((1, 2, 3, 3, 2), 3, cache) == first
    assert qrook_recursive((1, 2, 3, 3, 2), 3) == first
