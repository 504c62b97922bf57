import itertools

import numpy as np
import pytest

from zprs.additive import AdditiveCode
from zprs.errors import GcdViolation, NotDualContaining, TooManyFactors, ZprsError
from zprs.gray import GrayMap
from zprs.linear import LinearCode
from zprs.polynomials import Poly, factor_xn_minus_lambda
from zprs.quantum import (FactorAssignment, QuantumParams, code_from_table_generators, css,
                          cyclic_code_from_assignment, is_dual_containing,
                          reciprocal_dual, search_dual_containing,
                          separable_rs_dual_containing)
from zprs.words import BlockProfile


def assignment(p, s, slots):
    factors = factor_xn_minus_lambda(p, s, 1)
    return FactorAssignment.from_slots(
        p, s,
        [f for f, k in zip(factors, slots) if k == 0],
        [f for f, k in zip(factors, slots) if k == 1],
        [f for f, k in zip(factors, slots) if k == 2])


def test_assignment_validation():
    with pytest.raises(GcdViolation):
        FactorAssignment.from_slots(2, 4, [], [], [])
    with pytest.raises(ZprsError):
        FactorAssignment.from_slots(2, 3, [[1, 1]], [], [])   # product != x^3 - 1


def test_extreme_assignments():
    factors = factor_xn_minus_lambda(2, 3, 1)
    full = FactorAssignment.from_slots(2, 3, factors, [], [])
    assert cyclic_code_from_assignment(full).rank == 6        # all of R^3
    zero = FactorAssignment.from_slots(2, 3, [], [], factors)
    assert cyclic_code_from_assignment(zero).rank == 0
    umult = FactorAssignment.from_slots(2, 3, [], factors, [])
    assert cyclic_code_from_assignment(umult).rank == 3       # u R^3


def test_cardinality_matches_crt_count_exhaustive():
    # rank = 2 deg F0 + deg F1 over every assignment, p in {2, 3}, s <= 7
    for p, s_values in ((2, (1, 3, 5, 7)), (3, (1, 2, 4, 5, 7))):
        for s in s_values:
            factors = factor_xn_minus_lambda(p, s, 1)
            for slots in itertools.product(range(3), repeat=len(factors)):
                fa = assignment(p, s, slots)
                code = cyclic_code_from_assignment(fa)
                d0, d1, _ = fa.slot_degrees()
                assert code.rank == 2 * d0 + d1
                assert code.is_constacyclic(1, 1, 1)


def test_section6_example():
    fa = assignment(17, 8, (0, 0, 0, 0, 1, 1, 2, 0))
    # slots by sorted roots -x: factors are x+1,x+2,x+4,x+8,x+9,x+13,x+15,x+16
    assert fa.hat(0) == Poly.make([4, 5, 3, 1], 17)
    assert fa.hat(1) == Poly.make([9, 14, 14, 8, 10, 12, 1], 17)
    code = cyclic_code_from_assignment(fa)
    assert code.rank == 12
    image = GrayMap(17).image(code)
    assert (image.n, image.k) == (16, 12)
    assert is_dual_containing(image)
    params = css(image)
    assert (params.n, params.k, params.d, params.p) == (16, 8, 4, 17)
    assert str(params) == "[[16,8,4]]_17"


def test_reciprocal_dual_oracle_agreement():
    for p, s, slots in ((17, 8, (0, 0, 0, 0, 1, 1, 2, 0)),
                        (2, 7, (0, 1, 2)),
                        (5, 8, (0, 0, 1, 2, 0, 1)),
                        (13, 6, (0, 1, 0, 2, 1, 0))):
        fa = assignment(p, s, slots)
        result = reciprocal_dual(fa)
        assert result.formula_matched, result.discrepancy
        assert result.discrepancy is None
        primal = cyclic_code_from_assignment(fa)
        assert result.code == primal.dual()
        assert result.code.is_constacyclic(1, 1, 1)     # dual of cyclic is cyclic
        d0, d1, d2 = fa.slot_degrees()
        assert result.code.rank == 2 * d2 + d1          # |C| |C_dual| = p^(2s)


def test_full_and_zero_duals():
    factors = factor_xn_minus_lambda(2, 3, 1)
    full = FactorAssignment.from_slots(2, 3, factors, [], [])
    assert reciprocal_dual(full).code.rank == 0


def test_reciprocal_dual_formula_matches_oracle_exhaustively():
    # the reciprocal-slot construction must agree with the kernel dual on
    # every assignment for a spread of (p, s); the oracle is authoritative
    # either way, this pins the fast path down empirically
    for p, s in ((2, 7), (3, 8), (5, 4), (5, 6)):
        factors = factor_xn_minus_lambda(p, s, 1)
        for slots in itertools.product(range(3), repeat=len(factors)):
            fa = assignment(p, s, slots)
            result = reciprocal_dual(fa)
            assert result.formula_matched, (p, s, slots, result.discrepancy)


def test_is_dual_containing_examples():
    assert is_dual_containing(LinearCode.full_space(5, 4))
    assert not is_dual_containing(LinearCode(2, 3, [[1, 1, 1]]))  # dual is bigger
    rep2 = LinearCode(2, 2, [[1, 1]])
    assert is_dual_containing(rep2)                                # self-dual


def test_css_examples():
    full = LinearCode.full_space(7, 5)
    params = css(full)
    assert (params.n, params.k, params.d) == (5, 5, 1)
    with pytest.raises(NotDualContaining):
        css(LinearCode(2, 4, [[1, 1, 1, 1]]))
    with pytest.raises(ZprsError):
        QuantumParams(4, 5, 1, 2)


def test_search_p5_s8_matches_table_rows():
    hits = {str(h.params) for h in search_dual_containing(5, 8)}
    assert "[[16,8,3]]_5" in hits
    assert "[[16,12,2]]_5" in hits


def test_search_p13_s6_matches_table_row():
    hits = search_dual_containing(13, 6)
    assert "[[12,4,4]]_13" in {str(h.params) for h in hits}
    for h in hits:
        assert h.params.n == 12
        assert h.params.k >= 0 and h.distance_exact


def test_search_small_necessary_condition():
    # every dual-containing candidate satisfies 2 dim >= n
    for h in search_dual_containing(2, 3):
        assert 2 * h.gray_k >= h.gray_n


def test_search_too_many_factors():
    with pytest.raises(TooManyFactors):
        search_dual_containing(2, 7, max_factors=2)


def test_search_p17_s8_reproduces_worked_example():
    hits = search_dual_containing(17, 8)
    assert "[[16,8,4]]_17" in {str(h.params) for h in hits}


def test_search_results_satisfy_quantum_singleton():
    for p, s in ((5, 8), (13, 6), (2, 3)):
        for h in search_dual_containing(p, s):
            if h.distance_exact:
                assert h.params.k <= h.params.n - 2 * (h.params.d - 1)


def test_search_results_are_deterministic_and_sorted():
    hits1 = search_dual_containing(5, 8)
    hits2 = search_dual_containing(5, 8)
    key = lambda h: (h.params.n, h.params.k, h.params.d)
    assert [key(h) for h in hits1] == sorted(key(h) for h in hits1)
    assert [(key(h), h.assignment.key()) for h in hits1] \
        == [(key(h), h.assignment.key()) for h in hits2]


def test_code_from_table_generators_round_trip():
    fa, code = code_from_table_generators(5, 8, [1, 3, 2, 1], [3, 0, 4, 0, 2, 0, 1])
    assert fa.hat(0) == Poly.make([1, 3, 2, 1], 5)
    assert fa.hat(1) == Poly.make([3, 0, 4, 0, 2, 0, 1], 5)
    image = GrayMap(5).image(code)
    assert (image.n, image.k, image.min_distance()) == (16, 12, 3)
    assert (css(image).n, css(image).k, css(image).d) == (16, 8, 3)


def test_separable_rs_dual_containing():
    p = 2
    r_full = AdditiveCode.full_space(BlockProfile(p, 0, 2, 0))
    s_full = AdditiveCode.full_space(BlockProfile(p, 0, 0, 2))
    assert separable_rs_dual_containing(r_full, s_full)
    s_zero = AdditiveCode.zero(BlockProfile(p, 0, 0, 2))
    assert not separable_rs_dual_containing(r_full, s_zero)


def test_separable_rs_dual_containing_random():
    # the verdict always matches the componentwise conjunction
    rng = np.random.default_rng(6)
    from zprs.additive import span_closure
    from zprs.words import unflatten
    for _ in range(25):
        p = 2
        pr_r = BlockProfile(p, 0, 2, 0)
        pr_s = BlockProfile(p, 0, 0, 2)
        cr = span_closure([unflatten(rng.integers(0, p, size=pr_r.n), pr_r)], profile=pr_r)
        cs = span_closure([unflatten(rng.integers(0, p, size=pr_s.n), pr_s)], profile=pr_s)
        from zprs.quantum import additive_dual_containing
        expected = additive_dual_containing(cr) and additive_dual_containing(cs)
        assert separable_rs_dual_containing(cr, cs) == expected


def test_quantum_params_remark():
    assert QuantumParams(16, 8, 4, 17).saturates_singleton_remark()
    assert not QuantumParams(16, 8, 3, 5).saturates_singleton_remark()
