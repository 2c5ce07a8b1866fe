import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdyson.dyson_core import (
    Composition,
    L_IJ,
    conversion_identity,
    conversion_identity_product,
    corollary_rhs,
    eval_D_corollary,
    eval_D_inductive,
    eval_D_recursive,
    kadell_rhs,
    kadell_rhs_printed,
    max_part_set,
    qdyson_rhs,
    reduce_zero_parts,
    theorem_factor,
)
from qdyson.oracle import brute_D
from qdyson.qring import ONE, ZERO, QRat, q_binomial

from conftest import qp


def test_composition_views():
    v = Composition((0, 2, 3, 2, 3, 1))
    assert v.plus() == (3, 3, 2, 2, 1, 0)
    assert v.size == 11
    assert v.delete({3, 5}).parts == (0, 2, 2, 1)
    with pytest.raises(ValueError):
        Composition((1, -1))


def test_max_part_set():
    assert max_part_set((0, 2, 3, 2, 3, 1)) == (3, frozenset({3, 5}))
    assert max_part_set((4,)) == (4, frozenset({1}))
    assert max_part_set((1, 1)) == (1, frozenset({1, 2}))
    with pytest.raises(ValueError):
        max_part_set((0, 0))


def test_L_IJ():
    a = (1, 2, 3, 4, 5)
    for i in range(1, 6):
        assert L_IJ({i}, {i}, a) == sum(a[i:])
    assert L_IJ({3, 5}, {5}, (1,) * 6) == 4
    assert L_IJ(set(range(1, 6)), set(range(1, 6)), a) == 0
    with pytest.raises(ValueError):
        L_IJ({1}, {2}, a)


def test_qdyson_rhs():
    assert qdyson_rhs((5,)) == ONE
    assert qdyson_rhs((1, 1)) == qp(1, 1)
    assert qdyson_rhs((1, 1, 1)) == qp(1, 2, 2, 1)


def test_kadell_rhs_examples():
    for a1 in range(1, 5):
        for r in range(1, 5):
            assert kadell_rhs((r,), (a1,)) == q_binomial(a1 + r - 1, r)
    assert kadell_rhs((2,), (2,)) == qp(1, 1, 1)
    assert kadell_rhs((1, 0), (1, 1)) == qp(0, 1)
    assert kadell_rhs((1, 1), (1, 1)) == ZERO


def test_printed_kadell_only_differs_off_the_first_position():
    """The printed tail product keeps a_k for i < k; that only matters when k > 1."""
    for n in (2, 3):
        for a in itertools.product(range(1, 4), repeat=n):
            for r in (1, 2):
                for k in range(1, n + 1):
                    v = [0] * n
                    v[k - 1] = r
                    same = kadell_rhs_printed(v, a) == kadell_rhs(v, a)
                    assert same == (k == 1)
                    assert kadell_rhs(v, a) == brute_D(v, (r,), a)
    # the smallest case where the printed form overcounts
    assert brute_D((0, 1), (1,), (1, 1)) == ONE
    assert kadell_rhs_printed((0, 1), (1, 1)) == qp(1, 1)


def test_corollary_rhs():
    factor, v2, a2 = corollary_rhs((1, 0), (1, 1))
    assert factor == qp(0, 1) and v2 == (0,) and a2 == (1,)
    factor, v2, a2 = corollary_rhs((3,), (2,))
    assert factor == q_binomial(4, 1) and v2 == () and a2 == ()
    factor, _, _ = corollary_rhs((0, 0, 2), (1, 2, 3))
    assert factor == q_binomial(2 + 6 - 1, 2)
    with pytest.raises(ValueError):
        corollary_rhs((1, 1), (1, 1))


def test_theorem_factor_examples():
    for a1 in range(1, 5):
        for r in range(1, 5):
            assert theorem_factor((r,), (a1,)) == QRat(q_binomial(a1 + r - 1, a1 - 1))
    assert theorem_factor((1, 1), (1, 1)) == QRat(qp(1, 1))


@pytest.mark.parametrize("v,a", [((2, 0, 1), (1, 2, 3)), ((0, 3, 1), (2, 2, 1)), ((1, 0, 0, 2), (1, 1, 2, 1))])
def test_theorem_factor_single_max_equals_corollary(v, a):
    factor, _, _ = corollary_rhs(v, a)
    assert theorem_factor(v, a) == QRat(factor)


def test_zero_part_reductions():
    assert reduce_zero_parts((1, 0), (0, 2)) is None
    assert reduce_zero_parts((0, 1), (0, 2)) == ((1,), (2,))
    assert eval_D_recursive((1, 0), (0, 2)) == ZERO
    assert eval_D_recursive((0, 1, 1), (0, 1, 1)) == eval_D_recursive((1, 1), (1, 1))
    assert eval_D_recursive((0, 0), (0, 0)) == ONE
    assert eval_D_recursive((), ()) == ONE


def test_hand_values():
    for method in (eval_D_recursive, eval_D_inductive, eval_D_corollary):
        assert method((1, 1), (1, 1)) == qp(1, 1)
        assert method((1, 0), (1, 1)) == qp(0, 1)
        assert method((0, 0, 0), (1, 1, 1)) == qp(1, 2, 2, 1)
        assert method((3,), (2,)) == q_binomial(4, 1)


def test_zero_brute_matches_oracle_with_zero_parts():
    # honest zero-a cases go through the kernel, not the shortcut
    for v, a in [((1, 0), (0, 2)), ((0, 2), (0, 2)), ((1, 0, 1), (1, 0, 2))]:
        assert eval_D_recursive(v, a) == brute_D(v, sorted(v, reverse=True), a)


def test_evaluators_agree_with_brute_force():
    for n in (1, 2, 3):
        for a in itertools.product(range(1, 3), repeat=n):
            for v in itertools.product(range(3), repeat=n):
                lam = sorted(v, reverse=True)
                b = brute_D(v, lam, a)
                assert eval_D_recursive(v, a) == b
                assert eval_D_inductive(v, a) == b
                assert eval_D_corollary(v, a) == b


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 3)), min_size=1, max_size=4))
def test_recursive_equals_inductive(pairs):
    v = [p[0] for p in pairs]
    a = [p[1] for p in pairs]
    assert eval_D_recursive(v, a) == eval_D_inductive(v, a)


def test_corollary_consistency():
    for a in itertools.product(range(1, 4), repeat=3):
        for v in itertools.product(range(4), repeat=3):
            if any(v) and v.count(max(v)) == 1:
                factor, v2, a2 = corollary_rhs(v, a)
                assert eval_D_recursive(v, a) == factor * eval_D_recursive(v2, a2)


@pytest.mark.parametrize("v,a", [
    ((3, 1, 3, 0), (3, 3, 2, 2)),
    ((2, 2, 2, 2), (2, 3, 2, 1)),
    ((4, 0, 4, 1), (2, 2, 3, 1)),
])
def test_q_equals_one_smoke(v, a):
    lam = sorted(v, reverse=True)
    assert eval_D_recursive(v, a)(1) == brute_D(v, lam, a)(1)


def test_conversion_identities_small():
    for a in [(1,), (2, 3), (1, 2, 3), (6, 6)]:
        for k in range(1, len(a) + 1):
            for r in range(1, 4):
                lhs, rhs = conversion_identity(a, k, r)
                assert lhs == rhs
                lhs, rhs = conversion_identity_product(a, k, r)
                assert lhs == rhs


def test_exploratory_nonnegativity():
    """Not claimed in general; no counterexample exists in this range."""
    for n in (1, 2, 3):
        for a in itertools.product(range(1, 4), repeat=n):
            for v in itertools.product(range(4), repeat=n):
                assert all(c >= 0 for c in eval_D_recursive(v, a).coeffs), (v, a)
