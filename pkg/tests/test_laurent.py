import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdyson.laurent import (
    MultiLaurent,
    coefficient_of,
    constant_term,
    dyson_product,
    h_lambda,
    h_r_of_alphabet,
    pochhammer_factor,
)
from qdyson.qring import ONE, ZERO, QLaurentPoly, q_binomial

from conftest import qp


def mono(n, exps, c=1):
    if isinstance(c, int):
        c = QLaurentPoly.const(c)
    return MultiLaurent.monomial(n, exps, c)


def h_r_enumerated(r, a):
    """h_r(x^(a)) by summing every multiset of r letters."""
    n = len(a)
    letters = [(i, k) for i in range(n) for k in range(a[i])]
    total = {}
    for pick in itertools.combinations_with_replacement(letters, r):
        e = [0] * n
        qe = 0
        for i, k in pick:
            e[i] += 1
            qe += k
        key = tuple(e)
        total[key] = total.get(key, ZERO) + QLaurentPoly.monomial(1, qe)
    return MultiLaurent(n, total)


def test_binomial_product_expansion():
    x1_over_x2 = mono(2, (1, -1))
    left = MultiLaurent.const(2) - x1_over_x2
    right = MultiLaurent.const(2) - mono(2, (-1, 1), QLaurentPoly.monomial(1, 1))
    prod = left * right
    assert len(prod) == 3
    assert prod.constant_term() == qp(1, 1)
    assert prod.coefficient((1, -1)) == qp(-1)
    assert prod.coefficient((-1, 1)) == qp(0, -1)


def test_arith_identities():
    p = dyson_product((2, 1))
    assert p * MultiLaurent.const(2) == p
    assert (p + (-p)).is_zero()
    assert (p - p).terms == {}
    with pytest.raises(ValueError):
        p + MultiLaurent.const(3)


@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-3, 3), st.integers(-3, 3)),
                max_size=5))
@settings(max_examples=60)
def test_mul_distributes(raw):
    terms = [mono(2, (e1, e2), QLaurentPoly.monomial(c, qe)) for e1, e2, qe, c in raw]
    p = MultiLaurent(2)
    for t in terms:
        p = p + t
    r = dyson_product((1, 2))
    s = h_r_of_alphabet(2, (1, 2))
    assert p * (r + s) == p * r + p * s
    assert (p * r) * s == p * (r * s)


def test_pochhammer_factor():
    assert pochhammer_factor(2, 0, 1, 0, 1) == MultiLaurent.const(2) - mono(2, (1, -1))
    assert pochhammer_factor(2, 1, 0, 1, 1) == MultiLaurent.const(2) - mono(2, (-1, 1), QLaurentPoly.monomial(1, 1))
    two = pochhammer_factor(2, 0, 1, 0, 2)
    expect = (MultiLaurent.const(2) - mono(2, (1, -1))) * (
        MultiLaurent.const(2) - mono(2, (1, -1), QLaurentPoly.monomial(1, 1)))
    assert two == expect
    assert two.coefficient((2, -2)) == QLaurentPoly.monomial(1, 1)
    assert two.coefficient((1, -1)) == qp(-1, -1)
    with pytest.raises(ValueError):
        pochhammer_factor(2, 1, 1, 0, 1)


def test_dyson_product_small():
    assert dyson_product((4,)) == MultiLaurent.const(1)
    k = dyson_product((1, 1))
    assert k == MultiLaurent(2, {(0, 0): qp(1, 1), (1, -1): qp(-1), (-1, 1): qp(0, -1)})
    assert constant_term(k) == qp(1, 1)
    assert coefficient_of(k, (0, 0)) == qp(1, 1)
    assert coefficient_of(k, (5, -5)) == ZERO
    assert coefficient_of(MultiLaurent.const(2) - mono(2, (1, -1)), (0, 0)) == ONE


def test_dyson_constant_term_symmetric():
    for a in [(1, 2, 3), (2, 1, 1), (3, 1, 2)]:
        base = constant_term(dyson_product(a))
        for perm in itertools.permutations(a):
            assert constant_term(dyson_product(perm)) == base


def test_dyson_product_term_bound():
    for a in [(1, 1), (2, 1), (2, 2, 1), (3, 2, 1)]:
        bound = 1
        for i, j in itertools.combinations(range(len(a)), 2):
            bound *= a[i] + a[j] + 1
        assert len(dyson_product(a)) <= bound


def test_h_r_examples():
    assert h_r_of_alphabet(0, (2, 3)) == MultiLaurent.const(2)
    a = (2, 3, 1)
    h1 = h_r_of_alphabet(1, a)
    expect = MultiLaurent(3)
    for i, ai in enumerate(a):
        e = [0, 0, 0]
        e[i] = 1
        expect = expect + mono(3, e, QLaurentPoly(0, [1] * ai))
    assert h1 == expect
    assert h_r_of_alphabet(2, (1,)) == mono(1, (2,))
    assert h_r_of_alphabet(2, (2,)) == mono(1, (2,), qp(1, 1, 1))


@pytest.mark.parametrize("a", [(1,), (3,), (1, 1), (2, 1), (1, 2, 2), (3, 1, 2)])
@pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
def test_h_r_matches_multiset_enumeration(r, a):
    assert h_r_of_alphabet(r, a) == h_r_enumerated(r, a)


@pytest.mark.parametrize("a", [(2, 1, 2), (1, 3), (2, 2, 1, 1)])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_alphabet_union(r, a):
    """h_r over a concatenation of alphabets is the convolution of the pieces."""
    n = len(a)
    for cut in range(1, n):
        left = tuple(a[:cut]) + (0,) * (n - cut)
        right = (0,) * cut + tuple(a[cut:])
        conv = MultiLaurent(n)
        for s in range(r + 1):
            conv = conv + h_r_of_alphabet(s, left) * h_r_of_alphabet(r - s, right)
        assert conv == h_r_of_alphabet(r, a)


def test_principal_specialization():
    for a1 in range(1, 7):
        for r in range(0, 7):
            assert h_r_of_alphabet(r, (a1,)).coefficient((r,)) == q_binomial(a1 + r - 1, r)


def test_h_r_nonnegative():
    for r in range(5):
        for a in [(1, 2), (3, 3), (2, 1, 2)]:
            for c in h_r_of_alphabet(r, a).terms.values():
                assert all(x >= 0 for x in c.coeffs)


def test_h_lambda():
    assert h_lambda((), (1, 1)) == MultiLaurent.const(2)
    x1 = mono(2, (1, 0))
    x2 = mono(2, (0, 1))
    assert h_lambda((1, 1), (1, 1)) == (x1 + x2) * (x1 + x2)
    assert h_lambda((2,), (2,)) == mono(1, (2,), qp(1, 1, 1))
    assert h_lambda((2, 1, 0), (1, 2)) == h_r_of_alphabet(2, (1, 2)) * h_r_of_alphabet(1, (1, 2))
    with pytest.raises(ValueError):
        h_lambda((1, 2), (1, 1))


def test_json_and_rendering_are_graded_lex():
    k = dyson_product((1, 1))
    js = k.to_json()
    assert [t["exps"] for t in js] == [[-1, 1], [0, 0], [1, -1]]
    degrees = [sum(t["exps"]) for t in h_r_of_alphabet(2, (1, 2)).to_json()]
    assert degrees == sorted(degrees)
    assert MultiLaurent.from_json(2, js) == k
    assert str(MultiLaurent(2)) == "0"
