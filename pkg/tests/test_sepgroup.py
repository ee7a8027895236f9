"""Exact arithmetic in the separating group and the dichotomy solvers."""

import random

import pytest
from hypothesis import given, strategies as st

from zariski.randgen import rand_gelement
from zariski.sepgroup import (AllEven, FiniteCandidates, FreeAbelianWord,
                              GElement, GkElement, TmPoint, brute_solve_on_Tm,
                              commutative_reduce, eval_ax_p, finiteness_bound,
                              g_element, g_eq, g_from_json, g_identity, g_inv,
                              g_mul, g_to_json, gk_normalize, solve_on_Tm)


def test_gk_normalize_examples():
    w = FreeAbelianWord({0: 4, 1: 2})
    assert gk_normalize(3, w).exponents() == {0: 1, 1: 2}
    w = FreeAbelianWord({2: 5, 3: 1})
    assert gk_normalize(1, w).exponents() == {3: 1}  # even generators die
    w = FreeAbelianWord({0: 7, 5: -2})
    assert gk_normalize(0, w).exponents() == {0: 7, 5: -2}  # no reduction


def test_gk_even_exponents_in_range():
    g = GkElement(4, {0: -1, 2: 9, 1: -3})
    assert g.exponents() == {0: 3, 2: 1, 1: -3}


def test_group_ops_examples():
    u = g_element({2: {0: 1, 3: 2}, 5: {1: -1}})
    assert g_mul(u, g_inv(u)) == g_identity()
    v = g_element({2: {0: 1}})
    assert g_mul(v, v) == g_element({2: {3: 0}})  # x0^2 = 1 in component 2
    assert g_mul(v, v).is_identity()
    w = g_element({0: {0: 1}})
    assert not g_mul(w, w).is_identity()  # component 0 is free


elements = st.integers(0, 10 ** 6).map(
    lambda s: rand_gelement(random.Random(s), max_k=4, max_gen=8, max_exp=4))


@given(elements, elements)
def test_commutativity(u, v):
    assert g_mul(u, v) == g_mul(v, u)


@given(elements, elements, elements)
def test_cancellativity(u, v, w):
    assert g_eq(u, v) == g_eq(g_mul(u, w), g_mul(v, w))


@given(elements, elements, elements)
def test_associativity(u, v, w):
    assert g_mul(g_mul(u, v), w) == g_mul(u, g_mul(v, w))


def test_eval_ax_p_examples():
    a = g_element({3: {1: 2}})
    assert eval_ax_p(a, 0, g_element({3: {0: 1}})) == a
    x = g_element({2: {4: 1}})
    assert eval_ax_p(g_identity(), 1, x) == x
    a = g_element({5: {3: -2}})
    assert eval_ax_p(a, 2, TmPoint(5, 3).element()) == g_identity()


def test_solve_examples_against_brute_oracle():
    cases = [
        (g_identity(), 2, 5, 100, frozenset()),
        (g_element({5: {3: -2}}), 2, 5, 100, frozenset({3})),
        (g_identity(), 5, 5, 10, frozenset({0, 2, 4, 6, 8, 10})),
    ]
    for a, p, m, bound, expected in cases:
        assert brute_solve_on_Tm(a, p, m, bound) == expected
        assert solve_on_Tm(a, p, m, bound) == expected


def test_solver_edge_cases():
    # coefficient supported away from component m: no solutions
    a = g_element({2: {1: -3}})
    assert solve_on_Tm(a, 3, 5, 50) == frozenset()
    assert brute_solve_on_Tm(a, 3, 5, 50) == frozenset()
    # even-index coefficient with matching residue
    a = g_element({4: {6: 1}})
    assert solve_on_Tm(a, 3, 4, 50) == frozenset({6})
    assert brute_solve_on_Tm(a, 3, 4, 50) == frozenset({6})
    # two-generator support can never vanish against a single generator
    a = g_element({4: {0: 1, 1: 1}})
    assert solve_on_Tm(a, 4, 4, 50) == frozenset()
    with pytest.raises(ValueError):
        solve_on_Tm(a, 0, 4, 50)
    with pytest.raises(ValueError):
        solve_on_Tm(a, 1, 0, 50)


def test_closed_form_equals_brute_on_random_inputs():
    rng = random.Random(23)
    for _ in range(300):
        a = rand_gelement(rng, max_k=6, max_gen=12, max_exp=5)
        m = rng.randint(1, 6)
        p = rng.randint(1, 8)
        assert solve_on_Tm(a, p, m, 40) == brute_solve_on_Tm(a, p, m, 40)


def test_finiteness_bound_examples():
    assert finiteness_bound(g_identity(), 2, 5) == FiniteCandidates(frozenset())
    a = g_element({5: {3: -2}})
    assert finiteness_bound(a, 2, 5) == FiniteCandidates(frozenset({3}))
    assert finiteness_bound(g_identity(), 5, 5) == AllEven()


def test_separation_dichotomy_small_scale():
    rng = random.Random(29)
    for m in (2, 3, 4, 5):
        for p in range(1, m):
            for _ in range(40):
                a = rand_gelement(rng)
                bnd = finiteness_bound(a, p, m)
                assert isinstance(bnd, FiniteCandidates)
                assert solve_on_Tm(a, p, m, 60) <= bnd.indices
        evens = solve_on_Tm(g_identity(), m, m, 60)
        assert evens == frozenset(range(0, 61, 2))


def test_commutative_reduce():
    a = g_element({2: {1: 3}})
    assert commutative_reduce(a, 3) == (a, 3)
    assert commutative_reduce(a, -2) == (g_inv(a), 2)
    assert commutative_reduce(g_identity(), 0) == (g_identity(), 0)
    # solution sets of "!= 1" agree pointwise
    rng = random.Random(31)
    for _ in range(100):
        a = rand_gelement(rng, max_k=4, max_gen=6, max_exp=3)
        n = rng.randint(-4, -1)
        b, q = commutative_reduce(a, n)
        x = rand_gelement(rng, max_k=4, max_gen=6, max_exp=3)
        lhs = g_mul(a, g_inv(eval_ax_p(g_identity(), -n, x)))
        assert lhs.is_identity() == eval_ax_p(b, q, x).is_identity()


def test_tm_point_validation():
    with pytest.raises(ValueError):
        TmPoint(0, 1)
    with pytest.raises(ValueError):
        TmPoint(2, -1)
    # T_1 collapses even generators to the identity
    assert TmPoint(1, 4).element() == g_identity()
    assert TmPoint(1, 3).element() == g_element({1: {3: 1}})


def test_component_validation():
    with pytest.raises(ValueError):
        GkElement(-1, {})
    with pytest.raises(ValueError):
        GElement({2: GkElement(3, {1: 1})})
    with pytest.raises(TypeError):
        GElement({2: {1: 1}})


def test_json_roundtrip():
    u = g_element({0: {2: -3}, 4: {0: 1, 7: 2}})
    assert g_from_json(g_to_json(u)) == u
    assert g_to_json(g_identity()) == {"components": []}
