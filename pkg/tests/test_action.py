import pytest

from sphbundles.action import (
    SelfEquivalence,
    epsilon_k,
    epsilon_zero,
    equivalence_params,
    induced_endo,
    induced_endos,
    negation_endo,
)
from sphbundles.kgroups import build_K

SMALL = [(k, n) for k in range(2, 7) for n in range(2, 41)]


def test_params_examples():
    S = SelfEquivalence
    assert equivalence_params(2, 3) == [S(1, 0), S(2, 0)]
    assert equivalence_params(3, 2) == [S(1, 0), S(3, 0)]
    assert equivalence_params(5, 4) == [S(1, 0), S(1, 1), S(3, 0), S(3, 1)]
    assert len(equivalence_params(2, 6)) == 4  # units mod 12


def test_epsilon_examples():
    assert epsilon_k(1, 6, 3) == 0
    assert epsilon_k(3, 2, 3) == 1
    assert epsilon_k(5, 2, 5) == 0
    assert epsilon_k(7, 2, 5) == 1
    with pytest.raises(ValueError):
        epsilon_k(2, 2, 3)
    with pytest.raises(ValueError):
        epsilon_k(3, 2, 4)


def test_epsilon_matches_binomial_parity():
    for t in range(1, 200, 2):
        assert epsilon_k(t, 2, 3) == (t * (t - 1) // 2) % 2


def test_induced_examples():
    K = build_K(3, 2)
    phi = induced_endo(K, SelfEquivalence(3, 0))
    assert phi(K.theta) == 5 * K.theta
    K = build_K(2, 5)
    assert induced_endo(K, SelfEquivalence(2, 0))(K.theta) == 4 * K.theta


def test_rejects_bad_params():
    with pytest.raises(ValueError):
        induced_endo(build_K(2, 6), SelfEquivalence(3, 0))
    with pytest.raises(ValueError):
        induced_endo(build_K(2, 6), SelfEquivalence(5, 1))
    with pytest.raises(ValueError):
        induced_endo(build_K(2, 9), SelfEquivalence(2, 1))


def test_negation_examples():
    K = build_K(2, 12)
    neg = negation_endo(K)
    assert neg(K.theta) == (K.theta_order - 1) * K.theta
    assert neg(K.group.zero) == K.group.zero
    assert neg(K.group(1, 0, 18)).coeffs == (1, 0, 6)


@pytest.mark.parametrize("k, n", SMALL)
def test_identity_and_bijection(k, n):
    K = build_K(k, n)
    assert induced_endo(K, SelfEquivalence(1, 0)).is_identity()
    if K.group.order > 10**4:
        return
    els = list(K.group.elements())
    neg = negation_endo(K)
    for g in equivalence_params(k, n):
        phi = induced_endo(K, g)
        assert len({phi(x) for x in els}) == len(els)
        for b in K.group.basis():
            assert phi(neg(b)) == neg(phi(b))


def test_named_images():
    # k = 2, 4, 6 scale the sphere part by t; k = 3, 5 fix it
    for k, n in [(2, 12), (4, 40), (6, 126), (3, 8), (5, 6)]:
        K = build_K(k, n)
        for g in equivalence_params(k, n):
            phi = induced_endo(K, g)
            for label, x in K.named.items():
                assert phi(x) == (g.t * x if k in (2, 4, 6) else x)


@pytest.mark.parametrize("k, n", SMALL)
def test_composition_closure(k, n):
    K = build_K(k, n)
    endos = induced_endos(K)
    for f in endos:
        for g in endos:
            assert f.compose(g) in endos


def test_shift_by_n_k3():
    # for 2 || n, t and t + n are both units mod 2n and differ by i eta p
    for n in range(2, 200, 4):
        K = build_K(3, n)
        for g in equivalence_params(3, n):
            a = induced_endo(K, g)
            b = induced_endo(K, SelfEquivalence((g.t + n) % (2 * n)))
            assert b(K.theta) - a(K.theta) == K.named["nu5eta8^2"]


def test_eps_bit_for_4_dividing_n():
    # with 4 | n the eps parameter already ranges over both values
    for k in (3, 5):
        for n in (4, 8, 12, 16, 20):
            K = build_K(k, n)
            assert induced_endos(K, epsilon_k) == induced_endos(K, epsilon_zero)
