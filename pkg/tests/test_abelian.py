import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from sphbundles.abelian import (
    AbelianGroup,
    CarrierNotClosed,
    Endo,
    GroupMismatch,
    add,
    element_order,
    hom_from_images,
    invariant_factors,
    orbits,
    scale,
)

SMALL_GROUPS = [(2, 3), (4,), (2, 2, 2), (1, 6), (3, 9), (2, 8), (5, 5), (2, 4, 3)]


def test_add_examples():
    G = AbelianGroup((2, 3))
    assert (G(1, 2) + G(1, 1)).coeffs == (0, 0)
    x = G(1, 1)
    assert x + G.zero == x
    H = AbelianGroup((2, 8))
    assert add(H(1, 5), H(1, 5)).coeffs == (0, 2)


def test_add_rejects_mismatch():
    with pytest.raises(GroupMismatch):
        AbelianGroup((2,))(1) + AbelianGroup((3,))(1)


def test_scale_examples():
    H = AbelianGroup((2, 8))
    assert scale(-1, H(1, 3)).coeffs == (1, 5)
    assert scale(0, H(1, 3)) == H.zero
    assert scale(7, AbelianGroup((2, 4))(0, 1)).coeffs == (0, 3)


def test_element_order_examples():
    assert element_order(AbelianGroup((2, 3)).zero) == 1
    assert element_order(AbelianGroup((2, 3))(1, 0)) == 2
    assert element_order(AbelianGroup((2, 8))(1, 2)) == 4


def test_coefficients_reduced():
    G = AbelianGroup((1, 6))
    assert G(5, -1).coeffs == (0, 5)
    with pytest.raises(ValueError):
        G(1)
    with pytest.raises(ValueError):
        AbelianGroup((0, 2))


def test_elements_enumeration():
    G = AbelianGroup((2, 3))
    els = list(G.elements())
    assert len(els) == G.order == 6
    assert els == sorted(els)


@pytest.mark.parametrize("orders", SMALL_GROUPS)
def test_group_axioms(orders):
    G = AbelianGroup(orders)
    els = list(G.elements())
    for x in els:
        assert x + G.zero == x
        assert x + (-x) == G.zero
        assert element_order(x) == min(d for d in range(1, G.order + 1) if not d * x)
        for y in els:
            assert x + y == y + x
    for x, y, z in random.Random(0).choices(list(product(els, els, els)), k=500):
        assert (x + y) + z == x + (y + z)


def test_invariant_factors():
    assert invariant_factors([2, 3]) == [6]
    assert invariant_factors([2, 4, 3]) == [2, 12]
    assert invariant_factors([1, 1]) == []
    assert AbelianGroup((3, 9, 1)).invariant_factors() == [3, 9]


def test_hom_examples():
    G = AbelianGroup((2, 3))
    ident = hom_from_images(G, G.basis())
    assert ident.is_identity()
    zero = hom_from_images(G, [G.zero, G.zero])
    assert all(not zero(x) for x in G.elements())
    Z4 = AbelianGroup((4,))
    triple = hom_from_images(Z4, [Z4(3)])
    assert sorted(triple(x).coeffs for x in Z4.elements()) == [(0,), (1,), (2,), (3,)]
    assert triple(Z4(1)) == Z4(3)


def test_hom_rejects_ill_defined():
    G = AbelianGroup((2, 4))
    with pytest.raises(ValueError):
        hom_from_images(G, [G(0, 1), G(0, 1)])
    with pytest.raises(ValueError):
        hom_from_images(G, [G.zero])


@st.composite
def group_and_endo(draw):
    orders = tuple(draw(st.lists(st.integers(1, 12), min_size=1, max_size=3)))
    G = AbelianGroup(orders)
    images = []
    for m in orders:
        # keep drawing until m * image == 0
        allowed = [x for x in G.elements() if not m * x]
        images.append(draw(st.sampled_from(allowed)))
    return G, hom_from_images(G, images)


@given(group_and_endo(), st.data())
def test_hom_additive(ge, data):
    G, phi = ge
    coeffs = st.tuples(*(st.integers(0, m - 1) for m in G.orders))
    x = G(data.draw(coeffs))
    y = G(data.draw(coeffs))
    assert phi(x + y) == phi(x) + phi(y)
    assert phi(5 * x) == 5 * phi(x)


def test_compose():
    Z8 = AbelianGroup((8,))
    f = hom_from_images(Z8, [Z8(3)])
    g = hom_from_images(Z8, [Z8(5)])
    assert f.compose(g) == hom_from_images(Z8, [Z8(7)])
    assert hash(f.compose(g)) == hash(hom_from_images(Z8, [Z8(7)]))


def test_orbits_examples():
    Z8 = AbelianGroup((8,))
    neg = hom_from_images(Z8, [Z8(7)])
    five = hom_from_images(Z8, [Z8(5)])
    (o,) = orbits([Z8.zero], [neg, five])
    assert o.members == {Z8.zero}
    (o,) = orbits([Z8(3), Z8(5)], [neg])
    assert o.representative == Z8(3)
    odd = [Z8(c) for c in (1, 3, 5, 7)]
    (o,) = orbits(odd, [neg, five])
    assert o.members == set(odd) and o.representative == Z8(1)
    assert orbits([], [neg]) == []


def test_orbits_not_closed():
    Z8 = AbelianGroup((8,))
    three = hom_from_images(Z8, [Z8(3)])
    with pytest.raises(CarrierNotClosed):
        orbits([Z8(1), Z8(5)], [three])


def test_orbits_non_bijective_generator():
    # doubling merges blocks it connects even without inverses
    Z4 = AbelianGroup((4,))
    double = hom_from_images(Z4, [Z4(2)])
    blocks = orbits(list(Z4.elements()), [double])
    assert sorted(sorted(x.coeffs[0] for x in o.members) for o in blocks) == [[0, 1, 2, 3]]


def union_find_count(carrier, gens):
    parent = {x: x for x in carrier}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for g in gens:
        for x in carrier:
            a, b = find(x), find(g(x))
            if a != b:
                parent[a] = b
    return len({find(x) for x in carrier})


def automorphisms(G, rng, count):
    found = []
    els = list(G.elements())
    while len(found) < count:
        images = [rng.choice([x for x in els if not m * x]) for m in G.orders]
        phi = hom_from_images(G, images)
        if len({phi(x) for x in els}) == len(els):
            found.append(phi)
    return found


@pytest.mark.parametrize("orders, seed", [((2, 8), 0), ((3, 9), 1), ((4, 4), 2), ((2, 2, 6), 3), ((12,), 4)])
def test_orbits_partition_and_oracle(orders, seed):
    rng = random.Random(seed)
    G = AbelianGroup(orders)
    gens = automorphisms(G, rng, 2)
    carrier = list(G.elements())
    blocks = orbits(carrier, gens)
    seen = set()
    for o in blocks:
        assert not (o.members & seen)
        seen |= o.members
        assert o.representative == min(o.members)
        for g in gens:
            assert {g(x) for x in o.members} == o.members
    assert seen == set(carrier)
    assert len(blocks) == union_find_count(carrier, gens)

    shuffled = carrier[:]
    rng.shuffle(shuffled)
    again = orbits(shuffled, list(reversed(gens)))
    assert [(o.representative, o.members) for o in again] == [(o.representative, o.members) for o in blocks]


def test_endo_group_mismatch():
    G, H = AbelianGroup((2,)), AbelianGroup((4,))
    phi = Endo(G, [G(1)])
    with pytest.raises(GroupMismatch):
        phi(H(1))
    with pytest.raises(GroupMismatch):
        orbits([H(1)], [phi])
