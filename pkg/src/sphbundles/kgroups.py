"""The groups K_k^n of attaching maps, for 2 <= k <= 6.

K_k^n sits in a short exact sequence

    0 -> pi_{4k-2}(S^{2k-1}) / n  ->  K_k^n  ->  cyclic group  -> 0

and each branch below transcribes its cyclic decomposition directly. The lift
``theta`` generates the cyclic quotient; the named elements are the images
``i o xi`` of the sphere generators ``xi``. Where a basis generator is a twisted
combination (e.g. ``(n/2) theta + i o nu'``) the named element is solved back
into coordinates, and every relation is re-checked at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .abelian import AbelianGroup, GroupElement, element_order
from .numtheory import two_adic_valuation

__all__ = [
    "SphereGenTable",
    "KGroup",
    "sphere_table",
    "build_K",
    "image_subgroup",
    "quotient_order",
    "GLYPHS",
    "K_RANGE",
]

K_RANGE = range(2, 7)

# generators of pi_{4k-2}(S^{2k-1}) with their orders; ASCII labels
_TABLES = {
    2: (("nu'", 4), ("alpha1_3", 3)),
    3: (("nu5eta8^2", 2),),
    4: (("sigma'", 8), ("alpha2_7", 3), ("alpha1_7", 5)),
    5: (("nu9^3", 2), ("mu9", 2), ("eta9eps10", 2), ("sigma9eta16^2", 2)),
    6: (("zeta_11", 8), ("alphabar3_11", 9), ("alpha1_11", 7)),
}

GLYPHS = {
    "theta": "θ",
    "nu'": "ν′",
    "alpha1_3": "α₁³",
    "nu5eta8^2": "ν₅η₈²",
    "sigma'": "σ′",
    "alpha2_7": "α₂⁷",
    "alpha1_7": "α₁⁷",
    "nu9^3": "ν₉³",
    "mu9": "μ₉",
    "eta9eps10": "η₉ε₁₀",
    "sigma9eta16^2": "σ₉η₁₆²",
    "zeta_11": "ζ₁₁",
    "alphabar3_11": "ᾱ₃¹¹",
    "alpha1_11": "α₁¹¹",
}

# the first three k=5 generators span the subgroup S_0
S0 = ("nu9^3", "mu9", "eta9eps10")


@dataclass(frozen=True)
class SphereGenTable:
    k: int
    entries: tuple[tuple[str, int], ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def order_of(self, label: str) -> int:
        return dict(self.entries)[label]


def _check_k(k):
    if k not in K_RANGE:
        raise ValueError(f"k must be in 2..6, got {k}")


def sphere_table(k: int) -> SphereGenTable:
    _check_k(k)
    return SphereGenTable(k, _TABLES[k])


@dataclass(frozen=True)
class KGroup:
    """K_k^n with its distinguished elements.

    ``recipes[i]`` writes basis generator ``i`` as an integer combination of
    ``theta`` and the named elements; induced maps are pushed through these.
    """

    k: int
    n: int
    group: AbelianGroup
    theta: GroupElement
    named: dict[str, GroupElement]
    theta_order: int
    recipes: tuple[dict[str, int], ...]
    case: str

    def __hash__(self):
        return hash((self.k, self.n))

    def __eq__(self, other):
        return isinstance(other, KGroup) and (self.k, self.n) == (other.k, other.n)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.named)

    def combination(self, coeffs: dict[str, int]) -> GroupElement:
        """Evaluate ``sum c * g`` over ``theta`` and the named labels."""
        x = self.group.zero
        for label, c in coeffs.items():
            x = x + c * (self.theta if label == "theta" else self.named[label])
        return x


def quotient_order(k: int, n: int) -> int:
    """Order of the cyclic quotient of K_k^n (n, or 2n when k is 3, 5, 6 and n even)."""
    return 2 * n if k not in (2, 4) and n % 2 == 0 else n


def _build(k, n):
    """Orders, theta position, named coordinates, recipes and case label."""
    r = two_adic_valuation(n)
    names = [name for name, _ in _TABLES[k]]

    def unit(orders, i):
        return tuple(int(j == i) for j in range(len(orders)))

    if k in (2, 4):
        # k=2: nu' (4) + alpha (3); k=4: sigma' (8) + alpha2 (3) + alpha1 (5)
        lead, lead_order = names[0], _TABLES[k][0][1]
        odd_gcds = [gcd(q, n) for _, q in _TABLES[k][1:]]
        odd_names = names[1:]
        split = r == 0 or (k == 2 and r >= 3) or (k == 4 and r >= 4)
        if split:
            orders = [gcd(lead_order, n), *odd_gcds, n]
            t = len(orders) - 1
            named = {name: unit(orders, i) for i, name in enumerate(names)}
            recipes = [{name: 1} for name in names] + [{"theta": 1}]
            case = "2!|n" if r == 0 else f"{2 * lead_order}|n"
        elif r == 1:
            orders = [*odd_gcds, 2 * n]
            t = len(orders) - 1
            named = {name: unit(orders, i) for i, name in enumerate(odd_names)}
            lead_vec = [0] * len(orders)
            lead_vec[t] = n
            named = {lead: tuple(lead_vec), **named}
            recipes = [{name: 1} for name in odd_names] + [{"theta": 1}]
            case = "2||n"
        else:
            # twisted generator (n / 2^(r-1)) theta + i o lead, of order 2^(r-1)
            twist = n >> (r - 1)
            orders = [1 << (r - 1), *odd_gcds, 2 * n]
            t = len(orders) - 1
            lead_vec = [1] + [0] * (len(orders) - 1)
            lead_vec[t] = -twist % (2 * n)
            named = {lead: tuple(lead_vec)}
            named.update({name: unit(orders, i + 1) for i, name in enumerate(odd_names)})
            recipes = [{"theta": twist, lead: 1}] + [{name: 1} for name in odd_names]
            recipes.append({"theta": 1})
            case = f"{1 << r}||n"
        return orders, t, named, recipes, case

    if k == 3:
        (x,) = names
        if r == 0:
            return [n], 0, {x: (0,)}, [{"theta": 1}], "2!|n"
        if r == 1:
            return [4 * n], 0, {x: (2 * n,)}, [{"theta": 1}], "2||n"
        return [2, 2 * n], 1, {x: (1, 0)}, [{x: 1}, {"theta": 1}], "4|n"

    if k == 5:
        if r == 0:
            return [n], 0, {name: (0,) for name in names}, [{"theta": 1}], "2!|n"
        if r == 1:
            orders = [2, 2, 2, 4 * n]
            named = {name: unit(orders, i) for i, name in enumerate(names[:3])}
            # i(nu^3) + i(eta eps) + i(sigma eta^2) = 2n theta
            named[names[3]] = (1, 0, 1, 2 * n)
            recipes = [{name: 1} for name in names[:3]] + [{"theta": 1}]
            return orders, 3, named, recipes, "2||n"
        orders = [2, 2, 2, 2, 2 * n]
        named = {name: unit(orders, i) for i, name in enumerate(names)}
        recipes = [{name: 1} for name in names] + [{"theta": 1}]
        return orders, 4, named, recipes, "4|n"

    # k == 6
    if r == 0:
        orders = [gcd(9, n), gcd(7, n), n]
        named = {names[0]: (0, 0, 0)}
        named.update({name: unit(orders, i) for i, name in enumerate(names[1:])})
        recipes = [{name: 1} for name in names[1:]] + [{"theta": 1}]
        return orders, 2, named, recipes, "2!|n"
    orders = [gcd(8, n), gcd(9, n), gcd(7, n), 2 * n]
    named = {name: unit(orders, i) for i, name in enumerate(names)}
    recipes = [{name: 1} for name in names] + [{"theta": 1}]
    return orders, 3, named, recipes, "2|n"


@lru_cache(maxsize=2048)
def build_K(k: int, n: int) -> KGroup:
    _check_k(k)
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    orders, t, named_vecs, recipes, case = _build(k, n)
    group = AbelianGroup(tuple(orders))
    theta = group.basis()[t]
    labels = sphere_table(k).labels
    named = {label: group(named_vecs[label]) for label in labels}
    K = KGroup(
        k=k,
        n=n,
        group=group,
        theta=theta,
        named=named,
        theta_order=element_order(theta),
        recipes=tuple(recipes),
        case=case,
    )
    _check_relations(K)
    return K


def _expected_theta_order(k, n):
    r = two_adic_valuation(n)
    if k in (2, 4):
        split = r == 0 or (k == 2 and r >= 3) or (k == 4 and r >= 4)
        return n if split else 2 * n
    if k in (3, 5) and r == 1:
        return 4 * n
    return quotient_order(k, n)


def _check_relations(K: KGroup):
    k, n = K.k, K.n
    r = two_adic_valuation(n)
    for i, (recipe, b) in enumerate(zip(K.recipes, K.group.basis())):
        if K.combination(recipe) != b:
            raise AssertionError(f"K({k},{n}): recipe {recipe} does not give basis {i}")
    for label, order in sphere_table(k).entries:
        if gcd(order, n) % element_order(K.named[label]):
            raise AssertionError(f"K({k},{n}): order of {label} does not divide ({order},{n})")
    if k in (2, 4) and r == 1:
        lead = sphere_table(k).labels[0]
        if K.named[lead] != n * K.theta:
            raise AssertionError(f"K({k},{n}): i o {lead} != n theta")
    if k in (3, 5) and r == 1:
        # i(nu5 eta8^2) = 2n theta, resp. i(nu9^3 + eta9 eps10 + sigma9 eta16^2) = 2n theta
        xi0 = K.group.zero
        for label in sphere_table(k).labels:
            if label != "mu9":
                xi0 = xi0 + K.named[label]
        if xi0 != 2 * n * K.theta:
            raise AssertionError(f"K({k},{n}): 2n theta relation fails")
    if K.theta_order != _expected_theta_order(k, n):
        raise AssertionError(f"K({k},{n}): theta has order {K.theta_order}")
    if len(image_subgroup(K)) * quotient_order(k, n) != K.group.order:
        raise AssertionError(f"K({k},{n}): order does not match the exact sequence")


def image_subgroup(K: KGroup) -> frozenset[GroupElement]:
    """The subgroup spanned by the named elements (the image of the sphere)."""
    span = {K.group.zero}
    frontier = [K.group.zero]
    gens = [g for g in K.named.values() if g]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(span)
