"""Self-equivalences of the Moore space and the automorphisms they induce on K_k^n.

A self-equivalence is ``t * iota + eps * (i eta p)``. For odd ``n`` only the
unit ``t`` mod ``n`` matters; for ``2 || n`` the extra class equals
``n * iota`` so ``t`` runs over units mod ``2n`` with ``eps = 0``; for ``4 | n``
both parameters are free.

The induced map is fixed by where it sends ``theta`` and the named elements:

* k = 2, 4, 6:  theta -> t^2 theta,  i o xi -> t (i o xi)
* k = 3, 5, n even:  theta -> t^2 theta + (eps_k(t, n) + eps) xi_0,
  named order-2 elements fixed, where xi_0 is ``i o nu5 eta8^2`` (k=3) or
  ``i o (nu9^3 + eta9 eps10 + sigma9 eta16^2)`` (k=5)
* k = 3, 5, n odd:  theta -> t^2 theta
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .abelian import Endo, hom_from_images
from .kgroups import KGroup, sphere_table
from .numtheory import two_adic_valuation, units

__all__ = [
    "SelfEquivalence",
    "equivalence_params",
    "epsilon_k",
    "epsilon_zero",
    "induced_endo",
    "negation_endo",
    "induced_endos",
]

EpsilonFn = Callable[[int, int, int], int]


@dataclass(frozen=True, order=True)
class SelfEquivalence:
    t: int
    eps: int = 0


def _unit_modulus(n):
    r = two_adic_valuation(n)
    return 2 * n if r == 1 else n


def equivalence_params(k: int, n: int) -> list[SelfEquivalence]:
    """Every self-equivalence class, ascending in ``t`` then ``eps``."""
    r = two_adic_valuation(n)
    eps_range = (0, 1) if r >= 2 else (0,)
    return [SelfEquivalence(t, e) for t in sorted(units(_unit_modulus(n))) for e in eps_range]


def _check_param(n, g):
    r = two_adic_valuation(n)
    m = _unit_modulus(n)
    if g.t % m not in units(m):
        raise ValueError(f"t={g.t} is not a unit mod {m}")
    if g.eps not in (0, 1) or (g.eps and r < 2):
        raise ValueError(f"eps={g.eps} is not allowed for n={n}")


def epsilon_k(t: int, n: int, k: int) -> int:
    """Correction bit for k = 3, 5: the parity of t(t-1)/2, i.e. 1 iff t = 3 mod 4."""
    if t % 2 == 0:
        raise ValueError(f"t must be odd, got {t}")
    if k not in (3, 5):
        raise ValueError(f"epsilon_k is defined for k = 3, 5 only, got {k}")
    return 1 if t % 4 == 3 else 0


def epsilon_zero(t: int, n: int, k: int) -> int:
    """The constant-zero alternative; kept for discrimination tests."""
    return 0


def _xi0(K):
    # the order-2 class added by the correction term
    labels = sphere_table(K.k).labels
    x = K.group.zero
    for label in labels:
        if label != "mu9":
            x = x + K.named[label]
    return x


def induced_endo(K: KGroup, g: SelfEquivalence, epsilon: EpsilonFn = epsilon_k) -> Endo:
    _check_param(K.n, g)
    k, n, t = K.k, K.n, g.t
    theta_image = (t * t) * K.theta
    if k in (2, 4, 6):
        named_images = {label: t * x for label, x in K.named.items()}
    else:
        named_images = dict(K.named)
        if n % 2 == 0:
            theta_image = theta_image + (epsilon(t, n, k) + g.eps) * _xi0(K)
    images = dict(named_images, theta=theta_image)

    def push(recipe):
        x = K.group.zero
        for label, c in recipe.items():
            x = x + c * images[label]
        return x

    phi = hom_from_images(K.group, [push(rec) for rec in K.recipes])
    # named elements that are not basis vectors must land where the formula says
    for label, x in K.named.items():
        if phi(x) != named_images[label]:
            raise AssertionError(
                f"K({k},{n}), {g}: induced map is inconsistent on {label}"
            )
    return phi


def negation_endo(K: KGroup) -> Endo:
    return hom_from_images(K.group, [-b for b in K.group.basis()])


def induced_endos(K: KGroup, epsilon: EpsilonFn = epsilon_k) -> set[Endo]:
    """Distinct induced automorphisms over all self-equivalence classes."""
    return {induced_endo(K, g, epsilon) for g in equivalence_params(K.k, K.n)}
