"""Counting homotopy types of ``P^{2k}(n) u_f e^{4k-1}`` two ways.

The brute-force side enumerates the admissible attaching maps ``T`` inside
K_k^n and splits them into orbits under the induced self-equivalences and the
global sign. The closed-form side evaluates the case table for G_k^n. The two
must agree for every (k, n).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, NamedTuple

from .abelian import GroupElement, Orbit, element_order, orbits
from .action import EpsilonFn, epsilon_k, induced_endos, negation_endo
from .kgroups import GLYPHS, K_RANGE, KGroup, build_K, image_subgroup
from .numtheory import rho, satisfies_star, two_adic_valuation, units

__all__ = [
    "Invariants",
    "invariants",
    "admissible_coefficients",
    "attaching_set",
    "Representative",
    "ClassificationResult",
    "ClassificationMismatch",
    "brute_force_classify",
    "closed_form_G",
    "theorem_branch",
    "representatives_symbolic",
    "cross_validate",
    "DEFAULT_RANGES",
    "to_unicode",
]

# n ranges swept by verification, per k
DEFAULT_RANGES = {2: range(2, 501), 3: range(2, 501), 4: range(2, 301), 5: range(2, 301), 6: range(2, 151)}


def _check(k, n):
    if k not in K_RANGE:
        raise ValueError(f"k must be in 2..6, got {k}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


class Invariants(NamedTuple):
    """Everything the closed form reads off ``n``."""

    r: int
    star: bool
    rho3: int
    rho5: int
    rho7: int
    rho9: int


def invariants(n: int) -> Invariants:
    return Invariants(
        two_adic_valuation(n), satisfies_star(n), rho(3, n), rho(5, n), rho(7, n), rho(9, n)
    )


# ---------------------------------------------------------------------------
# closed form

Branch = tuple[str, Callable[[Invariants], bool], Callable[[Invariants], int]]


def _c3(v):
    return 1 + v.rho3 + 3 * v.rho9


def _c7(v):
    return 1 + 3 * v.rho7


_BRANCHES: dict[int, list[Branch]] = {
    2: [
        ("2!|n", lambda v: v.r == 0, lambda v: 1 + v.rho3),
        ("2||n, 3!|n, star", lambda v: v.r == 1 and not v.rho3 and v.star, lambda v: 1),
        ("2||n, 3!|n, not star", lambda v: v.r == 1 and not v.rho3 and not v.star, lambda v: 2),
        ("2||n, 3|n", lambda v: v.r == 1 and v.rho3, lambda v: 4),
        ("4|n", lambda v: v.r >= 2, lambda v: 3 * (1 + v.rho3)),
    ],
    3: [
        ("2!|n", lambda v: v.r == 0, lambda v: 1),
        ("2||n and star, or 8|n", lambda v: (v.r == 1 and v.star) or v.r >= 3, lambda v: 1),
        ("2||n and not star, or 4||n", lambda v: (v.r == 1 and not v.star) or v.r == 2, lambda v: 2),
    ],
    4: [
        ("2!|n, 3!|n, 5!|n", lambda v: v.r == 0 and not v.rho3 and not v.rho5, lambda v: 1),
        ("2!|n, 3!|n, 5|n, star", lambda v: v.r == 0 and not v.rho3 and v.rho5 and v.star, lambda v: 2),
        ("2!|n, 3!|n, 5|n, not star", lambda v: v.r == 0 and not v.rho3 and v.rho5 and not v.star, lambda v: 3),
        ("2!|n, 3|n", lambda v: v.r == 0 and v.rho3, lambda v: 2 * (1 + 2 * v.rho5)),
        ("2||n, 3!|n, star", lambda v: v.r == 1 and not v.rho3 and v.star, lambda v: 1 + 2 * v.rho5),
        ("2||n, 3!|n, not star", lambda v: v.r == 1 and not v.rho3 and not v.star, lambda v: 2 * (1 + 2 * v.rho5)),
        ("2||n, 3|n", lambda v: v.r == 1 and v.rho3, lambda v: 4 * (1 + 2 * v.rho5)),
        ("4||n", lambda v: v.r == 2, lambda v: 3 * (1 + v.rho3) * (1 + 2 * v.rho5)),
        ("8||n", lambda v: v.r == 3, lambda v: 4 * (1 + v.rho3) * (1 + 2 * v.rho5)),
        ("16|n", lambda v: v.r >= 4, lambda v: 5 * (1 + v.rho3) * (1 + 2 * v.rho5)),
    ],
    5: [
        ("2!|n", lambda v: v.r == 0, lambda v: 1),
        ("2||n and star, or 8|n", lambda v: (v.r == 1 and v.star) or v.r >= 3, lambda v: 8),
        ("2||n and not star, or 4||n", lambda v: (v.r == 1 and not v.star) or v.r == 2, lambda v: 16),
    ],
    6: [
        ("2!|n, 3!|n, 7!|n", lambda v: v.r == 0 and not v.rho3 and not v.rho7, lambda v: 1),
        ("2!|n, 3|n or 7|n", lambda v: v.r == 0 and (v.rho3 or v.rho7), lambda v: _c3(v) * _c7(v)),
        ("2||n, star", lambda v: v.r == 1 and v.star, lambda v: 2),
        ("2||n, not star", lambda v: v.r == 1 and not v.star, lambda v: 4 * _c3(v) * _c7(v)),
        ("4||n", lambda v: v.r == 2, lambda v: 6 * _c3(v) * _c7(v)),
        ("8|n", lambda v: v.r >= 3, lambda v: 5 * _c3(v) * _c7(v)),
    ],
}


def theorem_branch(k: int, n: int) -> tuple[str, int]:
    """The unique case of the counting table that applies, with its value."""
    _check(k, n)
    v = invariants(n)
    hits = [(label, value(v)) for label, test, value in _BRANCHES[k] if test(v)]
    if len(hits) != 1:
        raise AssertionError(f"k={k}, n={n}: {len(hits)} branches match")
    return hits[0]


def closed_form_G(k: int, n: int) -> int:
    return theorem_branch(k, n)[1]


# ---------------------------------------------------------------------------
# admissible attaching maps


def _halved(k, n):
    # the criterion doubles the coefficient exactly here
    return k not in (2, 4) and n % 2 == 1


@lru_cache(maxsize=1024)
def _pm_squares(n):
    sq = {t * t % n for t in units(n)}
    return frozenset(sq | {-s % n for s in sq})


def admissible_coefficients(k: int, n: int) -> frozenset[int]:
    """Coefficients ``a`` of theta (mod its order) allowed by the fibration criterion.

    The condition reads ``a`` (or ``2a`` when k is 3, 5, 6 and n odd) modulo
    ``n`` only, so every lift to the order of theta is included.
    """
    _check(k, n)
    K = build_K(k, n)
    target = _pm_squares(n)
    mult = 2 if _halved(k, n) else 1
    return frozenset(a for a in range(K.theta_order) if mult * a % n in target)


def attaching_set(k: int, n: int) -> frozenset[GroupElement]:
    K = build_K(k, n)
    image = image_subgroup(K)
    return frozenset(a * K.theta + s for a in admissible_coefficients(k, n) for s in image)


# ---------------------------------------------------------------------------
# symbolic decomposition


@lru_cache(maxsize=256)
def _decomposition_table(K: KGroup) -> dict[GroupElement, tuple[int, tuple[int, ...]]]:
    """x -> (a, c) with x = a theta + sum c_j named_j, a minimal, then c minimal
    comparing the last named coefficient first."""
    labels = K.labels
    named = [K.named[label] for label in labels]
    ranges = [range(element_order(x)) for x in named]
    image: dict[GroupElement, tuple[int, ...]] = {}
    for rev in product(*reversed(ranges)):
        c = tuple(reversed(rev))
        s = K.group.zero
        for cj, x in zip(c, named):
            if cj:
                s = s + cj * x
        image.setdefault(s, c)
    table: dict[GroupElement, tuple[int, tuple[int, ...]]] = {}
    for a in range(K.theta_order):
        base = a * K.theta
        for s, c in image.items():
            table.setdefault(base + s, (a, c))
    return table


@dataclass(frozen=True)
class Representative:
    """One orbit: its lexicographically least member, and the member written in
    normal form (``theta_coeff * theta + sum named``)."""

    element: GroupElement
    normal_form: GroupElement
    theta_coeff: int
    named_coeffs: tuple[tuple[str, int], ...]
    half: bool
    n: int

    def symbol(self, unicode: bool = False) -> str:
        th = GLYPHS["theta"] if unicode else "theta"
        a = self.theta_coeff
        if self.half:
            head = f"(1/2){th}" if a == 1 else f"({a}/2){th}"
        elif a == 1:
            head = th
        elif a == 1 + self.n:
            head = f"(1+{self.n}){th}"
        else:
            head = f"{a}{th}"
        terms = [head] if a else []
        comp = "i∘" if unicode else "i*"
        for label, c in self.named_coeffs:
            if c:
                name = GLYPHS[label] if unicode else label
                terms.append(f"{comp}{name}" if c == 1 else f"{c}{comp}{name}")
        return " + ".join(terms) if terms else "0"


def _normal_form(K, orbit_members, table, half):
    n = K.n

    def key(x):
        a, c = table[x]
        ap = 2 * a % n if half else a
        rank = 0 if ap == 1 else (1 if ap == 1 + n else 2)
        return rank, ap, c[::-1], x.coeffs

    best = min(orbit_members, key=key)
    a, c = table[best]
    return best, (2 * a % n if half else a), tuple(zip(K.labels, c))


@dataclass(frozen=True)
class ClassificationResult:
    k: int
    n: int
    branch: str
    closed_form_G: int
    brute_force_G: int
    representatives: tuple[Representative, ...]
    orbits: tuple[Orbit, ...] = field(repr=False, compare=False)

    @property
    def ok(self) -> bool:
        return self.closed_form_G == self.brute_force_G

    @property
    def G(self) -> int:
        return self.brute_force_G


class ClassificationMismatch(AssertionError):
    def __init__(self, result: ClassificationResult):
        self.result = result
        parts = "\n".join(
            f"  [{o.representative.coeffs}] " + " ".join(str(m.coeffs) for m in sorted(o.members))
            for o in result.orbits
        )
        super().__init__(
            f"k={result.k}, n={result.n} ({result.branch}): closed form gives "
            f"{result.closed_form_G}, brute force gives {result.brute_force_G}\n"
            f"orbit partition of K = {build_K(result.k, result.n).group}:\n{parts}"
        )


def brute_force_classify(k: int, n: int, epsilon: EpsilonFn = epsilon_k) -> ClassificationResult:
    """Orbits of the admissible set under self-equivalences and sign."""
    _check(k, n)
    K = build_K(k, n)
    gens = induced_endos(K, epsilon) | {negation_endo(K)}
    orbs = orbits(attaching_set(k, n), gens)
    table = _decomposition_table(K)
    half = _halved(k, n)
    reps = []
    for o in orbs:
        nf, a, named = _normal_form(K, o.members, table, half)
        reps.append(Representative(o.representative, nf, a, named, half, n))
    branch, G = theorem_branch(k, n)
    return ClassificationResult(k, n, branch, G, len(orbs), tuple(reps), tuple(orbs))


def representatives_symbolic(result: ClassificationResult, unicode: bool = False) -> list[str]:
    return [rep.symbol(unicode) for rep in result.representatives]


def cross_validate(k: int, n: int) -> ClassificationResult:
    result = brute_force_classify(k, n)
    if not result.ok:
        raise ClassificationMismatch(result)
    return result


_UNICODE_LABELS = (("!|", "∤"), ("not star", "does not satisfy ★"), ("star", "★"))


def to_unicode(label: str) -> str:
    for a, b in _UNICODE_LABELS:
        label = label.replace(a, b)
    return label
