"""Finite abelian groups given as direct sums of cyclic groups.

Groups are always handed over already in cyclic-decomposition form, so an
element is just a vector of residues. Order-1 slots are allowed and carry the
zero residue; they keep coordinate layouts aligned with printed presentations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "Endo",
    "Orbit",
    "GroupMismatch",
    "CarrierNotClosed",
    "add",
    "scale",
    "element_order",
    "hom_from_images",
    "orbits",
]


class GroupMismatch(ValueError):
    pass


class CarrierNotClosed(ValueError):
    """A generator sent a carrier element outside the carrier."""

    def __init__(self, source, image):
        super().__init__(f"{image} (image of {source}) is not in the carrier")
        self.source = source
        self.image = image


@dataclass(frozen=True)
class AbelianGroup:
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))
        if any(m < 1 for m in self.orders):
            raise ValueError(f"cyclic orders must be >= 1, got {self.orders}")

    def __len__(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.orders))

    def __call__(self, *coeffs: int) -> GroupElement:
        """``G(1, 0, 5)`` builds the element with those coefficients, reduced."""
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        return GroupElement(self, tuple(coeffs))

    def basis(self) -> list[GroupElement]:
        s = len(self.orders)
        return [GroupElement(self, tuple(int(i == j) for j in range(s))) for i in range(s)]

    def elements(self) -> Iterator[GroupElement]:
        """All elements, in lexicographic coefficient order."""
        for c in product(*(range(m) for m in self.orders)):
            yield GroupElement(self, c)

    def invariant_factors(self) -> list[int]:
        """Invariant factors d_1 | d_2 | ... (trivial ones dropped)."""
        return invariant_factors(self.orders)

    def __str__(self):
        if not self.orders:
            return "0"
        return " + ".join(f"Z_{m}" for m in self.orders)


def invariant_factors(orders: Iterable[int]) -> list[int]:
    # split into prime powers, then stack the largest powers per prime
    by_prime: dict[int, list[int]] = {}
    for m in orders:
        p = 2
        while m > 1:
            if m % p == 0:
                q = 1
                while m % p == 0:
                    m //= p
                    q *= p
                by_prime.setdefault(p, []).append(q)
            p += 1
    for powers in by_prime.values():
        powers.sort(reverse=True)
    depth = max((len(v) for v in by_prime.values()), default=0)
    out = [prod(v[i] for v in by_prime.values() if i < len(v)) for i in range(depth)]
    return sorted(out)


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coeffs: tuple[int, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        orders = self.group.orders
        if len(self.coeffs) != len(orders):
            raise ValueError(
                f"expected {len(orders)} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(
            self, "coeffs", tuple(int(c) % m for c, m in zip(self.coeffs, orders))
        )
        object.__setattr__(self, "_hash", hash((self.group.orders, self.coeffs)))

    def __hash__(self):
        return self._hash

    def __add__(self, other: GroupElement) -> GroupElement:
        return add(self, other)

    def __neg__(self) -> GroupElement:
        return scale(-1, self)

    def __sub__(self, other: GroupElement) -> GroupElement:
        return add(self, -other)

    def __rmul__(self, c: int) -> GroupElement:
        return scale(c, self)

    def __lt__(self, other: GroupElement) -> bool:
        return self.coeffs < other.coeffs

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self):
        return f"GroupElement{self.coeffs}"


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    if x.group != y.group:
        raise GroupMismatch(f"cannot add elements of {x.group} and {y.group}")
    return GroupElement(x.group, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def scale(c: int, x: GroupElement) -> GroupElement:
    return GroupElement(x.group, tuple(c * a for a in x.coeffs))


def element_order(x: GroupElement) -> int:
    return lcm(1, *(m // gcd(a, m) for a, m in zip(x.coeffs, x.group.orders)))


class Endo:
    """Additive endomorphism of a cyclic decomposition, fixed by the images of
    the basis generators."""

    __slots__ = ("group", "images", "_rows", "_key")

    def __init__(self, group: AbelianGroup, images: Sequence[GroupElement]):
        images = tuple(images)
        if len(images) != len(group.orders):
            raise ValueError(
                f"need {len(group.orders)} generator images, got {len(images)}"
            )
        for i, (m, img) in enumerate(zip(group.orders, images)):
            if img.group != group:
                raise GroupMismatch(f"image {i} lives in {img.group}, not {group}")
            if scale(m, img):
                raise ValueError(
                    f"generator {i} has order {m} but its image {img} does not"
                    f" satisfy {m}*image == 0"
                )
        self.group = group
        self.images = images
        self._rows = tuple(img.coeffs for img in images)
        self._key = (group.orders, self._rows)

    def apply_coeffs(self, c: Sequence[int]) -> tuple[int, ...]:
        orders = self.group.orders
        out = [0] * len(orders)
        for ci, row in zip(c, self._rows):
            if ci:
                for j, r in enumerate(row):
                    out[j] += ci * r
        return tuple(v % m for v, m in zip(out, orders))

    def __call__(self, x: GroupElement) -> GroupElement:
        if x.group != self.group:
            raise GroupMismatch(f"endomorphism of {self.group} applied to {x.group}")
        return GroupElement(self.group, self.apply_coeffs(x.coeffs))

    def compose(self, other: Endo) -> Endo:
        """``self . other`` (apply ``other`` first)."""
        return Endo(self.group, [self(img) for img in other.images])

    def is_identity(self) -> bool:
        return self.images == tuple(self.group.basis())

    def __eq__(self, other):
        return isinstance(other, Endo) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Endo({self.group}, {list(self._rows)})"


def hom_from_images(group: AbelianGroup, images: Sequence[GroupElement]) -> Endo:
    return Endo(group, images)


@dataclass(frozen=True)
class Orbit:
    representative: GroupElement
    members: frozenset[GroupElement]

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members


def orbits(carrier: Iterable[GroupElement], generators: Iterable[Endo]) -> list[Orbit]:
    """Partition ``carrier`` into orbits under the monoid generated by ``generators``.

    Saturates each seed by breadth-first search. Each orbit's representative
    is its lexicographically smallest coefficient vector, and orbits come back
    sorted by representative, so the result does not depend on iteration
    order of either argument.

    Raises CarrierNotClosed if some generator maps a carrier element outside.
    """
    carrier = list(carrier)
    if not carrier:
        return []
    group = carrier[0].group
    gens = sorted(set(generators), key=lambda e: e._rows)
    for g in gens:
        if g.group != group:
            raise GroupMismatch(f"generator acts on {g.group}, carrier is in {group}")
    points = sorted({x.coeffs for x in carrier})
    label: dict[tuple[int, ...], int] = {c: -1 for c in points}
    # label merges only happen for non-invertible generators
    parent: list[int] = []

    def root(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    applies = [g.apply_coeffs for g in gens]
    for seed in points:
        if label[seed] != -1:
            continue
        lab = len(parent)
        parent.append(lab)
        label[seed] = lab
        queue = deque([seed])
        while queue:
            y = queue.popleft()
            for f in applies:
                z = f(y)
                zl = label.get(z)
                if zl is None:
                    raise CarrierNotClosed(GroupElement(group, y), GroupElement(group, z))
                if zl == -1:
                    label[z] = lab
                    queue.append(z)
                elif zl != lab:
                    a, b = root(zl), root(lab)
                    if a != b:
                        parent[max(a, b)] = min(a, b)

    blocks: dict[int, list[tuple[int, ...]]] = {}
    for c in points:
        blocks.setdefault(root(label[c]), []).append(c)
    out = []
    for members in blocks.values():
        # points are sorted, so members[0] is the lexicographic minimum
        elems = frozenset(GroupElement(group, c) for c in members)
        out.append(Orbit(GroupElement(group, members[0]), elems))
    out.sort(key=lambda o: o.representative.coeffs)
    return out
