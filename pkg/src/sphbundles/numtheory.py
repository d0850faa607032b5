"""Elementary number theory for the classification: factorizations, unit groups,
square roots modulo m, and the divisibility predicates used by the counting
formulas.

Everything here works on desk-sized moduli (well below 10**6), so trial
division and per-prime-power scans are exact and fast enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, prod

__all__ = [
    "Factorization",
    "factorize",
    "units",
    "sqrt_solutions",
    "count_sqrt1",
    "satisfies_star",
    "rho",
    "solvable_shifted",
    "solution_vectors",
    "two_adic_valuation",
]


@dataclass(frozen=True)
class Factorization:
    """``n = 2**r * prod(p**e for p, e in odd_factors)`` with the odd primes ascending."""

    n: int
    r: int
    odd_factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if (1 << self.r) * prod(p**e for p, e in self.odd_factors) != self.n:
            raise ValueError(f"factors do not multiply back to {self.n}")
        primes = [p for p, _ in self.odd_factors]
        if primes != sorted(set(primes)) or any(p % 2 == 0 for p in primes):
            raise ValueError("odd_factors must list distinct odd primes in ascending order")
        if any(e < 1 for _, e in self.odd_factors):
            raise ValueError("exponents must be positive")

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.odd_factors)

    @property
    def prime_powers(self) -> list[int]:
        """All maximal prime-power divisors, the power of two first (if any)."""
        out = [1 << self.r] if self.r else []
        return out + [p**e for p, e in self.odd_factors]


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    m = n
    r = 0
    while m % 2 == 0:
        m //= 2
        r += 1
    odd = []
    p = 3
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            odd.append((p, e))
        p += 2
    if m > 1:
        odd.append((m, 1))
    return Factorization(n, r, tuple(odd))


def two_adic_valuation(n: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    return factorize(abs(n)).r


@lru_cache(maxsize=4096)
def units(m: int) -> frozenset[int]:
    """Residues in ``[0, m)`` coprime to ``m``; ``units(1) == {0}``."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return frozenset({0})
    return frozenset(x for x in range(1, m) if gcd(x, m) == 1)


def _crt(residues, moduli) -> tuple[int, int]:
    x, m = 0, 1
    for a, q in zip(residues, moduli):
        # moduli are pairwise coprime prime powers
        x = x + m * ((a - x) * pow(m, -1, q) % q)
        m *= q
    return x % m, m


def sqrt_solutions(a: int, m: int) -> frozenset[int]:
    """Every ``x`` in ``[0, m)`` with ``x*x == a (mod m)``.

    Solved one prime power at a time by direct scan, then glued with CRT.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return frozenset({0})
    per_power = []
    powers = factorize(m).prime_powers
    for q in powers:
        target = a % q
        roots = [x for x in range(q) if x * x % q == target]
        if not roots:
            return frozenset()
        per_power.append(roots)
    return frozenset(_crt(combo, powers)[0] for combo in product(*per_power))


def count_sqrt1(n: int) -> int:
    """Number of solutions of ``x*x == 1 (mod n)``: ``2**(h + u)``."""
    f = factorize(n)
    h = len(f.odd_factors)
    u = 0 if f.r <= 1 else (1 if f.r == 2 else 2)
    return 2 ** (h + u)


def satisfies_star(n: int) -> bool:
    """True when ``n`` has 2-adic valuation at most 1 and all odd primes are 1 mod 4."""
    if n < 2:
        raise ValueError(f"star condition needs n >= 2, got {n}")
    f = factorize(n)
    return f.r <= 1 and all(p % 4 == 1 for p in f.odd_primes)


def rho(q: int, n: int) -> int:
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    return 1 if n % q == 0 else 0


def solvable_shifted(n: int) -> bool:
    """Whether ``x*x == 1 + n (mod 2n)`` has a solution, for even ``n``.

    Odd squares are 1 mod 8, so this needs ``8 | n``; then ``1 + n`` is 1 mod 8
    and 1 modulo every odd prime of ``n``, hence a square on each component.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    return factorize(n).r >= 3


_VECTOR_CASES = {0: lambda r: r == 0, 1: lambda r: r == 2, 2: lambda r: r >= 3, 3: lambda r: r >= 4}


def solution_vectors(n: int, e: int) -> frozenset[tuple[int, ...]]:
    """Sign vectors of the square roots of 1 modulo ``n``.

    Each root ``x`` maps to ``(x mod 2**e, x mod p_1, ..., x mod p_s)`` written
    with signs: a component equal to ``q - 1`` is reported as ``-1``. The
    leading 2-adic component is omitted when ``e == 0``. Only the pairs
    (r=0, e=0), (r=2, e=1), (r>=3, e=2), (r>=4, e=3) are meaningful.
    """
    if e not in _VECTOR_CASES:
        raise ValueError(f"e must be in 0..3, got {e}")
    f = factorize(n)
    if not _VECTOR_CASES[e](f.r):
        raise ValueError(f"(r={f.r}, e={e}) is not a supported pairing")

    def signed(x, q):
        x %= q
        return -1 if q > 2 and x == q - 1 else x

    moduli = ([1 << e] if e else []) + list(f.odd_primes)
    return frozenset(
        tuple(signed(x, q) for q in moduli) for x in sqrt_solutions(1, n)
    )
