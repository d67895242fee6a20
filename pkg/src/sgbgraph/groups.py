"""Cyclic-group arithmetic: factorization, divisors, Mobius, Jordan totient.

Everything here is exact integer arithmetic. Group elements of ``Z_n`` are
residues ``0..n-1`` under addition with identity 0, so the order of the
subgroup generated by a pair reduces to a gcd computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Orders are capped so every derived quantity (fourth powers of the order show
# up in the Hansen-Vukicevic margin) stays cheap to factor and print; Python
# integers are unbounded, so the cap is a usability guard, not an overflow one.
MAX_GROUP_ORDER = 10**6


def factorize(n: int) -> list[tuple[int, int]]:
    """Return the ascending prime-power factorization of ``n`` as (p, e) pairs.

    ``factorize(1)`` is the empty list. Rejects ``n < 1``.
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need a positive integer")
    return list(_factorize_cached(n))


@lru_cache(maxsize=1 << 16)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    rem = n
    d = 2
    while d * d <= rem:
        if rem % d == 0:
            e = 0
            while rem % d == 0:
                rem //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if rem > 1:
        out.append((rem, 1))
    return tuple(out)


def _is_prime(n: int) -> bool:
    return n >= 2 and _factorize_cached(n) == ((n, 1),)


@dataclass(frozen=True)
class CyclicGroupSpec:
    """The cyclic group ``Z_order`` together with its prime factorization."""

    order: int
    factorization: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"group order must be positive, got {self.order}")
        prod = 1
        last = 1
        for p, e in self.factorization:
            if p <= last:
                raise ValueError("factorization primes must be strictly ascending")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            prod *= p**e
            last = p
        if prod != self.order:
            raise ValueError(
                f"factorization product {prod} does not reconstruct order {self.order}"
            )

    @classmethod
    def of(cls, n: int) -> "CyclicGroupSpec":
        """Build the spec for ``Z_n`` by factorizing ``n``."""
        return cls(n, tuple(factorize(n)))


@dataclass(frozen=True)
class SubgroupDescriptor:
    """One subgroup of ``Z_n``: its order and its index ``n / order``.

    ``Z_n`` has exactly one subgroup per divisor, so descriptors are in
    bijection with the divisors of ``n``.
    """

    subgroup_order: int
    index: int


def _divisor_ints(n: int) -> list[int]:
    divs = [1]
    for p, e in _factorize_cached(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def divisors(spec: CyclicGroupSpec) -> list[SubgroupDescriptor]:
    """All subgroups of ``Z_n``, ascending by subgroup order."""
    n = spec.order
    return [SubgroupDescriptor(m, n // m) for m in _divisor_ints(n)]


def mobius(m: int) -> int:
    """The Mobius function: 0 on squareful input, else (-1)^(#prime factors)."""
    if m < 1:
        raise ValueError(f"mobius needs a positive integer, got {m}")
    fact = _factorize_cached(m)
    if any(e > 1 for _, e in fact):
        return 0
    return -1 if len(fact) % 2 else 1


def jordan_totient_2(m: int) -> int:
    """Count the ordered pairs (a, b) in ``Z_m x Z_m`` that generate ``Z_m``.

    Evaluated by Mobius inclusion-exclusion over the divisors of ``m``:
    ``sum mu(d) * (m/d)^2``. Always positive.
    """
    if m < 1:
        raise ValueError(f"jordan_totient_2 needs a positive integer, got {m}")
    total = 0
    for d in _divisor_ints(m):
        mu = mobius(d)
        if mu:
            k = m // d
            total += mu * k * k
    return total


def generated_subgroup_order(a: int, b: int, n: int) -> int:
    """Order of the subgroup of ``Z_n`` generated by the elements ``a`` and ``b``.

    In ``Z_n`` the subgroup generated by {a, b} is the set of multiples of
    ``gcd(a, b, n)``, so its order is ``n // gcd(a, b, n)``.
    """
    if n < 1:
        raise ValueError(f"group order must be positive, got {n}")
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"elements ({a}, {b}) out of range for Z_{n}")
    return n // math.gcd(a, b, n)
