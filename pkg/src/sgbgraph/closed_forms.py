"""Family-specific closed forms for four parameterized cyclic-group families.

Cyclic groups of order p^n, pq, p^2*q and p^2*q^2 (p, q distinct primes) admit
printed closed forms for the star structure, Zagreb and degree-based indices,
all four spectra, and all four energies. This module stores those forms as
literal transcriptions, evaluated directly in (p, q, n); it deliberately
shares no evaluation code with the decomposition pipeline so the two routes
stay independent cross-checks of each other.

Two printed sum-connectivity terms (the p^4*q^2 star of the p2q family and,
in the p2q2 family, that same term plus the q^4-q^2 star term) disagree with
the definitional per-edge sum. They are transcribed as printed; the verify
command reports the discrepancy instead of silently repairing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import StarDecomposition
from .groups import MAX_GROUP_ORDER, CyclicGroupSpec, _is_prime
from .indices import DegreeIndexReport
from .spectral import EnergyReport, ExactEigenvalue, SpectrumMultiset, _merged

FAMILY_KINDS = ("pn", "pq", "p2q", "p2q2", "outside")

CATALOG_PRIMES = (2, 3, 5, 7, 11, 13)


class UnsupportedFamilyError(ValueError):
    """The requested closed form exists only for the four catalog families."""


@dataclass(frozen=True)
class FamilyTag:
    """Which parameterized family a group order belongs to, with parameters.

    ``pn`` carries (p, n); ``pq`` and ``p2q2`` carry p < q; ``p2q`` carries the
    squared prime as p and only requires p != q; ``outside`` carries nothing.
    """

    kind: str
    p: int | None = None
    q: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "outside":
            if (self.p, self.q, self.n) != (None, None, None):
                raise ValueError("outside tag carries no parameters")
            return
        if self.p is None or not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.kind == "pn":
            if self.q is not None:
                raise ValueError("pn tag carries no q")
            if self.n is None or self.n < 1:
                raise ValueError(f"pn exponent must be >= 1, got {self.n}")
            return
        if self.n is not None:
            raise ValueError(f"{self.kind} tag carries no exponent")
        if self.q is None or not _is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")
        if self.kind in ("pq", "p2q2"):
            if not self.p < self.q:
                raise ValueError(f"{self.kind} requires p < q, got ({self.p}, {self.q})")
        elif self.p == self.q:
            raise ValueError(f"p2q requires distinct primes, got ({self.p}, {self.q})")

    @classmethod
    def prime_power(cls, p: int, n: int) -> "FamilyTag":
        return cls("pn", p=p, n=n)

    @classmethod
    def pq(cls, p: int, q: int) -> "FamilyTag":
        return cls("pq", p=p, q=q)

    @classmethod
    def p2q(cls, p: int, q: int) -> "FamilyTag":
        return cls("p2q", p=p, q=q)

    @classmethod
    def p2q2(cls, p: int, q: int) -> "FamilyTag":
        return cls("p2q2", p=p, q=q)

    @classmethod
    def outside(cls) -> "FamilyTag":
        return cls("outside")

    def order(self) -> int:
        if self.kind == "pn":
            return self.p**self.n
        if self.kind == "pq":
            return self.p * self.q
        if self.kind == "p2q":
            return self.p * self.p * self.q
        if self.kind == "p2q2":
            return (self.p * self.q) ** 2
        raise UnsupportedFamilyError("outside tag has no defining order")


def detect_family(spec: CyclicGroupSpec) -> FamilyTag:
    """Classify by the exponent multiset of the factorization."""
    fact = spec.factorization
    if spec.order == 1:
        return FamilyTag.outside()
    if len(fact) == 1:
        p, e = fact[0]
        return FamilyTag.prime_power(p, e)
    if len(fact) == 2:
        (p1, e1), (p2, e2) = fact
        if e1 == 1 and e2 == 1:
            return FamilyTag.pq(p1, p2)
        if {e1, e2} == {1, 2}:
            squared, other = (p1, p2) if e1 == 2 else (p2, p1)
            return FamilyTag.p2q(squared, other)
        if e1 == 2 and e2 == 2:
            return FamilyTag.p2q2(p1, p2)
    return FamilyTag.outside()


def _require_catalog(tag: FamilyTag) -> None:
    if tag.kind == "outside":
        raise UnsupportedFamilyError("no closed form outside the four families")


# ---------------------------------------------------------------------------
# Structure: the printed star component lists.
# ---------------------------------------------------------------------------


def catalog_structure(tag: FamilyTag) -> StarDecomposition:
    """The published star multiset for the family."""
    _require_catalog(tag)
    p, q, n = tag.p, tag.q, tag.n
    if tag.kind == "pn":
        stars = [(1, 1)]
        stars += [(p**k, p ** (2 * k - 2) * (p**2 - 1)) for k in range(1, n + 1)]
    elif tag.kind == "pq":
        stars = [
            (1, 1),
            (p, p**2 - 1),
            (q, q**2 - 1),
            (p * q, p**2 * q**2 - p**2 - q**2 + 1),
        ]
    elif tag.kind == "p2q":
        stars = [
            (1, 1),
            (p, p**2 - 1),
            (p**2, p**4 - p**2),
            (q, q**2 - 1),
            (p * q, p**2 * q**2 - p**2 - q**2 + 1),
            (p**2 * q, p**4 * q**2 - p**2 * q**2 - p**4 + p**2),
        ]
    else:
        stars = [
            (1, 1),
            (p, p**2 - 1),
            (p**2, p**4 - p**2),
            (q, q**2 - 1),
            (q**2, q**4 - q**2),
            (p * q, p**2 * q**2 - p**2 - q**2 + 1),
            (p**2 * q, p**4 * q**2 - p**2 * q**2 - p**4 + p**2),
            (p * q**2, p**2 * q**4 - p**2 * q**2 - q**4 + q**2),
            (p**2 * q**2, p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2),
        ]
    stars.sort()
    return StarDecomposition(tag.order(), tuple(stars))


# ---------------------------------------------------------------------------
# Zagreb indices.
# ---------------------------------------------------------------------------


def catalog_zagreb(tag: FamilyTag) -> tuple[int, int]:
    """(M1, M2) from the printed polynomials; the pn family has no published
    Zagreb closed form, so it is evaluated from the printed structure list
    with a locally inlined star sum."""
    _require_catalog(tag)
    p, q = tag.p, tag.q
    if tag.kind == "pn":
        decomp = catalog_structure(tag)
        sum_sq = sum(s * s for _, s in decomp.entries)
        order = tag.order()
        return order**2 + sum_sq, sum_sq
    if tag.kind == "pq":
        m1 = (
            p**4 * q**4 - 2 * p**4 * q**2 - 2 * p**2 * q**4 + 5 * p**2 * q**2
            + 2 * p**4 + 2 * q**4 - 4 * p**2 - 4 * q**2 + 4
        )
        m2 = (
            p**4 * q**4 - 2 * p**4 * q**2 - 2 * p**2 * q**4 + 4 * p**2 * q**2
            + 2 * p**4 + 2 * q**4 - 4 * p**2 - 4 * q**2 + 4
        )
        return m1, m2
    if tag.kind == "p2q":
        m1 = (
            p**8 * q**4 + 2 * p**4 * q**4 + 4 * p**6 * q**2 - 2 * p**6 * q**4
            + 2 * p**8 + 4 * p**4 - 2 * p**8 * q**2 - 3 * p**4 * q**2 - 4 * p**6
            - 2 * p**2 * q**4 + 4 * p**2 * q**2 + 2 * q**4 - 4 * p**2 - 4 * q**2 + 4
        )
        m2 = (
            p**8 * q**4 + 2 * p**4 * q**4 + 4 * p**6 * q**2 - 2 * p**6 * q**4
            + 2 * p**8 + 4 * p**4 - 2 * p**8 * q**2 - 4 * p**4 * q**2 - 4 * p**6
            - 2 * p**2 * q**4 + 4 * p**2 * q**2 + 2 * q**4 - 4 * p**2 - 4 * q**2 + 4
        )
        return m1, m2
    m1 = (
        p**8 * q**8 - 2 * p**6 * q**8 - 2 * p**8 * q**6 - 4 * p**4 * q**6
        - 4 * p**6 * q**4 - 2 * p**2 * q**8 - 2 * p**8 * q**2 + 2 * p**4 * q**8
        + 2 * p**8 * q**4 + 4 * p**6 * q**6 + 5 * p**4 * q**4 + 4 * p**2 * q**6
        + 4 * p**6 * q**2 - 4 * p**2 * q**4 - 4 * p**4 * q**2 + 4 * p**2 * q**2
        + 2 * q**8 + 2 * p**8 - 4 * q**6 - 4 * p**6 + 4 * q**4 + 4 * p**4
        - 4 * p**2 - 4 * q**2 + 4
    )
    m2 = (
        p**8 * q**8 - 2 * p**6 * q**8 - 2 * p**8 * q**6 - 4 * p**4 * q**6
        - 4 * p**6 * q**4 - 2 * p**2 * q**8 - 2 * p**8 * q**2 + 2 * p**4 * q**8
        + 2 * p**8 * q**4 + 4 * p**6 * q**6 + 4 * p**4 * q**4 + 4 * p**2 * q**6
        + 4 * p**6 * q**2 - 4 * p**2 * q**4 - 4 * p**4 * q**2 + 4 * p**2 * q**2
        + 2 * q**8 + 2 * p**8 - 4 * q**6 - 4 * p**6 + 4 * q**4 + 4 * p**4
        - 4 * p**2 - 4 * q**2 + 4
    )
    return m1, m2


# ---------------------------------------------------------------------------
# Degree-based indices.
# ---------------------------------------------------------------------------


def catalog_degree_indices(tag: FamilyTag) -> DegreeIndexReport:
    """The printed radical expressions (pn again falls back to the printed
    structure list with locally inlined per-star sums)."""
    _require_catalog(tag)
    sqrt = math.sqrt
    p, q = tag.p, tag.q
    if tag.kind == "pn":
        r = abc = ga = h = sci = 0.0
        for _, s in catalog_structure(tag).entries:
            r += sqrt(s)
            abc += sqrt(s * s - s)
            ga += 2.0 * s * sqrt(s) / (1 + s)
            h += 2.0 * s / (1 + s)
            sci += s / sqrt(1 + s)
        return DegreeIndexReport(randic=r, abc=abc, ga=ga, harmonic=h, sci=sci)
    if tag.kind == "pq":
        r = 1 + sqrt(p**2 - 1) * (1 + sqrt(q**2 - 1)) + sqrt(q**2 - 1)
        abc = (
            sqrt(p**2 - 1)
            * (sqrt(p**2 - 2) + sqrt((q**2 - 1) * (p**2 * q**2 - p**2 - q**2)))
            + sqrt((q**2 - 1) * (q**2 - 2))
        )
        ga = (
            1
            + 2 * sqrt((p**2 - 1) ** 3)
            * (1 / p**2 + sqrt((q**2 - 1) ** 3) / (p**2 * q**2 - p**2 - q**2 + 2))
            + 2 * sqrt((q**2 - 1) ** 3) / q**2
        )
        h = (
            1
            + 2 * (p**2 - 1)
            * (1 / p**2 + (q**2 - 1) / (p**2 * q**2 - p**2 - q**2 + 2))
            + 2 * (q**2 - 1) / q**2
        )
        sci = (
            1 / sqrt(2)
            + (p**2 - 1)
            * (1 / p + (q**2 - 1) / sqrt(p**2 * q**2 - p**2 - q**2 + 2))
            + (q**2 - 1) / q
        )
        return DegreeIndexReport(randic=r, abc=abc, ga=ga, harmonic=h, sci=sci)
    if tag.kind == "p2q":
        r = 1 + sqrt(p**2 - 1) * (p + 1) * (1 + sqrt(q**2 - 1)) + sqrt(q**2 - 1)
        abc = (
            sqrt(p**2 - 1)
            * (
                sqrt(p**2 - 2)
                + p * sqrt(p**4 - p**2 - 1)
                + sqrt((q**2 - 1) * (p**2 * q**2 - p**2 - q**2))
                + p * sqrt((q**2 - 1) * (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 - 1))
            )
            + sqrt((q**2 - 1) * (q**2 - 2))
        )
        ga = (
            1
            + 2 * sqrt((p**2 - 1) ** 3)
            * (
                1 / p**2
                + p**3 / (p**4 - p**2 + 1)
                + sqrt((q**2 - 1) ** 3) / (p**2 * q**2 - p**2 - q**2 + 2)
                + p**3 * sqrt((q**2 - 1) ** 3)
                / (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 1)
            )
            + 2 * sqrt((q**2 - 1) ** 3) / q**2
        )
        h = (
            1
            + 2 * (p**2 - 1)
            * (
                1 / p**2
                + p**2 / (p**4 - p**2 + 1)
                + (q**2 - 1) / (p**2 * q**2 - p**2 - q**2 + 2)
                + p**2 * (q**2 - 1) / (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 1)
            )
            + 2 * (q**2 - 1) / q**2
        )
        # Final bracket term as printed: no radical on the denominator and a
        # +2 constant, unlike the definitional s/sqrt(1+s).
        sci = (
            1 / sqrt(2)
            + (p**2 - 1)
            * (
                1 / p
                + p**2 / sqrt(p**4 - p**2 + 1)
                + (q**2 - 1) / sqrt(p**2 * q**2 - p**2 - q**2 + 2)
                + p**2 * (q**2 - 1) / (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 2)
            )
            + (q**2 - 1) / q
        )
        return DegreeIndexReport(randic=r, abc=abc, ga=ga, harmonic=h, sci=sci)
    r = (
        1
        + sqrt(p**2 - 1) * (p + 1 + sqrt(q**2 - 1) * (1 + p + q + p * q))
        + sqrt(q**2 - 1) * (q + 1)
    )
    abc = (
        sqrt(p**2 - 1)
        * (
            sqrt(p**2 - 2)
            + p * sqrt(p**4 - p**2 - 1)
            + sqrt((q**2 - 1) * (p**2 * q**2 - p**2 - q**2))
            + q * sqrt((q**2 - 1) * (p**2 * q**4 - p**2 * q**2 - q**4 + q**2 - 1))
            + p * sqrt((q**2 - 1) * (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 - 1))
            + p * q
            * sqrt((q**2 - 1) * (p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2 - 1))
        )
        + sqrt(q**2 - 1) * (sqrt(q**2 - 2) + q * sqrt(q**4 - q**2 - 1))
    )
    ga = (
        1
        + 2 * sqrt((p**2 - 1) ** 3)
        * (
            1 / p**2
            + p**3 / (p**4 - p**2 + 1)
            + sqrt((q**2 - 1) ** 3) / (p**2 * q**2 - p**2 - q**2 + 2)
            + q**3 * sqrt((q**2 - 1) ** 3)
            / (p**2 * q**4 - p**2 * q**2 - q**4 + q**2 + 1)
            + p**3 * sqrt((q**2 - 1) ** 3)
            / (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 1)
            + p**3 * q**3 * sqrt((q**2 - 1) ** 3)
            / (p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2 + 1)
        )
        + 2 * sqrt((q**2 - 1) ** 3) * (1 / q**2 + q**3 / (q**4 - q**2 + 1))
    )
    h = (
        1
        + 2 * (p**2 - 1)
        * (
            1 / p**2
            + p**2 / (p**4 - p**2 + 1)
            + (q**2 - 1) / (p**2 * q**2 - p**2 - q**2 + 2)
            + p**2 * (q**2 - 1) / (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 1)
            + q**2 * (q**2 - 1) / (p**2 * q**4 - p**2 * q**2 - q**4 + q**2 + 1)
            + p**2 * q**2 * (q**2 - 1)
            / (p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2 + 1)
        )
        + 2 * (q**2 - 1) * (1 / q**2 + q**2 / (q**4 - q**2 + 1))
    )
    # Two terms below are as printed rather than definitional: the p^4*q^2
    # star term (no radical, +2) and the (q^2-1) numerator in the last bracket
    # where the definitional sum has q^2.
    sci = (
        1 / sqrt(2)
        + (p**2 - 1)
        * (
            1 / p
            + p**2 / sqrt(p**4 - p**2 + 1)
            + (q**2 - 1) / sqrt(p**2 * q**2 - p**2 - q**2 + 2)
            + p**2 * (q**2 - 1) / (p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 2)
            + q**2 * (q**2 - 1) / sqrt(p**2 * q**4 - p**2 * q**2 - q**4 + q**2 + 1)
            + p**2 * q**2 * (q**2 - 1)
            / sqrt(p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2 + 1)
        )
        + (q**2 - 1) * (1 / q + (q**2 - 1) / sqrt(q**4 - q**2 + 1))
    )
    return DegreeIndexReport(randic=r, abc=abc, ga=ga, harmonic=h, sci=sci)


# ---------------------------------------------------------------------------
# Spectra.
# ---------------------------------------------------------------------------


def _pm(items: list, coeff: int, radicand: int) -> None:
    items.append((ExactEigenvalue.of(coeff, radicand), 1))
    items.append((ExactEigenvalue.of(-coeff, radicand), 1))


def catalog_spectra(tag: FamilyTag) -> dict[str, SpectrumMultiset]:
    """All four printed spectra, keyed "A", "L", "Q", "CN"."""
    _require_catalog(tag)
    ev = ExactEigenvalue.of
    p, q, n = tag.p, tag.q, tag.n
    a_items: list = []
    lq_items: list = []
    cn_items: list = []
    if tag.kind == "pn":
        zeros = p ** (2 * n) - n - 1
        a_items.append((ev(0), zeros))
        _pm(a_items, 1, 1)
        for k in range(1, n + 1):
            _pm(a_items, p ** (k - 1), p**2 - 1)
        lq_items += [(ev(0), n + 1), (ev(1), zeros), (ev(2), 1)]
        lq_items += [(ev(p ** (2 * k) - p ** (2 * k - 2) + 1), 1) for k in range(1, n + 1)]
        cn_items += [(ev(0), n + 2), (ev(-1), zeros)]
        cn_items += [(ev(p ** (2 * k) - p ** (2 * k - 2) - 1), 1) for k in range(1, n + 1)]
    elif tag.kind == "pq":
        zeros = p**2 * q**2 - 4
        a_items.append((ev(0), zeros))
        _pm(a_items, 1, 1)
        _pm(a_items, 1, p**2 - 1)
        _pm(a_items, 1, q**2 - 1)
        _pm(a_items, 1, (p**2 - 1) * (q**2 - 1))
        lq_items += [
            (ev(0), 4),
            (ev(1), zeros),
            (ev(2), 1),
            (ev(p**2), 1),
            (ev(q**2), 1),
            (ev(p**2 * q**2 - p**2 - q**2 + 2), 1),
        ]
        cn_items += [
            (ev(0), 5),
            (ev(-1), zeros),
            (ev(p**2 - 2), 1),
            (ev(q**2 - 2), 1),
            (ev(p**2 * q**2 - p**2 - q**2), 1),
        ]
    elif tag.kind == "p2q":
        zeros = p**4 * q**2 - 6
        a_items.append((ev(0), zeros))
        _pm(a_items, 1, 1)
        _pm(a_items, 1, p**2 - 1)
        _pm(a_items, 1, q**2 - 1)
        _pm(a_items, p, p**2 - 1)
        _pm(a_items, 1, (p**2 - 1) * (q**2 - 1))
        _pm(a_items, p, (p**2 - 1) * (q**2 - 1))
        lq_items += [
            (ev(0), 6),
            (ev(1), zeros),
            (ev(2), 1),
            (ev(p**2), 1),
            (ev(q**2), 1),
            (ev(p**4 - p**2 + 1), 1),
            (ev(p**2 * q**2 - p**2 - q**2 + 2), 1),
            (ev(p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 1), 1),
        ]
        cn_items += [
            (ev(0), 7),
            (ev(-1), zeros),
            (ev(p**2 - 2), 1),
            (ev(q**2 - 2), 1),
            (ev(p**4 - p**2 - 1), 1),
            (ev(p**2 * q**2 - p**2 - q**2), 1),
            (ev(p**4 * q**2 - p**2 * q**2 - p**4 + p**2 - 1), 1),
        ]
    else:
        zeros = p**4 * q**4 - 9
        both = (p**2 - 1) * (q**2 - 1)
        a_items.append((ev(0), zeros))
        _pm(a_items, 1, 1)
        _pm(a_items, 1, p**2 - 1)
        _pm(a_items, 1, q**2 - 1)
        _pm(a_items, p, p**2 - 1)
        _pm(a_items, q, q**2 - 1)
        _pm(a_items, 1, both)
        _pm(a_items, p, both)
        _pm(a_items, q, both)
        _pm(a_items, p * q, both)
        lq_items += [
            (ev(0), 9),
            (ev(1), zeros),
            (ev(2), 1),
            (ev(p**2), 1),
            (ev(q**2), 1),
            (ev(p**4 - p**2 + 1), 1),
            (ev(q**4 - q**2 + 1), 1),
            (ev(p**2 * q**2 - p**2 - q**2 + 2), 1),
            (ev(p**4 * q**2 - p**2 * q**2 - p**4 + p**2 + 1), 1),
            (ev(p**2 * q**4 - p**2 * q**2 - q**4 + q**2 + 1), 1),
            (ev(p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2 + 1), 1),
        ]
        cn_items += [
            (ev(0), 10),
            (ev(-1), zeros),
            (ev(p**2 - 2), 1),
            (ev(q**2 - 2), 1),
            (ev(p**4 - p**2 - 1), 1),
            (ev(q**4 - q**2 - 1), 1),
            (ev(p**2 * q**2 - p**2 - q**2), 1),
            (ev(p**4 * q**2 - p**2 * q**2 - p**4 + p**2 - 1), 1),
            (ev(p**2 * q**4 - p**2 * q**2 - q**4 + q**2 - 1), 1),
            (ev(p**4 * q**4 - p**2 * q**4 - p**4 * q**2 + p**2 * q**2 - 1), 1),
        ]
    return {
        "A": _merged("A", a_items),
        "L": _merged("L", lq_items),
        "Q": _merged("Q", lq_items),
        "CN": _merged("CN", cn_items),
    }


# ---------------------------------------------------------------------------
# Energies.
# ---------------------------------------------------------------------------


def catalog_vertex_count(tag: FamilyTag) -> int:
    """|V| as printed alongside the energy comparison formulas."""
    _require_catalog(tag)
    p, q, n = tag.p, tag.q, tag.n
    if tag.kind == "pn":
        return p ** (2 * n) + n + 1
    if tag.kind == "pq":
        return p**2 * q**2 + 4
    if tag.kind == "p2q":
        return p**4 * q**2 + 6
    return p**4 * q**4 + 9


def catalog_energies(tag: FamilyTag) -> EnergyReport:
    """The printed energy formulas, with flags judged from those values."""
    _require_catalog(tag)
    sqrt = math.sqrt
    p, q, n = tag.p, tag.q, tag.n
    if tag.kind == "pn":
        e = 2 + 2 * sqrt(p**2 - 1) * ((p**n - 1) / (p - 1))
        le_exact = Fraction(2 * p ** (4 * n) + 2 * n**2 + 4 * n + 2, p ** (2 * n) + n + 1)
        e_cn = 2 * p ** (2 * n) - 2 * n - 2
    elif tag.kind == "pq":
        e = 2 + 2 * sqrt(p**2 - 1) * (1 + sqrt(q**2 - 1)) + 2 * sqrt(q**2 - 1)
        le_exact = Fraction(2 * p**4 * q**4 + 32, p**2 * q**2 + 4)
        e_cn = 2 * p**2 * q**2 - 8
    elif tag.kind == "p2q":
        e = 2 + 2 * sqrt(p**2 - 1) * ((1 + p) * (1 + sqrt(q**2 - 1))) + 2 * sqrt(q**2 - 1)
        le_exact = Fraction(2 * p**8 * q**4 + 72, p**4 * q**2 + 6)
        e_cn = 2 * p**4 * q**2 - 12
    else:
        e = (
            2
            + 2 * (1 + p) * sqrt(p**2 - 1)
            + 2 * (1 + q) * sqrt(q**2 - 1)
            + 2 * (1 + p + q + p * q) * sqrt((p**2 - 1) * (q**2 - 1))
        )
        le_exact = Fraction(2 * p**8 * q**8 + 162, p**4 * q**4 + 9)
        e_cn = 2 * p**4 * q**4 - 18
    v = catalog_vertex_count(tag)
    order = tag.order()
    baseline = 2 * (v - 1)
    cn_baseline = 2 * (v - 1) * (v - 2)
    le = float(le_exact)
    return EnergyReport(
        e=e,
        le=le,
        le_plus=le,
        e_cn=float(e_cn),
        avg_degree_shift=Fraction(2 * order * order, v),
        hypoenergetic=e < v,
        hyperenergetic=e > baseline,
        l_hyper=le_exact > baseline,
        q_hyper=le_exact > baseline,
        cn_hyper=e_cn > cn_baseline,
        e_le_margin=le - e,
    )


# ---------------------------------------------------------------------------
# Instance enumeration for sweeps and verification.
# ---------------------------------------------------------------------------


def catalog_instances(
    max_order: int = MAX_GROUP_ORDER, primes: tuple[int, ...] = CATALOG_PRIMES
) -> list[FamilyTag]:
    """Every catalog tag with parameters drawn from ``primes`` whose order is
    within ``max_order``, sorted by order."""
    tags: list[FamilyTag] = []
    for p in primes:
        k = 1
        while p**k <= max_order:
            tags.append(FamilyTag.prime_power(p, k))
            k += 1
    for i, p in enumerate(primes):
        for q in primes[i + 1 :]:
            if p * q <= max_order:
                tags.append(FamilyTag.pq(p, q))
            if p**2 * q**2 <= max_order:
                tags.append(FamilyTag.p2q2(p, q))
    for p in primes:
        for q in primes:
            if p != q and p**2 * q <= max_order:
                tags.append(FamilyTag.p2q(p, q))
    tags.sort(key=lambda t: (t.order(), t.kind, t.p or 0, t.q or 0, t.n or 0))
    return tags
