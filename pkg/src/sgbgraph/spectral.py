"""Exact spectra, a numeric Jacobi cross-check, and the four graph energies.

A star with s leaves has adjacency spectrum {0^(s-1), +sqrt(s), -sqrt(s)},
Laplacian and signless-Laplacian spectrum {0, 1^(s-1), s+1}, and
common-neighborhood spectrum {0, (-1)^(s-1), s-1}. The graph is a disjoint
union of stars, so its spectra are the multiset unions of those, which this
module represents exactly as rational multiples of square roots.

The numeric path is an in-house cyclic Jacobi solver (numba-compiled) used
only as an independent oracle for the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering

import numpy as np
from numba import njit

from .graphs import DenseSymmetricMatrix, StarDecomposition, graph_stats

MAX_SWEEPS = 100

_MINUS = "−"
_ROOT = "√"

SPECTRUM_KINDS = ("A", "L", "Q", "CN")
_SPECTRUM_ALIASES = {
    "a": "A",
    "adjacency": "A",
    "l": "L",
    "laplacian": "L",
    "q": "Q",
    "signless_laplacian": "Q",
    "cn": "CN",
    "common_neighborhood": "CN",
}

# The matrix to assemble when numerically cross-checking each spectrum kind.
MATRIX_KIND_FOR_SPECTRUM = {
    "A": "adjacency",
    "L": "laplacian",
    "Q": "signless_laplacian",
    "CN": "common_neighborhood",
}


class NonConvergenceError(RuntimeError):
    """The Jacobi sweep limit was reached before the tolerance was met."""


@lru_cache(maxsize=1 << 16)
def _square_free(k: int) -> tuple[int, int]:
    """Split ``k = outer^2 * core`` with ``core`` squarefree.

    Trial division runs only to the cube root: past it the remainder has at
    most two prime factors, so it is 1, p, p*q (both squarefree) or p^2,
    which a single integer-sqrt test detects.
    """
    outer, core = 1, 1
    d = 2
    while d * d * d <= k:
        if k % d == 0:
            e = 0
            while k % d == 0:
                k //= d
                e += 1
            outer *= d ** (e // 2)
            if e % 2:
                core *= d
        d += 1 if d == 2 else 2
    if k > 1:
        r = math.isqrt(k)
        if r * r == k:
            outer *= r
        else:
            core *= k
    return outer, core


@total_ordering
@dataclass(frozen=True)
class ExactEigenvalue:
    """A number of the form coefficient * sqrt(radicand), kept canonical.

    The radicand is a squarefree positive integer (1 means the value is
    rational) and a zero coefficient forces radicand 1, so equal values have
    equal field tuples. Build instances through :meth:`of`.
    """

    coefficient: Fraction
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 1:
            raise ValueError(f"radicand must be >= 1, got {self.radicand}")
        if self.coefficient == 0 and self.radicand != 1:
            raise ValueError("zero must be stored as coefficient 0, radicand 1")
        if _square_free(self.radicand)[0] != 1:
            raise ValueError(f"radicand {self.radicand} is not squarefree")

    @classmethod
    def of(cls, coefficient, radicand: int = 1) -> "ExactEigenvalue":
        """Canonicalize ``coefficient * sqrt(radicand)``, extracting squares."""
        c = Fraction(coefficient)
        if radicand < 0:
            raise ValueError(f"radicand must be non-negative, got {radicand}")
        if c == 0 or radicand == 0:
            return cls(Fraction(0), 1)
        outer, core = _square_free(radicand)
        return cls(c * outer, core)

    @property
    def value(self) -> float:
        return float(self.coefficient) * math.sqrt(self.radicand)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    @property
    def is_integer(self) -> bool:
        return self.radicand == 1 and self.coefficient.denominator == 1

    def _order_key(self) -> tuple[int, Fraction]:
        c = self.coefficient
        sgn = (c > 0) - (c < 0)
        return sgn, sgn * c * c * self.radicand

    def __lt__(self, other: "ExactEigenvalue") -> bool:
        if not isinstance(other, ExactEigenvalue):
            return NotImplemented
        return self._order_key() < other._order_key()

    def render(self) -> str:
        """Human form: ``25``, ``−1``, ``√3``, ``2√2``, ``−2√6``, ``3/2``."""
        c, k = self.coefficient, self.radicand
        if k == 1:
            return _fmt_rational(c)
        if c == 1:
            return _ROOT + str(k)
        if c == -1:
            return _MINUS + _ROOT + str(k)
        return _fmt_rational(c) + _ROOT + str(k)


def _fmt_rational(c: Fraction) -> str:
    return str(c).replace("-", _MINUS)


def _normalize_spectrum_kind(kind: str) -> str:
    key = kind.strip().lower()
    key = _SPECTRUM_ALIASES.get(key, key.upper())
    if key not in SPECTRUM_KINDS:
        raise ValueError(f"unknown spectrum kind {kind!r}; expected one of {SPECTRUM_KINDS}")
    return key


@dataclass(frozen=True)
class SpectrumMultiset:
    """An exact spectrum: (eigenvalue, multiplicity) pairs, descending."""

    kind: str
    pairs: tuple[tuple[ExactEigenvalue, int], ...]

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.pairs)

    def expand_floats(self) -> list[float]:
        """All eigenvalues as floats, ascending, one per multiplicity.

        Only sensible for dense-sized spectra; multiplicities of large groups
        are astronomically big.
        """
        out: list[float] = []
        for ev, mult in reversed(self.pairs):
            out.extend([ev.value] * mult)
        return out

    def exact_trace(self) -> Fraction:
        """Sum of all eigenvalues; raises if irrational parts fail to cancel."""
        per_radicand: dict[int, Fraction] = {}
        for ev, mult in self.pairs:
            acc = per_radicand.get(ev.radicand, Fraction(0)) + ev.coefficient * mult
            per_radicand[ev.radicand] = acc
        rational = per_radicand.pop(1, Fraction(0))
        for k, c in per_radicand.items():
            if c != 0:
                raise ValueError(f"trace has an irrational residue {c}*sqrt({k})")
        return rational

    def exact_trace_of_squares(self) -> Fraction:
        total = Fraction(0)
        for ev, mult in self.pairs:
            total += ev.coefficient * ev.coefficient * ev.radicand * mult
        return total


def _merged(kind: str, items: list[tuple[ExactEigenvalue, int]]) -> SpectrumMultiset:
    acc: dict[ExactEigenvalue, int] = {}
    for ev, mult in items:
        if mult:
            acc[ev] = acc.get(ev, 0) + mult
    pairs = tuple(sorted(acc.items(), key=lambda kv: kv[0], reverse=True))
    return SpectrumMultiset(kind, pairs)


def closed_form_spectrum(decomp: StarDecomposition, kind: str) -> SpectrumMultiset:
    """Exact spectrum of the chosen matrix, merged across the star components."""
    kind = _normalize_spectrum_kind(kind)
    items: list[tuple[ExactEigenvalue, int]] = []
    for _, s in decomp.entries:
        if kind == "A":
            items.append((ExactEigenvalue.of(0), s - 1))
            items.append((ExactEigenvalue.of(1, s), 1))
            items.append((ExactEigenvalue.of(-1, s), 1))
        elif kind in ("L", "Q"):
            items.append((ExactEigenvalue.of(0), 1))
            items.append((ExactEigenvalue.of(1), s - 1))
            items.append((ExactEigenvalue.of(s + 1), 1))
        else:
            items.append((ExactEigenvalue.of(0), 1))
            items.append((ExactEigenvalue.of(-1), s - 1))
            items.append((ExactEigenvalue.of(s - 1), 1))
    return _merged(kind, items)


# ---------------------------------------------------------------------------
# Numeric oracle: cyclic Jacobi rotations on a private working copy.
# ---------------------------------------------------------------------------


@njit(cache=True)
def _off_norm_sq(a):
    m = a.shape[0]
    s = 0.0
    for i in range(m - 1):
        for j in range(i + 1, m):
            s += 2.0 * a[i, j] * a[i, j]
    return s


@njit(cache=True)
def _jacobi_sweeps(a, tol, max_sweeps):
    """Diagonalize symmetric ``a`` in place; return sweeps used or -1.

    Terminates when the off-diagonal Frobenius norm drops below ``tol``
    (strictly), so tol = 0 can never converge. Early sweeps skip rotations on
    entries far below the current off-norm; later sweeps rotate every nonzero
    entry, which restores the classical quadratic convergence.
    """
    m = a.shape[0]
    if m < 2:
        return 0 if math.sqrt(_off_norm_sq(a)) < tol else -1
    for sweep in range(max_sweeps):
        off = math.sqrt(_off_norm_sq(a))
        if off < tol:
            return sweep
        thresh = 0.2 * off / (m * m) if sweep < 3 else 0.0
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = a[p, q]
                if apq == 0.0 or abs(apq) <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                for i in range(m):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = aip * c - aiq * s
                        a[p, i] = a[i, p]
                        a[i, q] = aiq * c + aip * s
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    off = math.sqrt(_off_norm_sq(a))
    return max_sweeps if off < tol else -1


def _diagonal_blocks(a: np.ndarray) -> list[tuple[int, int]]:
    """Split indices into maximal ranges with exactly-zero off-range entries."""
    d = a.shape[0]
    nz = a != 0.0
    np.fill_diagonal(nz, True)
    # Furthest nonzero column in each row; symmetric input makes rows enough.
    last = d - 1 - np.argmax(nz[:, ::-1], axis=1)
    blocks: list[tuple[int, int]] = []
    start = 0
    reach = 0
    for i in range(d):
        if last[i] > reach:
            reach = int(last[i])
        if i == reach:
            blocks.append((start, i + 1))
            start = i + 1
            reach = i + 1
    return blocks


def numeric_spectrum(matrix: DenseSymmetricMatrix, tol: float) -> list[float]:
    """All eigenvalues, ascending, to absolute accuracy ``tol``.

    The matrix is block-diagonal for our graphs, so exactly-zero blocks are
    solved independently with a tolerance share of tol/sqrt(#blocks), keeping
    the global off-diagonal Frobenius norm below ``tol`` at termination.
    """
    if not math.isfinite(tol) or tol < 0:
        raise ValueError(f"tolerance must be a non-negative finite number, got {tol}")
    a = np.array(matrix.entries, dtype=np.float64)
    blocks = _diagonal_blocks(a)
    share = tol / math.sqrt(len(blocks)) if blocks else tol
    values: list[np.ndarray] = []
    for lo, hi in blocks:
        blk = np.ascontiguousarray(a[lo:hi, lo:hi])
        sweeps = _jacobi_sweeps(blk, share, MAX_SWEEPS)
        if sweeps < 0:
            raise NonConvergenceError(
                f"Jacobi failed to reach tol={tol} within {MAX_SWEEPS} sweeps "
                f"on a {hi - lo}x{hi - lo} block"
            )
        values.append(np.diagonal(blk).copy())
    flat = np.concatenate(values) if values else np.empty(0)
    flat.sort()
    return [float(x) for x in flat]


# ---------------------------------------------------------------------------
# Energies and classification flags.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnergyReport:
    """The four energies plus classification against complete-graph baselines.

    ``e`` sums |adjacency eigenvalues|; ``le``/``le_plus`` sum
    |eigenvalue - 2m/n| over the (identical) Laplacian and signless-Laplacian
    spectra, computed in exact rational arithmetic before the final float;
    ``e_cn`` sums |common-neighborhood eigenvalues| and is an exact integer.
    Baselines at vertex count v: 2(v-1) for E/LE/LE+, 2(v-1)(v-2) for E_CN;
    all hyper comparisons are strict.
    """

    e: float
    le: float
    le_plus: float
    e_cn: float
    avg_degree_shift: Fraction
    hypoenergetic: bool
    hyperenergetic: bool
    l_hyper: bool
    q_hyper: bool
    cn_hyper: bool
    e_le_margin: float


def energies(decomp: StarDecomposition) -> EnergyReport:
    v, m = graph_stats(decomp)
    e = sum(2.0 * math.sqrt(s) for _, s in decomp.entries)
    shift = Fraction(2 * m, v)
    le_exact = Fraction(0)
    for _, s in decomp.entries:
        # Laplacian eigenvalues of one star: {0, 1^(s-1), s+1}.
        le_exact += abs(-shift) + (s - 1) * abs(1 - shift) + abs(s + 1 - shift)
    e_cn_exact = sum(2 * (s - 1) for _, s in decomp.entries)
    baseline = 2 * (v - 1)
    cn_baseline = 2 * (v - 1) * (v - 2)
    le = float(le_exact)
    return EnergyReport(
        e=e,
        le=le,
        le_plus=le,
        e_cn=float(e_cn_exact),
        avg_degree_shift=shift,
        hypoenergetic=e < v,
        hyperenergetic=e > baseline,
        l_hyper=le_exact > baseline,
        q_hyper=le_exact > baseline,
        cn_hyper=e_cn_exact > cn_baseline,
        e_le_margin=le - e,
    )


def e_le_check(report: EnergyReport, vertex_count: int) -> tuple[bool, bool]:
    """(E <= LE, strict chain LE > vertex count > E)."""
    holds = report.e <= report.le
    chain = report.le > vertex_count and vertex_count > report.e
    return holds, chain
