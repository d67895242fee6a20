"""Degree-based topological indices evaluated on a star decomposition.

Every edge of the graph joins a hub of degree s to a leaf of degree 1, so each
per-edge index collapses to a one-term-per-star sum. Zagreb indices and the
Hansen-Vukicevic margin are exact integers; the radical-bearing indices are
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import StarDecomposition


@dataclass(frozen=True)
class ZagrebReport:
    """First/second Zagreb indices plus the Hansen-Vukicevic sign test.

    The conjecture M2/|E| >= M1/|V| reduces for these graphs to the exact
    integer test ``#subgroups * M2 - order^4 >= 0``; ``hv_margin`` is that
    left-hand side.
    """

    m1: int
    m2: int
    hv_margin: int
    hv_holds: bool


@dataclass(frozen=True)
class DegreeIndexReport:
    randic: float
    abc: float
    ga: float
    harmonic: float
    sci: float


def zagreb(decomp: StarDecomposition) -> ZagrebReport:
    """Exact Zagreb indices: M1 = n^2 + sum s^2 over stars, M2 = M1 - n^2."""
    n2 = decomp.group_order**2
    sum_sq = sum(s * s for _, s in decomp.entries)
    m1 = n2 + sum_sq
    m2 = sum_sq
    margin = len(decomp.entries) * m2 - decomp.group_order**4
    return ZagrebReport(m1=m1, m2=m2, hv_margin=margin, hv_holds=margin >= 0)


def degree_indices(decomp: StarDecomposition) -> DegreeIndexReport:
    """Randic, atom-bond connectivity, geometric-arithmetic, harmonic and
    sum-connectivity indices.

    A star of size s contributes, summing its s edges with degrees (s, 1):
    R += sqrt(s); ABC += sqrt(s^2 - s); GA += 2*s^(3/2)/(1+s);
    H += 2*s/(1+s); SCI += s/sqrt(1+s). The s = 1 star gives ABC term 0.
    """
    r = abc = ga = h = sci = 0.0
    for _, s in decomp.entries:
        root = math.sqrt(s)
        r += root
        abc += math.sqrt(s * s - s)
        ga += 2.0 * s * root / (1 + s)
        h += 2.0 * s / (1 + s)
        sci += s / math.sqrt(1 + s)
    return DegreeIndexReport(randic=r, abc=abc, ga=ga, harmonic=h, sci=sci)
