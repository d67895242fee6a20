"""Construction of the subgroup generating bipartite graph of a cyclic group.

The graph has one vertex per ordered pair (a, b) of group elements and one per
subgroup H, with (a, b) adjacent to H exactly when the pair generates H. For a
cyclic group every pair generates exactly one subgroup, so the graph is a
disjoint union of stars: one star per divisor m of the order, whose hub is the
subgroup of order m and whose leaves are the pairs generating it.

The compressed :class:`StarDecomposition` (m -> star size) is the primary
representation; dense matrices are materialized only for numeric cross-checks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .groups import (
    MAX_GROUP_ORDER,
    CyclicGroupSpec,
    divisors,
    jordan_totient_2,
)

# Quadratic pair enumeration: the independent oracle refuses anything bigger.
BRUTE_FORCE_CAP = 3000

DEFAULT_DENSE_CAP = 5000
DENSE_CAP_ENV = "SGB_DENSE_CAP"

MATRIX_KINDS = (
    "adjacency",
    "degree",
    "laplacian",
    "signless_laplacian",
    "common_neighborhood",
)
_KIND_ALIASES = {
    "a": "adjacency",
    "d": "degree",
    "l": "laplacian",
    "q": "signless_laplacian",
    "cn": "common_neighborhood",
}


class SizeCapError(ValueError):
    """An input exceeds one of the documented size caps."""


@dataclass(frozen=True)
class StarDecomposition:
    """The graph as a multiset of stars: (subgroup order m, star size s).

    ``s`` is the degree of the subgroup vertex of order ``m``, i.e. the number
    of ordered pairs generating it. Entries ascend by ``m``; sizes sum to the
    squared group order because every pair generates exactly one subgroup.
    """

    group_order: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = self.group_order
        if n < 1:
            raise ValueError(f"group order must be positive, got {n}")
        last_m = 0
        total = 0
        for m, s in self.entries:
            if m <= last_m:
                raise ValueError("entries must ascend strictly by subgroup order")
            if n % m:
                raise ValueError(f"subgroup order {m} does not divide {n}")
            if s < 1:
                raise ValueError(f"star size for subgroup order {m} must be >= 1")
            if m == 1 and s != 1:
                raise ValueError("the trivial subgroup is generated only by (0, 0)")
            last_m = m
            total += s
        if total != n * n:
            raise ValueError(
                f"star sizes sum to {total}, expected {n * n} (one per ordered pair)"
            )
        if len(self.entries) != len(divisors(CyclicGroupSpec.of(n))):
            raise ValueError("need exactly one entry per divisor of the group order")


def build_star_decomposition(spec: CyclicGroupSpec) -> StarDecomposition:
    """Closed-form decomposition: the subgroup of order m has degree J2(m)."""
    if spec.order > MAX_GROUP_ORDER:
        raise SizeCapError(
            f"order {spec.order} exceeds the {MAX_GROUP_ORDER} group-order cap"
        )
    entries = tuple(
        (d.subgroup_order, jordan_totient_2(d.subgroup_order)) for d in divisors(spec)
    )
    return StarDecomposition(spec.order, entries)


def brute_force_star_decomposition(spec: CyclicGroupSpec) -> StarDecomposition:
    """Independent oracle: enumerate all n^2 pairs and bucket by subgroup order.

    Uses only the pair -> subgroup-order map (n // gcd(a, b, n)); no totient.
    """
    n = spec.order
    if n > BRUTE_FORCE_CAP:
        raise SizeCapError(f"order {n} exceeds the {BRUTE_FORCE_CAP} brute-force cap")
    g = np.gcd(np.arange(n, dtype=np.int64), n)
    # gcd(a, b, n) == gcd(gcd(a, n), gcd(b, n)), so one outer product suffices.
    orders = (n // np.gcd.outer(g, g)).ravel()
    counts = np.bincount(orders, minlength=n + 1)
    entries = tuple((d.subgroup_order, int(counts[d.subgroup_order])) for d in divisors(spec))
    return StarDecomposition(n, entries)


def graph_stats(decomp: StarDecomposition) -> tuple[int, int]:
    """(vertex count, edge count): n^2 pair vertices plus one hub per star."""
    n = decomp.group_order
    return n * n + len(decomp.entries), n * n


@dataclass
class DenseSymmetricMatrix:
    """A finite symmetric real matrix, read-only once constructed."""

    dimension: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.ascontiguousarray(self.entries, dtype=np.float64)
        if arr.shape != (self.dimension, self.dimension):
            raise ValueError(
                f"expected a {self.dimension}x{self.dimension} matrix, got {arr.shape}"
            )
        if not np.isfinite(arr).all():
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix must be symmetric")
        arr.setflags(write=False)
        self.entries = arr


def dense_cap() -> int:
    """Current dense-matrix vertex cap (override with SGB_DENSE_CAP)."""
    raw = os.environ.get(DENSE_CAP_ENV)
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{DENSE_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{DENSE_CAP_ENV} must be positive, got {cap}")
    return cap


def _normalize_matrix_kind(kind: str) -> str:
    key = kind.strip().lower()
    key = _KIND_ALIASES.get(key, key)
    if key not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")
    return key


def assemble_matrix(decomp: StarDecomposition, kind: str) -> DenseSymmetricMatrix:
    """Materialize one of the five matrices of the graph.

    Vertex order is fixed: star blocks ascend by subgroup order, and inside a
    block the hub (subgroup vertex) comes first, then its leaves. The
    common-neighborhood matrix is A @ A with the diagonal zeroed.
    """
    kind = _normalize_matrix_kind(kind)
    v, _ = graph_stats(decomp)
    cap = dense_cap()
    if v > cap:
        raise SizeCapError(
            f"dense matrix needs {v} vertices, above the cap {cap} "
            f"(raise {DENSE_CAP_ENV} to override)"
        )
    a = np.zeros((v, v), dtype=np.float64)
    off = 0
    for _, s in decomp.entries:
        hub = off
        a[hub, hub + 1 : hub + 1 + s] = 1.0
        a[hub + 1 : hub + 1 + s, hub] = 1.0
        off += 1 + s
    if kind == "adjacency":
        mat = a
    elif kind == "degree":
        mat = np.diag(a.sum(axis=1))
    elif kind == "laplacian":
        mat = np.diag(a.sum(axis=1)) - a
    elif kind == "signless_laplacian":
        mat = np.diag(a.sum(axis=1)) + a
    else:
        mat = a @ a
        np.fill_diagonal(mat, 0.0)
    return DenseSymmetricMatrix(v, mat)


def dump_matrix(matrix: DenseSymmetricMatrix) -> str:
    """Stable plain-text form: first line ``dim k``, then k space-separated rows."""
    lines = [f"dim {matrix.dimension}"]
    for row in matrix.entries:
        lines.append(" ".join(format(x, "g") for x in row))
    return "\n".join(lines) + "\n"
