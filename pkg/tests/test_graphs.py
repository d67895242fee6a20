"""Graph construction: star decompositions (closed-form vs brute-force) and
dense matrix assembly."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sgbgraph.graphs import (
    BRUTE_FORCE_CAP,
    DEFAULT_DENSE_CAP,
    DENSE_CAP_ENV,
    DenseSymmetricMatrix,
    SizeCapError,
    StarDecomposition,
    assemble_matrix,
    brute_force_star_decomposition,
    build_star_decomposition,
    dense_cap,
    dump_matrix,
    graph_stats,
)
from sgbgraph.groups import CyclicGroupSpec


def _build(n):
    return build_star_decomposition(CyclicGroupSpec.of(n))


def test_build_examples():
    assert _build(1).entries == ((1, 1),)
    assert _build(2).entries == ((1, 1), (2, 3))
    assert _build(4).entries == ((1, 1), (2, 3), (4, 12))
    assert _build(6).entries == ((1, 1), (2, 3), (3, 8), (6, 24))


def test_brute_force_examples():
    for n in (1, 2, 4, 6, 9, 12, 30):
        assert brute_force_star_decomposition(CyclicGroupSpec.of(n)) == _build(n)


def test_brute_force_cap():
    with pytest.raises(SizeCapError):
        brute_force_star_decomposition(CyclicGroupSpec.of(BRUTE_FORCE_CAP + 1))


@given(st.integers(min_value=1, max_value=400))
@settings(max_examples=60, deadline=None)
def test_oracle_equivalence(n):
    assert brute_force_star_decomposition(CyclicGroupSpec.of(n)) == _build(n)


def test_decomposition_validation():
    with pytest.raises(ValueError):
        StarDecomposition(2, ((1, 1), (2, 2)))  # sizes must sum to 4
    with pytest.raises(ValueError):
        StarDecomposition(2, ((2, 3), (1, 1)))  # ascending order required
    with pytest.raises(ValueError):
        StarDecomposition(2, ((1, 4),))  # one entry per divisor
    with pytest.raises(ValueError):
        StarDecomposition(4, ((1, 1), (3, 15)))  # 3 does not divide 4


def test_graph_stats():
    assert graph_stats(_build(1)) == (2, 1)
    assert graph_stats(_build(2)) == (6, 4)
    assert graph_stats(_build(6)) == (40, 36)


def test_adjacency_k2():
    mat = assemble_matrix(_build(1), "adjacency")
    assert mat.dimension == 2
    assert np.array_equal(mat.entries, [[0.0, 1.0], [1.0, 0.0]])


def test_adjacency_row_sums():
    decomp = _build(6)
    a = assemble_matrix(decomp, "adjacency").entries
    sums = sorted(a.sum(axis=1))
    # 36 leaves of degree 1, then the four hub degrees.
    assert sums == [1.0] * 36 + [1.0, 3.0, 8.0, 24.0]
    assert a.sum() == 2 * 36


def test_matrix_kind_relations():
    decomp = _build(6)
    a = assemble_matrix(decomp, "adjacency").entries
    d = assemble_matrix(decomp, "degree").entries
    lap = assemble_matrix(decomp, "laplacian").entries
    q = assemble_matrix(decomp, "signless_laplacian").entries
    assert np.array_equal(d, np.diag(a.sum(axis=1)))
    assert np.array_equal(lap, d - a)
    assert np.array_equal(q, d + a)
    assert np.array_equal(q, lap + 2 * a)
    assert np.allclose(lap.sum(axis=1), 0.0)


def test_common_neighborhood_blocks():
    # In one star the leaves pairwise share the hub; hubs share nobody.
    decomp = _build(2)
    cn = assemble_matrix(decomp, "common_neighborhood").entries
    expected = np.zeros((6, 6))
    expected[3:6, 3:6] = 1.0 - np.eye(3)
    assert np.array_equal(cn, expected)


def test_kind_aliases_and_unknown():
    decomp = _build(2)
    assert np.array_equal(
        assemble_matrix(decomp, "A").entries,
        assemble_matrix(decomp, "adjacency").entries,
    )
    assert np.array_equal(
        assemble_matrix(decomp, "CN").entries,
        assemble_matrix(decomp, "common_neighborhood").entries,
    )
    with pytest.raises(ValueError):
        assemble_matrix(decomp, "nope")


def test_matrix_is_read_only():
    mat = assemble_matrix(_build(2), "adjacency")
    with pytest.raises(ValueError):
        mat.entries[0, 0] = 5.0


def test_symmetry_validation():
    with pytest.raises(ValueError):
        DenseSymmetricMatrix(2, np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        DenseSymmetricMatrix(2, np.array([[0.0, np.inf], [np.inf, 0.0]]))
    with pytest.raises(ValueError):
        DenseSymmetricMatrix(3, np.zeros((2, 2)))


def test_assembly_deterministic():
    first = assemble_matrix(_build(12), "laplacian").entries
    second = assemble_matrix(_build(12), "laplacian").entries
    assert first.tobytes() == second.tobytes()


def test_dump_matrix_format():
    text = dump_matrix(assemble_matrix(_build(1), "adjacency"))
    assert text == "dim 2\n0 1\n1 0\n"


def test_dense_cap_default_and_override(monkeypatch):
    monkeypatch.delenv(DENSE_CAP_ENV, raising=False)
    assert dense_cap() == DEFAULT_DENSE_CAP
    # Order 71 needs 71^2 + 2 = 5043 vertices, just above the default cap.
    with pytest.raises(SizeCapError):
        assemble_matrix(_build(71), "adjacency")
    monkeypatch.setenv(DENSE_CAP_ENV, "6000")
    mat = assemble_matrix(_build(71), "adjacency")
    assert mat.dimension == 71 * 71 + 2
    monkeypatch.setenv(DENSE_CAP_ENV, "10")
    with pytest.raises(SizeCapError):
        assemble_matrix(_build(4), "adjacency")
    monkeypatch.setenv(DENSE_CAP_ENV, "zero")
    with pytest.raises(ValueError):
        dense_cap()
