"""Family catalog: tags, detection, and the transcribed closed forms checked
against the general pipeline."""

import math
from fractions import Fraction

import pytest

from sgbgraph.closed_forms import (
    CATALOG_PRIMES,
    FamilyTag,
    UnsupportedFamilyError,
    catalog_degree_indices,
    catalog_energies,
    catalog_instances,
    catalog_spectra,
    catalog_structure,
    catalog_vertex_count,
    catalog_zagreb,
    detect_family,
)
from sgbgraph.graphs import build_star_decomposition, graph_stats
from sgbgraph.groups import CyclicGroupSpec
from sgbgraph.indices import degree_indices, zagreb
from sgbgraph.spectral import closed_form_spectrum, energies


def _build(n):
    return build_star_decomposition(CyclicGroupSpec.of(n))


# ---------------------------------------------------------------------------
# Tags and detection
# ---------------------------------------------------------------------------


def test_tag_constructors():
    assert FamilyTag.prime_power(2, 3).order() == 8
    assert FamilyTag.pq(2, 3).order() == 6
    assert FamilyTag.p2q(2, 3).order() == 12
    assert FamilyTag.p2q(3, 2).order() == 18
    assert FamilyTag.p2q2(2, 3).order() == 36
    with pytest.raises(ValueError):
        FamilyTag.pq(3, 2)  # needs p < q
    with pytest.raises(ValueError):
        FamilyTag.p2q(5, 5)  # needs distinct primes
    with pytest.raises(ValueError):
        FamilyTag.pq(2, 9)  # 9 is not prime
    with pytest.raises(ValueError):
        FamilyTag.prime_power(2, 0)
    with pytest.raises(UnsupportedFamilyError):
        FamilyTag.outside().order()


def test_detect_family():
    assert detect_family(CyclicGroupSpec.of(8)) == FamilyTag.prime_power(2, 3)
    assert detect_family(CyclicGroupSpec.of(7)) == FamilyTag.prime_power(7, 1)
    assert detect_family(CyclicGroupSpec.of(15)) == FamilyTag.pq(3, 5)
    assert detect_family(CyclicGroupSpec.of(12)) == FamilyTag.p2q(2, 3)
    assert detect_family(CyclicGroupSpec.of(18)) == FamilyTag.p2q(3, 2)
    assert detect_family(CyclicGroupSpec.of(36)) == FamilyTag.p2q2(2, 3)
    assert detect_family(CyclicGroupSpec.of(1)).kind == "outside"
    assert detect_family(CyclicGroupSpec.of(30)).kind == "outside"
    assert detect_family(CyclicGroupSpec.of(72)).kind == "outside"  # 2^3 * 3^2


def test_catalog_rejects_outside():
    with pytest.raises(UnsupportedFamilyError):
        catalog_structure(FamilyTag.outside())
    with pytest.raises(UnsupportedFamilyError):
        catalog_zagreb(FamilyTag.outside())


# ---------------------------------------------------------------------------
# Structures
# ---------------------------------------------------------------------------


def test_structure_examples():
    assert catalog_structure(FamilyTag.pq(2, 3)).entries == (
        (1, 1), (2, 3), (3, 8), (6, 24),
    )
    assert catalog_structure(FamilyTag.prime_power(2, 1)).entries == ((1, 1), (2, 3))
    assert catalog_structure(FamilyTag.p2q(2, 3)).entries == (
        (1, 1), (2, 3), (3, 8), (4, 12), (6, 24), (12, 96),
    )
    assert catalog_structure(FamilyTag.p2q2(2, 3)).entries == (
        (1, 1), (2, 3), (3, 8), (4, 12), (6, 24), (9, 72), (12, 96), (18, 216), (36, 864),
    )


def test_structure_p2q_both_orderings():
    assert catalog_structure(FamilyTag.p2q(3, 2)) == _build(18)


@pytest.mark.parametrize(
    "tag",
    [
        FamilyTag.prime_power(2, 1),
        FamilyTag.prime_power(2, 4),
        FamilyTag.prime_power(13, 2),
        FamilyTag.pq(2, 13),
        FamilyTag.pq(11, 13),
        FamilyTag.p2q(2, 13),
        FamilyTag.p2q(13, 2),
        FamilyTag.p2q2(3, 5),
    ],
)
def test_structure_matches_pipeline(tag):
    assert catalog_structure(tag) == _build(tag.order())


def test_vertex_count():
    for tag in (FamilyTag.prime_power(3, 2), FamilyTag.pq(3, 5),
                FamilyTag.p2q(5, 3), FamilyTag.p2q2(2, 5)):
        assert catalog_vertex_count(tag) == graph_stats(_build(tag.order()))[0]


# ---------------------------------------------------------------------------
# Zagreb and degree indices
# ---------------------------------------------------------------------------


def test_catalog_zagreb_examples():
    assert catalog_zagreb(FamilyTag.pq(2, 3)) == (686, 650)
    z = zagreb(_build(12))
    assert catalog_zagreb(FamilyTag.p2q(2, 3)) == (z.m1, z.m2)
    z36 = zagreb(_build(36))
    assert catalog_zagreb(FamilyTag.p2q2(2, 3)) == (z36.m1, z36.m2)
    z8 = zagreb(_build(8))
    assert catalog_zagreb(FamilyTag.prime_power(2, 3)) == (z8.m1, z8.m2)


def test_catalog_degree_indices_pq():
    tag = FamilyTag.pq(2, 3)
    cdi = catalog_degree_indices(tag)
    di = degree_indices(_build(6))
    for field in ("randic", "abc", "ga", "harmonic", "sci"):
        assert getattr(cdi, field) == pytest.approx(getattr(di, field), rel=1e-12)
    assert cdi.randic == pytest.approx(
        1 + math.sqrt(3) * (1 + math.sqrt(8)) + math.sqrt(8), rel=1e-12
    )


def test_catalog_sci_discrepancy_is_preserved():
    # The printed sum-connectivity closed forms for the p2q and p2q2 families
    # disagree with the definitional per-edge sum; the catalog keeps the
    # printed value, so the two routes must NOT agree there.
    for tag in (FamilyTag.p2q(2, 3), FamilyTag.p2q(3, 2), FamilyTag.p2q2(2, 3)):
        cdi = catalog_degree_indices(tag)
        di = degree_indices(_build(tag.order()))
        assert abs(cdi.sci - di.sci) > 1e-3
        for field in ("randic", "abc", "ga", "harmonic"):
            assert getattr(cdi, field) == pytest.approx(getattr(di, field), rel=1e-9)


@pytest.mark.parametrize("tag", [FamilyTag.prime_power(3, 2), FamilyTag.pq(5, 7)])
def test_catalog_degree_indices_agree_elsewhere(tag):
    cdi = catalog_degree_indices(tag)
    di = degree_indices(_build(tag.order()))
    for field in ("randic", "abc", "ga", "harmonic", "sci"):
        assert getattr(cdi, field) == pytest.approx(getattr(di, field), rel=1e-9)


# ---------------------------------------------------------------------------
# Spectra and energies
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "tag",
    [
        FamilyTag.prime_power(2, 1),
        FamilyTag.prime_power(2, 3),
        FamilyTag.prime_power(5, 2),
        FamilyTag.pq(2, 3),
        FamilyTag.pq(7, 11),
        FamilyTag.p2q(2, 3),
        FamilyTag.p2q(7, 2),
        FamilyTag.p2q2(2, 3),
        FamilyTag.p2q2(3, 7),
    ],
)
def test_catalog_spectra_match_pipeline(tag):
    decomp = _build(tag.order())
    spectra = catalog_spectra(tag)
    for kind in ("A", "L", "Q", "CN"):
        assert spectra[kind].pairs == closed_form_spectrum(decomp, kind).pairs


def test_catalog_energies_prime_power_2_1():
    cat = catalog_energies(FamilyTag.prime_power(2, 1))
    assert cat.e == pytest.approx(2 + 2 * math.sqrt(3), rel=1e-12)
    assert cat.le == cat.le_plus == float(Fraction(20, 3))
    assert cat.e_cn == 4.0


def test_catalog_energies_pq_2_3():
    cat = catalog_energies(FamilyTag.pq(2, 3))
    assert cat.le == 65.6
    assert cat.e_cn == 64.0
    assert format(cat.e, ".9g") == "20.9189148"
    assert cat.hypoenergetic
    assert not (cat.hyperenergetic or cat.l_hyper or cat.q_hyper or cat.cn_hyper)


@pytest.mark.parametrize(
    "tag",
    [
        FamilyTag.prime_power(2, 5),
        FamilyTag.prime_power(11, 1),
        FamilyTag.pq(5, 13),
        FamilyTag.p2q(3, 2),
        FamilyTag.p2q(2, 11),
        FamilyTag.p2q2(2, 7),
    ],
)
def test_catalog_energies_match_pipeline(tag):
    cat = catalog_energies(tag)
    er = energies(_build(tag.order()))
    for field in ("e", "le", "le_plus", "e_cn"):
        got = getattr(cat, field)
        want = getattr(er, field)
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want))
    assert cat.avg_degree_shift == er.avg_degree_shift
    for flag in ("hypoenergetic", "hyperenergetic", "l_hyper", "q_hyper", "cn_hyper"):
        assert getattr(cat, flag) == getattr(er, flag)


# ---------------------------------------------------------------------------
# Instance enumeration
# ---------------------------------------------------------------------------


def test_catalog_instances_census():
    tags = catalog_instances()
    assert len(tags) == 116
    by_kind = {}
    for tag in tags:
        by_kind[tag.kind] = by_kind.get(tag.kind, 0) + 1
        assert tag.order() <= 10**6
        assert tag.p in CATALOG_PRIMES
    assert by_kind == {"pn": 56, "pq": 15, "p2q": 30, "p2q2": 15}
    orders = [tag.order() for tag in tags]
    assert orders == sorted(orders)
    # p2q counts ordered pairs: both (2,3) and (3,2) appear.
    assert FamilyTag.p2q(2, 3) in tags and FamilyTag.p2q(3, 2) in tags


def test_catalog_instances_respect_cap():
    small = catalog_instances(max_order=100)
    assert all(tag.order() <= 100 for tag in small)
    assert FamilyTag.pq(2, 3) in small
    assert FamilyTag.p2q2(2, 5) in small  # order exactly 100
    assert FamilyTag.p2q2(3, 5) not in small  # order 225
