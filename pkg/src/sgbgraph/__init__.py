"""Subgroup generating bipartite graphs of finite cyclic groups.

The graph on Z_n pairs every ordered element pair (a, b) with the subgroup
it generates. For cyclic groups the result is a disjoint union of stars,
one per divisor of n, which makes degree-based indices, spectra of the
adjacency / Laplacian / signless Laplacian / common-neighborhood matrices,
and the corresponding graph energies all computable in closed form. This
package builds the graphs, evaluates the invariants, and cross-checks the
closed forms against brute-force and numeric oracles.
"""

from .closed_forms import (
    CATALOG_PRIMES,
    FAMILY_KINDS,
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
from .graphs import (
    BRUTE_FORCE_CAP,
    DEFAULT_DENSE_CAP,
    DENSE_CAP_ENV,
    MATRIX_KINDS,
    DenseSymmetricMatrix,
    SizeCapError,
    StarDecomposition,
    assemble_matrix,
    brute_force_star_decomposition,
    build_star_decomposition,
    dump_matrix,
    graph_stats,
)
from .groups import (
    MAX_GROUP_ORDER,
    CyclicGroupSpec,
    SubgroupDescriptor,
    divisors,
    factorize,
    generated_subgroup_order,
    jordan_totient_2,
    mobius,
)
from .indices import DegreeIndexReport, ZagrebReport, degree_indices, zagreb
from .spectral import (
    MATRIX_KIND_FOR_SPECTRUM,
    SPECTRUM_KINDS,
    EnergyReport,
    ExactEigenvalue,
    NonConvergenceError,
    SpectrumMultiset,
    closed_form_spectrum,
    e_le_check,
    energies,
    numeric_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_CAP",
    "CATALOG_PRIMES",
    "CyclicGroupSpec",
    "DEFAULT_DENSE_CAP",
    "DENSE_CAP_ENV",
    "DegreeIndexReport",
    "DenseSymmetricMatrix",
    "EnergyReport",
    "ExactEigenvalue",
    "FAMILY_KINDS",
    "FamilyTag",
    "MATRIX_KINDS",
    "MATRIX_KIND_FOR_SPECTRUM",
    "MAX_GROUP_ORDER",
    "NonConvergenceError",
    "SPECTRUM_KINDS",
    "SizeCapError",
    "SpectrumMultiset",
    "StarDecomposition",
    "SubgroupDescriptor",
    "UnsupportedFamilyError",
    "ZagrebReport",
    "assemble_matrix",
    "brute_force_star_decomposition",
    "build_star_decomposition",
    "catalog_degree_indices",
    "catalog_energies",
    "catalog_instances",
    "catalog_spectra",
    "catalog_structure",
    "catalog_vertex_count",
    "catalog_zagreb",
    "closed_form_spectrum",
    "degree_indices",
    "detect_family",
    "divisors",
    "dump_matrix",
    "e_le_check",
    "energies",
    "factorize",
    "generated_subgroup_order",
    "graph_stats",
    "jordan_totient_2",
    "mobius",
    "numeric_spectrum",
    "zagreb",
    "__version__",
]
