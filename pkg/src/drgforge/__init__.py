"""drgforge: distance-regular Cayley graphs over 2-groups with a cyclic
index-2 subgroup — construction, verification, classification and
exhaustive search for the diameter-4 (Hadamard-type) connection pairs."""

from .cayley import (
    BitGraph,
    CayleyGraph,
    ConnectionSpec,
    build_cayley,
    build_dic,
    build_dih,
    build_psd,
    build_sd,
    is_connected,
)
from .classify import (
    HadamardCertificate,
    TheoremCase,
    canonicalize,
    classify,
    verify_hadamard_certificate,
)
from .designs import (
    DesignReport,
    check_antipodal_d4_equivalence,
    check_bipartite_d3_equivalence,
    check_symmetry_condition,
    search_difference_sets,
    verify_difference_set,
    verify_relative_difference_set,
)
from .drg import (
    IntersectionArray,
    StructureReport,
    antipodal_quotient,
    check_distance_regular,
    distance_module_oracle,
    distance_partition,
    halved_graphs,
    intersection_matrix_spectrum,
    recognize_named,
)
from .groups import (
    Group,
    GroupElement,
    Subgroup,
    cayley_table,
    index2_subgroups,
    make_group,
)
from .residues import (
    ResidueSet,
    affine_image,
    autocorrelation,
    convolve,
    coset_profile,
    dft,
    idft,
    unit_orbits,
)
from .search import (
    SearchResult,
    search_hadamard_pairs,
    search_hadamard_pairs_reference,
)

__version__ = "0.1.0"
