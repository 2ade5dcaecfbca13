"""Subgroup graphs of small finite groups.

The subgroup graph joins H < K when H is a maximal subgroup of K. It is
regular exactly when the group is cyclic of square-free order; this package
builds the graph and checks that statement, and the degree counts behind it,
over a census of constructible groups.
"""

from .group import (
    Group,
    GroupError,
    OrderCapError,
    direct_product,
    element_order,
    from_cayley_table,
    from_permutation_generators,
    is_abelian,
    is_cyclic,
    is_squarefree,
    make_cyclic,
    make_dihedral,
)
from .groupspec import GroupSpec, SpecParseError, parse_group_spec, read_group_file
from .harness import (
    analyze,
    default_corpus,
    predicted_regular,
    run_census,
    verify_counting_identity,
    verify_equivalence,
)
from .lattice import Lattice, RegularityReport, build_lattice, degree, export_dot, regularity
from .subgroups import (
    Subgroup,
    all_subgroups,
    centralizer,
    frattini_subgroup,
    generated_subgroup,
    is_elementary_abelian,
    minimal_subgroups,
    normalizer,
    sylow_subgroup,
)

__version__ = "0.1.0"
