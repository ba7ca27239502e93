"""Torsion parts of Whitehead groups of finite p-groups with p odd.

Computes SK1 of the integral group ring for abelian p-groups and for the
modular metacyclic groups of order p^n, together with genetic bases,
exact Smith normal forms, free-rank formulas, and predicted
decompositions for squares of cyclic groups.
"""

from .abelian import (
    AbelianPGroup,
    Element,
    element_order,
    enumerate_elements,
    make_group,
)
from .conjecture import (
    ConjecturePrediction,
    VerifyReport,
    predicted_decomposition,
    predicted_multiplicity,
    verify,
)
from .errors import (
    BadParams,
    DimensionMismatch,
    DomainViolation,
    InfiniteCokernel,
    NonOddPrime,
    NotPPower,
    Sk1Error,
    TooLarge,
)
from .genetic import (
    CyclicHom,
    GeneticSubgroupA,
    cyclic_quotient_count,
    enumerate_cyclic_homs,
    genetic_basis_abelian,
    quotient_dlog,
)
from .metacyclic import (
    MetacyclicGroup,
    MetaGeneticSubgroup,
    centralizer,
    genetic_basis_metacyclic,
    make_metacyclic,
    relation_component,
    sk1_metacyclic,
)
from .ranks import (
    IrrepCounts,
    irrep_counts_metacyclic,
    irrep_counts_square_abelian,
    rank_metacyclic,
    rank_square_abelian,
)
from .sk1_abelian import (
    EXHAUSTIVE,
    REPRESENTATIVES,
    RelationSet,
    TargetProduct,
    relation_matrix,
    relation_row,
    sk1,
    target_product,
)
from .snf import CyclicDecomposition, cokernel_decomposition, smith_divisors

__version__ = "0.1.0"

__all__ = [
    "AbelianPGroup",
    "BadParams",
    "ConjecturePrediction",
    "CyclicDecomposition",
    "CyclicHom",
    "DimensionMismatch",
    "DomainViolation",
    "EXHAUSTIVE",
    "Element",
    "GeneticSubgroupA",
    "InfiniteCokernel",
    "IrrepCounts",
    "MetaGeneticSubgroup",
    "MetacyclicGroup",
    "NonOddPrime",
    "NotPPower",
    "REPRESENTATIVES",
    "RelationSet",
    "Sk1Error",
    "TargetProduct",
    "TooLarge",
    "VerifyReport",
    "centralizer",
    "cokernel_decomposition",
    "cyclic_quotient_count",
    "element_order",
    "enumerate_cyclic_homs",
    "enumerate_elements",
    "genetic_basis_abelian",
    "genetic_basis_metacyclic",
    "irrep_counts_metacyclic",
    "irrep_counts_square_abelian",
    "make_group",
    "make_metacyclic",
    "predicted_decomposition",
    "predicted_multiplicity",
    "quotient_dlog",
    "rank_metacyclic",
    "rank_square_abelian",
    "relation_component",
    "relation_matrix",
    "relation_row",
    "sk1",
    "sk1_metacyclic",
    "smith_divisors",
    "target_product",
    "verify",
]
