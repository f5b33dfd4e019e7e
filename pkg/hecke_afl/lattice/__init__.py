from .correspondence import (
    CommutativityReport,
    CorrespondencePair,
    T_exact_support,
    T_leq,
    WitnessClass,
    commutativity_check,
    counts_table,
    distance_count,
    m_count,
    relative_position,
    witness_partition,
)
from .residue import ResidueField, count_isotropic_subspaces, isotropic_subspaces, residue_field
from .vertex import (
    HermSpace,
    VertexLattice,
    dual,
    enum_selfdual_over,
    enum_vertex_in,
    hermite_form,
    intersection,
    random_selfdual,
    random_sublattice,
    random_superlattice,
    random_vertex,
    standard_chain,
    standard_selfdual,
    type_of,
    vertex_sublattices,
    vertex_superlattices,
)

__all__ = [
    "CommutativityReport",
    "CorrespondencePair",
    "HermSpace",
    "ResidueField",
    "T_exact_support",
    "T_leq",
    "VertexLattice",
    "WitnessClass",
    "commutativity_check",
    "count_isotropic_subspaces",
    "counts_table",
    "distance_count",
    "dual",
    "enum_selfdual_over",
    "enum_vertex_in",
    "hermite_form",
    "intersection",
    "isotropic_subspaces",
    "m_count",
    "random_selfdual",
    "random_sublattice",
    "random_superlattice",
    "random_vertex",
    "relative_position",
    "residue_field",
    "standard_chain",
    "standard_selfdual",
    "type_of",
    "vertex_sublattices",
    "vertex_superlattices",
    "witness_partition",
]
