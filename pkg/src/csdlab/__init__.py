"""Exact commutativity and permutability degrees for finite groups."""

from .degrees import (
    Degree,
    LowerBounds,
    cdeg,
    csd,
    csd_coprime_product,
    csd_star,
    d,
    is_iwasawa,
    lower_bounds,
    ndeg,
    sd,
)
from .errors import GuardrailExceeded
from .expr import ExprError, ParseError, evaluate, parse, render
from .formulas import (
    csd_E_p3,
    csd_dihedral,
    csd_dihedral_2n,
    csd_lower_bound_Zn_Q8,
    csd_P_group,
    csd_quaternion,
    csd_schmidt_section,
    csd_semidihedral,
    csd_semidihedral_observed,
    l1_count_Zn_Q8,
    tau,
)
from .groups import (
    FiniteGroup,
    Permutation,
    Subgroup,
    center,
    cyclic,
    derived_subgroup,
    dihedral,
    direct_product,
    elementary_abelian,
    from_generators,
    full_subgroup,
    generalized_quaternion,
    generated_subgroup,
    heisenberg_E,
    is_abelian,
    is_nilpotent,
    modular_group_M,
    p_group_P,
    quasidihedral,
    quotient,
    relabel,
    subgroup_as_group,
    trivial_subgroup,
    zm_group,
)
from .lattice import (
    CyclicPoset,
    SubgroupLattice,
    c1,
    cyclic_subgroups,
    is_normal,
    normal_subgroups,
    permutes,
    product_set,
    sections,
    subgroup_lattice,
)
from .reports import RunReport, emit

__all__ = [
    "CyclicPoset",
    "Degree",
    "ExprError",
    "FiniteGroup",
    "GuardrailExceeded",
    "LowerBounds",
    "ParseError",
    "Permutation",
    "RunReport",
    "Subgroup",
    "SubgroupLattice",
    "c1",
    "cdeg",
    "center",
    "csd",
    "csd_E_p3",
    "csd_P_group",
    "csd_coprime_product",
    "csd_dihedral",
    "csd_dihedral_2n",
    "csd_lower_bound_Zn_Q8",
    "csd_quaternion",
    "csd_schmidt_section",
    "csd_semidihedral",
    "csd_semidihedral_observed",
    "csd_star",
    "cyclic",
    "cyclic_subgroups",
    "d",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "emit",
    "evaluate",
    "from_generators",
    "full_subgroup",
    "generalized_quaternion",
    "generated_subgroup",
    "heisenberg_E",
    "is_abelian",
    "is_iwasawa",
    "is_nilpotent",
    "is_normal",
    "l1_count_Zn_Q8",
    "lower_bounds",
    "modular_group_M",
    "ndeg",
    "normal_subgroups",
    "p_group_P",
    "parse",
    "permutes",
    "product_set",
    "quasidihedral",
    "quotient",
    "relabel",
    "render",
    "sd",
    "sections",
    "subgroup_as_group",
    "subgroup_lattice",
    "tau",
    "trivial_subgroup",
    "zm_group",
]
