"""Exact beta-expansion and finiteness-property toolkit.

Everything is exact rational arithmetic over Q(beta): expansions and
admissibility, carry-based digit normalization with verified witnesses,
shift radix system orbits, and three-valued finiteness classification.
"""

from .errors import (
    BetaFinError,
    CascadeOverrun,
    ClosureBudgetExceeded,
    F1Unknown,
    FieldMismatch,
    GoldenRatioPrecondition,
    InvariantViolation,
    NoRootAboveOne,
    NotAdmissible,
    NotApplicable,
    NotCubicPisot,
    NotUnit,
    OrbitBudgetExceeded,
    OutOfRange,
    Reducible,
)
from .field import (
    BetaField,
    FieldElement,
    cubic_pisot_criterion,
    elem_arith,
    floor,
    is_pisot,
    make_field,
    sign,
    unit_disk_profile,
)
from .words import Word, format_word, lex_cmp, parse_word, subtract
from .expansion import (
    Expansion,
    beta_expand,
    big_l,
    d_beta,
    d_beta_one,
    d_beta_star,
    frac_part,
    is_admissible,
    is_finite_expansion,
    nu,
    t_map,
    t_orbit_of_one,
    xi,
    xi_t_power,
)
from .normalization import (
    FreeBlockDecomposition,
    KeyWitness,
    add_one,
    carry_step,
    free_blocks,
    witness_for_natural,
)
from .srs import (
    F1Certificate,
    OrbitGraph,
    ShiftRadixSystem,
    delta,
    export_graph,
    f1_certificate,
    floor_beta_plus_one_finite,
    in_f_beta,
    p_set,
    q_set,
    tau_orbit_vectors,
    tau_preimages,
    v_box_set,
)
from .classify import (
    CpCaseReport,
    PropertyReport,
    bassino_case,
    classify,
    cpcase_check,
    cubic_unit_classify,
    floor_beta_cubic,
    fs_type,
    hollander_type,
    pf_shape,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
