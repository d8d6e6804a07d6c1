"""Crossing matrices of braids and positive realizability."""

from .division import (
    Blockage,
    BlockageKind,
    NotInSRPlus,
    Realizable,
    SearchConfig,
    SearchMode,
    VirtuallyTotallyBlocked,
    allowed_divisions,
    classify,
    count_realizations,
    find_blockages,
    is_totally_blocked,
    left_divide,
    subordinate,
)
from .errors import (
    BraidCrossError,
    DimensionError,
    Indeterminate,
    MalformedInput,
    NotAPermutation,
    NotInSRPlusError,
    NotSubordinate,
    ORSetError,
    PreconditionError,
    SRDecompositionError,
)
from .explorer import (
    ProbeReport,
    fully_supported_positions,
    probe_conjecture,
    verify_symmetrization,
    verify_t04,
)
from .matrices import (
    CrossingMatrix,
    SRDecomposition,
    Tableau,
    configuration,
    crossing_product,
    in_sr_plus,
    is_t0,
    is_t1,
    matrix_from_json,
    mirror,
    permutation_of_matrix,
    r_matrix,
    sr_decompose,
    sym_matrix,
    tableau_parse,
    tableau_render,
)
from .permutations import (
    ORSet,
    Permutation,
    apply_to_word,
    compose,
    identity,
    inverse,
    or_set,
    permutation_from_or_set,
    rearrange_matrix,
    restrict,
    transposition,
)
from .words import (
    BraidWord,
    crossing_matrix,
    hook_word,
    mirror_word,
    permutation_braid_word,
    permutation_of_word,
)

__version__ = "0.1.0"
