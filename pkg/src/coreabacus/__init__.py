"""Integer partitions on the s-abacus: cores, quotients, simultaneous cores
and the symmetric abacus of the largest (s-1, s+1)-core."""
from .partitions import (
    EMPTY,
    InvalidPartition,
    Partition,
    conjugate,
    contains,
    first_column_hooks,
    hook_lengths,
    is_self_conjugate,
    is_t_core,
    make_partition,
    partitions_of,
    random_partition,
    remove_hook,
    staircase,
)
from .abacus import (
    Abacus,
    BeadSet,
    axis,
    is_self_conjugate_axis,
    min_beadset,
    minimalize,
    normalize,
    partition_of,
    shift,
    to_abacus,
)
from .core_quotient import (
    CoreQuotientPair,
    Quotient,
    conjugate_quotient_check,
    reconstruct,
    s_core,
    s_quotient,
    size_decomposition,
)
from .simul_cores import (
    GapSet,
    LowerIdeal,
    NotCoprime,
    enumerate_cores,
    gap_set,
    half_membership_check,
    ideal_to_core,
    iter_cores,
    kappa,
    max_triple_core_size,
    max_triple_core_size_odd,
)
from .alpha_sym import (
    AlphaAbacus,
    RectangleR,
    amlev_check,
    build_alpha,
    is_horizontally_antisymmetric,
    is_vertically_symmetric,
    nest,
    self_conjugate_corollary_check,
    strongs_characterization,
    verify_alpha_is_kappa,
    verify_piquo,
    verify_triple_symmetry,
)

__version__ = "0.1.0"
