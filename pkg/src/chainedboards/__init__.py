"""Rook placements, chained permutations, and chained alternating sign
matrices on linear and circular chains of chessboards."""

from .boards import (
    BoardSpec,
    Composition,
    Shape,
    Square,
    admissible_compositions,
    attacks,
    circular,
    is_admissible_composition,
    linear,
    max_rooks,
    maximum_compositions,
)
from .counting import (
    classical_asm_count,
    count_max,
    count_max_circular,
    count_max_linear,
    count_max_linear_multinomial,
    count_placements_formula,
    falling_factorial,
    qtasm_count,
)
from .placements import (
    RookPlacement,
    canonical_placement,
    count_placements_brute,
    enumerate_placements,
    validate_placement,
)
from .perms import (
    ChainedPermutation,
    OneLine,
    chained_permutation_problems,
    from_one_line,
    matrices_to_placement,
    one_line_problems,
    one_line_text,
    parse_one_line,
    placement_to_matrices,
    to_one_line,
    validate_chained_permutation,
    validate_one_line,
)
from .matchings import (
    ChainGraph,
    ChainMatching,
    build_chain_graph,
    enumerate_matchings,
    from_matching,
    matching_kind,
    matching_problems,
    matching_size,
    to_matching,
    validate_matching,
)
from .asm import (
    ChainedASM,
    PlainASM,
    asm_sum_composition,
    asm_to_permutation,
    chained_asm_problems,
    concat_circular_k4,
    count_chained_asm,
    enumerate_chained_asm,
    fold_qt,
    join_linear_odd,
    permutation_to_asm,
    plain_asm_problems,
    split_circular_k4,
    split_linear_odd,
    unfold_qt,
    validate_chained_asm,
    validate_plain_asm,
)
from .triangles import (
    MonotoneTriangleChain,
    enumerate_mt_chains,
    from_monotone_triangles,
    mt_chain_problems,
    pair_matrices,
    to_monotone_triangles,
    validate_mt_chain,
)
from .ice import (
    FPLConfiguration,
    GridGraph,
    IceConfiguration,
    build_grid_graph,
    enumerate_fpl,
    enumerate_ice,
    fpl_problems,
    from_fpl,
    from_ice,
    ice_problems,
    to_fpl,
    to_ice,
    validate_fpl,
    validate_ice,
)
from .serialization import deserialize, serialize
from .rendering import render
from .verify import VerificationReport, verify_tables

__all__ = [name for name in dir() if not name.startswith("_")]
