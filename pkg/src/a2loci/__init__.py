"""Exact equivariant sheaf cohomology on projective space.

Decomposes formal bundle expressions into irreducibles, evaluates their
cohomology by the Bott weight algorithm, builds the Koszul-type resolutions
attached to the rank-two jet-singularity loci, and reads rationality and
normality verdicts off the vanishing pattern of the first spectral-sequence
page.
"""

from .partitions import (
    PartitionError,
    cauchy_sym,
    lr_mult,
    parse_partition,
    pieri_row,
    schur_branch_sum,
    schur_dim,
    wedge_pieri,
    weyl_dim,
)
from .bundles import (
    Const,
    Det,
    IrrSum,
    LineL,
    NormalizeError,
    Q,
    SchurPow,
    Sum,
    SymPow,
    Tensor,
    WedgePow,
    const,
    det,
    line,
    normalize,
    parse_expr,
    rank,
    schur,
    sym,
    tensor,
    total_dim,
    wedge,
)
from .bwb import BottClass, CohomologyTable, bwb_irreducible, bwb_line, cohomology
from .resolution import (
    ResolutionComplex,
    build_resolution1,
    build_resolution2,
    pushforward_fiber,
)
from .spectral import (
    E1Page,
    Verdict,
    analyze_normality,
    analyze_rationality,
    e1_page,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BottClass",
    "CohomologyTable",
    "Const",
    "Det",
    "E1Page",
    "IrrSum",
    "LineL",
    "NormalizeError",
    "PartitionError",
    "Q",
    "ResolutionComplex",
    "SchurPow",
    "Sum",
    "SymPow",
    "Tensor",
    "Verdict",
    "WedgePow",
    "analyze_normality",
    "analyze_rationality",
    "build_resolution1",
    "build_resolution2",
    "bwb_irreducible",
    "bwb_line",
    "cauchy_sym",
    "cohomology",
    "const",
    "det",
    "e1_page",
    "line",
    "lr_mult",
    "normalize",
    "parse_expr",
    "parse_partition",
    "pieri_row",
    "pushforward_fiber",
    "rank",
    "schur",
    "schur_branch_sum",
    "schur_dim",
    "sweep",
    "sym",
    "tensor",
    "total_dim",
    "wedge",
    "wedge_pieri",
    "weyl_dim",
]
