"""Maximum weight bipartite matching by heaviest-slice decomposition."""

from .cardinality import hopcroft_karp, konig_cover, max_cardinality_matching
from .cavity import CavityTable, all_cavity, compute_rho, unfold, unfold_matching
from .decomposition import compute_min_cover, compute_mwm, decompose_check, run_decomposition
from .errors import *  # noqa: F403
from .graph import (
    BipartiteGraph,
    Cover,
    Matching,
    NodeId,
    Side,
    build_graph,
    residual_graph,
    slice_top,
    verify_cover,
    verify_duality,
)
from .oracle import oracle_all_cavity, oracle_hungarian, oracle_mwm_exhaustive
from .recovery import recover_matching, solve

__version__ = "0.1.0"
