"""Graph coloring through DFS path decompositions and online algorithms."""

from dfscolor.adversary import AdversaryTranscript, run_adversary, verify_transcript
from dfscolor.composers import (
    Bound,
    ComposedColoring,
    ExactPathColorer,
    FirstFitPathColorer,
    color_by_level_parity,
    compose_bands,
    compose_paths,
    compose_recursive,
)
from dfscolor.dfs import (
    DfsTree,
    bands,
    dfs_forest,
    dfs_tree,
    leaf_heavy_decomposition,
    levels,
    root_to_leaf_paths,
)
from dfscolor.errors import (
    BudgetExceeded,
    ContractViolation,
    DfsColorError,
    GraphStructureError,
    HypothesisViolation,
    NoOddCycle,
    ParameterError,
)
from dfscolor.graph import Coloring, Graph, blocks, is_cycle, validate_coloring
from dfscolor.online import FirstFit, ModuloLevel, Presentation, QuadGroup, parity_greedy_levels, replay
from dfscolor.oracles import (
    CycleStats,
    chromatic_number_exact,
    clique_number_exact,
    cycle_stats,
    forbidden_subgraph_check,
    residue_cycle_counts,
)
from dfscolor.residue import color_residue1, color_residue2, color_residue3

__version__ = "0.1.0"
