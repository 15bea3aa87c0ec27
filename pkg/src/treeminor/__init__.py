"""Tree minor containment: structural classes, polynomial solvers for the
caterpillar and lobster regimes, exact oracles, and hardness generators."""

from .dichotomy import DichotomyReport, classify, solve
from .oracle import (
    OracleLimitError,
    exact_minor,
    exact_minor_dp,
    exact_minor_rooted,
    exact_minor_rooted_dp,
    find_minor_embedding,
    find_rooted_embedding,
)
from .solvers import (
    MatchInput,
    StructuralAssertionError,
    cat_in_tree,
    embed_full,
    embed_partial,
    lob_in_lob,
    match_greedy,
)
from .tree import (
    RootedTree,
    Tree,
    TreeError,
    TreePath,
    backbone_of,
    contract,
    diameter,
    is_caterpillar,
    is_lobster,
    path_eccentricity,
    verify_embedding,
)
from .treeio import load_tree, parse_tree, save_tree, serialize_tree

__version__ = "0.1.0"
