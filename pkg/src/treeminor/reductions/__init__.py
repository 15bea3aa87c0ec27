"""SAT-based hardness constructions for tree minor containment."""

from .cnf import (
    CnfError,
    CnfFormula,
    is_exact3,
    is_satisfiable,
    parse_dimacs,
    satisfying_assignment,
    to_dimacs,
    to_exact3,
)
from .ippc import (
    IppcInstance,
    Poset,
    check_ippc_solution,
    ippc_brute,
    ippc_pad,
    ippc_solve,
    ippc_to_trees,
    ippc_witness_embedding,
    natural_embedding,
    order_caterpillar,
    pad_solution,
    satx_to_ippc,
)
from .isc import (
    IscInstance,
    check_isc_solution,
    isc_brute,
    isc_solve,
    isc_to_trees,
    isc_witness_embedding,
    sat3_to_isc,
)
