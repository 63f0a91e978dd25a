"""Directed Steiner tree packing and directed tree connectivity toolkit.

Compute, decide, and certify packings of rooted Steiner trees in
digraphs: exact search with validated certificates, fast engines for
Eulerian and symmetric hosts, extremal family constructors, hardness
gadget generators, and randomized verification suites.
"""

from .core import (
    CertificateError,
    Digraph,
    GraphError,
    Mode,
    OutTree,
    SteinerInstance,
    TreePacking,
    build,
    complement,
    complete_bipartite_symmetric,
    complete_symmetric,
    is_eulerian,
    is_symmetric,
    reverse,
)
from .connectivity import (
    FlowResult,
    find_out_branching,
    global_kappa,
    global_lambda,
    is_strong,
    kappa_local,
    lambda_local,
)
from .exact import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    GlobalAnswer,
    PackingAnswer,
    PackingBudget,
    disjoint_paths_undirected,
    enumerate_minimal_trees,
    global_tree_connectivity,
    max_packing,
    two_linkage_directed,
)
from .fast import (
    ArcPartition,
    NotEulerianError,
    NotSymmetricError,
    PartitionBudgetError,
    Skeleton,
    eulerian_lambda,
    iter_arc_partitions,
    skeleton_search,
    symmetric_kappa_decide,
)
from .families import (
    NgPair,
    complete_packing,
    glued_cliques,
    ham_decompose_bipartite,
    ham_decomposition_ok,
    join_family,
    nordhaus_gaddum_branchings,
    nordhaus_gaddum_pair,
)
from .reductions import (
    Hypergraph,
    ReductionOutput,
    TripartiteInstance,
    amplify_3_2,
    cllm_reduce,
    cllm_solve,
    eulerian_kappa_reduce,
    hypergraph_2color,
    hypergraph_reduce,
)
from .formats import (
    FormatError,
    parse_digraph,
    parse_flexible,
    parse_hypergraph,
    parse_instance,
    parse_tripartite,
    to_dot,
    write_digraph,
    write_instance,
)
from .suites import (
    SUITE_NAMES,
    CheckRecord,
    SuiteResult,
    run_suite,
    suite_bounds,
    suite_characterization,
    suite_eulerian_agreement,
    suite_monotonicity,
    suite_nordhaus_gaddum,
    suite_reductions,
    suite_symmetric_agreement,
    symmetric_iso_classes,
)

__version__ = "0.1.0"

__all__ = [
    "ArcPartition",
    "BudgetExceededError",
    "CertificateError",
    "CheckRecord",
    "DEFAULT_BUDGET",
    "Digraph",
    "FlowResult",
    "FormatError",
    "GlobalAnswer",
    "GraphError",
    "Hypergraph",
    "Mode",
    "NgPair",
    "NotEulerianError",
    "NotSymmetricError",
    "OutTree",
    "PackingAnswer",
    "PackingBudget",
    "PartitionBudgetError",
    "ReductionOutput",
    "SUITE_NAMES",
    "Skeleton",
    "SteinerInstance",
    "SuiteResult",
    "TreePacking",
    "TripartiteInstance",
    "amplify_3_2",
    "build",
    "cllm_reduce",
    "cllm_solve",
    "complement",
    "complete_bipartite_symmetric",
    "complete_packing",
    "complete_symmetric",
    "disjoint_paths_undirected",
    "enumerate_minimal_trees",
    "eulerian_kappa_reduce",
    "eulerian_lambda",
    "find_out_branching",
    "global_kappa",
    "global_lambda",
    "global_tree_connectivity",
    "glued_cliques",
    "ham_decompose_bipartite",
    "ham_decomposition_ok",
    "hypergraph_2color",
    "hypergraph_reduce",
    "is_eulerian",
    "is_strong",
    "is_symmetric",
    "iter_arc_partitions",
    "join_family",
    "kappa_local",
    "lambda_local",
    "max_packing",
    "nordhaus_gaddum_branchings",
    "nordhaus_gaddum_pair",
    "parse_digraph",
    "parse_flexible",
    "parse_hypergraph",
    "parse_instance",
    "parse_tripartite",
    "reverse",
    "run_suite",
    "suite_bounds",
    "suite_characterization",
    "suite_eulerian_agreement",
    "suite_monotonicity",
    "suite_nordhaus_gaddum",
    "suite_reductions",
    "suite_symmetric_agreement",
    "symmetric_iso_classes",
    "skeleton_search",
    "symmetric_kappa_decide",
    "to_dot",
    "two_linkage_directed",
    "write_digraph",
    "write_instance",
]
