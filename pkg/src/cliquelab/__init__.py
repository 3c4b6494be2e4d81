"""Instrumented clique search, sorting and exact bound checks."""

from .bitgraph import (
    FlatBits,
    Network,
    NetworkError,
    WordCounter,
    and_flat,
    equals_flat,
    flatten,
    network_from_rows,
    paper_example,
    unflatten,
)
from .cliquesearch import (
    ComparisonTally,
    NodeSet,
    PlantSpec,
    clique_matrix,
    enumerate_subsets,
    max_clique,
    naive_cliques,
    plant_clique,
    search_all,
    search_first,
    subnetwork_compare,
)
from .sorters import (
    SortTally,
    bubble_restart,
    bubble_textbook,
    inversion_count,
    merge_sort,
    radix_sort_binary,
    worst_case_input,
    worst_case_scan,
)

__version__ = "0.1.0"
