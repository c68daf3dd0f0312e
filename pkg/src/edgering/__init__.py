"""Normality and Serre's condition (R1) for edge rings of finite graphs.

The main entry points are :func:`classify` and :func:`satisfies_r1` on a
:class:`Graph`; the ``oracle`` module rechecks the same verdicts by exact
integer-lattice arithmetic, and ``sweep`` cross-validates both routes over
exhaustive families of small graphs.
"""

from .facets import (
    FacetDescriptor,
    Fundamental,
    RegularVertex,
    SupportForm,
    enumerate_fundamental_sets,
    facet_sort_key,
    facets,
    is_fundamental,
    is_regular_vertex,
    iter_fundamental_sets,
    regular_vertices,
    support_form,
)
from .graph import (
    MAX_VERTICES,
    Cycle,
    Edge,
    Graph,
    ParseError,
    UnsupportedError,
    VertexSet,
    bridge_graph,
    canonical_cycle,
    chordless_odd_cycles,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    connected_within,
    cycle_graph,
    every_component_nonbipartite,
    generate_family,
    induced_subgraph,
    is_bipartite,
    is_connected,
    labelled_graphs,
    members,
    neighborhood,
    odd_cycle_witness,
    parse_edge_list,
    parse_graph6,
    serialize_edge_list,
    serialize_graph6,
    spanning_tree_edges,
    vset,
)
from .lattice import IntegerLattice, even_sum_lattice, xgcd
from .oracle import (
    check_lattice_match,
    check_unit_value,
    edge_vector,
    facet_conditions,
    monoid_group,
    oracle_r1,
    verify_decomposition,
    verify_even_sum_basis,
    verify_facet_rank,
)
from .serre import (
    ClassificationReport,
    classify,
    facet_connectivity_holds,
    satisfies_odd_cycle_condition,
    satisfies_r1,
)
from .sweep import CrossCheck, SweepSummary, cross_check, run_sweep, sweep_targets

__version__ = "0.1.0"
