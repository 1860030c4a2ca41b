"""Turán numbers of odd-ballooned bipartite graphs, computed and checked at small scale."""

from .ballooning import (
    BallooningSpec,
    DecompositionFamily,
    ExtremalProfile,
    OutOfScopeError,
    balloon,
    decomposition_family,
    divide,
    division_family,
    is_decomposition_member,
    profile,
)
from .canon import canonical_form, canonical_key, is_isomorphic
from .extremal import (
    BoundsReport,
    ConstructionRecipe,
    build_family,
    corollary_value,
    ex_small,
    f_value,
    phi,
    theorem_bounds,
    turan_edges,
)
from .formats import decode_graph6, encode_graph6
from .graph import CapacityError, Graph, disjoint_union, join, make_named
from .invariants import (
    bipartition,
    components,
    independent_covering,
    matching_number,
    vertex_cover_number,
)
from .oracle import certify_free, count_graphs, enumerate_graphs, turan_oracle
from .search import Embedding, find_subgraph

__version__ = "0.1.0"
