"""turanlab: exact counts, bound verdicts and small Turán numbers for cube-type problems."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import CapExceeded, DomainError, Graph6Error, InvariantError, PreconditionError, TuranLabError
from .graph import (
    BipartiteView,
    DegreeSequence,
    Graph,
    bipartition,
    complete_bipartite_graph,
    complete_graph,
    cube_graph,
    cube_with_diagonal,
    cycle_graph,
    degree_sequence,
    empty_graph,
    path_graph,
    random_graph,
    star_graph,
)
from .graph6 import parse_graph6, read_graph6_file, to_graph6
from .counting import c4_count, c6_count, codegree, count, d_value, girth, path3_count, walk_count
from .detect import contains_c4, contains_c6, contains_cube, contains_cube_diag, hexagon_between
from .bounds import BOUND_IDS, BoundReport, evaluate, power_mean
from .reduce import ReductionResult, erdos_bipartite_subgraph, gyori_c4free_reduction
from .search import SearchResult, SweepReport, enumerate_graphs, extremal_number, extremal_number_bipartite, sweep_bounds

__all__ = [name for name in dir() if not name.startswith("_")]
