"""Maximum-weight co-3-plexes in chordal graphs by column generation."""

from .chordal import CliqueSet, is_chordal, maximal_cliques_chordal, maximal_cliques_general, peo
from .colgen import ColgenConfig, ColgenReport, certify_optimality, solve_co3plex
from .graph import Graph, generate_random_chordal, parse_graph, write_graph
from .structures import Co3Plex, brute_force_max_co3plex, is_co3plex

__all__ = [
    "CliqueSet", "Co3Plex", "ColgenConfig", "ColgenReport", "Graph",
    "brute_force_max_co3plex", "certify_optimality", "generate_random_chordal",
    "is_chordal", "is_co3plex", "maximal_cliques_chordal", "maximal_cliques_general",
    "parse_graph", "peo", "solve_co3plex", "write_graph",
]
