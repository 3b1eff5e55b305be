"""Exact invariants, hole and buoy structure, and Reed's-conjecture checks for small graphs."""

from .graph import Graph, from_graph6, to_graph6
from .invariants import chromatic_number, clique_number, invariant_record, satisfies_reed
from .registry import CHECKS, run_named_check

__all__ = [
    "CHECKS",
    "Graph",
    "chromatic_number",
    "clique_number",
    "from_graph6",
    "invariant_record",
    "run_named_check",
    "satisfies_reed",
    "to_graph6",
]
