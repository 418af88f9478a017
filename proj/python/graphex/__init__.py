"""Simulate, subsample and estimate sparse exchangeable graphs (graphex processes)."""

from ._core import (
    Graphex,
    GraphexError,
    dilate_measure,
    empirical_graphon,
    forget_labels,
    generate_from_pixel,
    graph_sequence,
    p_sample,
    run_suite,
    simulate,
    stats,
    suite_names,
)

__all__ = [
    "Graphex",
    "GraphexError",
    "dilate_measure",
    "empirical_graphon",
    "forget_labels",
    "generate_from_pixel",
    "graph_sequence",
    "p_sample",
    "run_suite",
    "simulate",
    "stats",
    "suite_names",
]

__version__ = "0.1.0"
