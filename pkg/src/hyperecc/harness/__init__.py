"""Experiment commands, report tables and the invariant suite behind the CLI."""

from hyperecc.harness.experiments import (
    cmd_distance_experiment,
    cmd_hyperbolicity,
    cmd_stats,
    cmd_tree_experiment,
    run_distance_experiment,
    run_tree_experiment,
)
from hyperecc.harness.inputs import LoadedGraph, RunConfig, generate, load_graph
from hyperecc.harness.report import ReportTable
from hyperecc.harness.verify import VerifyReport, cmd_verify, default_suite, verify_graph

__all__ = [
    "LoadedGraph",
    "ReportTable",
    "RunConfig",
    "VerifyReport",
    "cmd_distance_experiment",
    "cmd_hyperbolicity",
    "cmd_stats",
    "cmd_tree_experiment",
    "cmd_verify",
    "default_suite",
    "generate",
    "load_graph",
    "run_distance_experiment",
    "run_tree_experiment",
    "verify_graph",
]
