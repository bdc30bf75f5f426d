"""The experiment commands: network statistics, tree comparison, distance search.

Each ``cmd_*`` turns a :class:`RunConfig` into a :class:`ReportTable`; the
``run_*`` variants also hand back the computed objects so the CLI can write
``--out`` artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from hyperecc.config import Settings
from hyperecc.distances import (
    DistanceEstimate,
    StretchedEstimator,
    approximate_all_distances,
    approximate_all_distances_estimated,
    distance_error_stats,
    power_reachability,
    sample_sources,
    smallest_admissible_delta,
)
from hyperecc.eccentricity import (
    EccEstimate,
    choose_root,
    estimate_from_root,
    linear_root,
    tree_diameter,
)
from hyperecc.errors import BudgetExceededError
from hyperecc.graph import Graph, bfs
from hyperecc.harness.inputs import LoadedGraph, RunConfig, load_graph
from hyperecc.harness.report import Cell, ReportTable
from hyperecc.hyperbolicity import four_point_delta, hyperbolicity, sample_delta
from hyperecc.logging import get_logger
from hyperecc.models import HyperbolicityReport, TreeVariant
from hyperecc.oracle import (
    all_eccentricities,
    ball_cover_radius,
    center_geometry,
    distance_matrix,
    distance_rows,
    distance_to_set,
    profile_from_matrix,
)

log = get_logger(__name__)

STATS_COLUMNS = [
    "graph",
    "n",
    "m",
    "center_size",
    "avg_degree",
    "rad",
    "diam",
    "center_diam",
    "center_connected",
    "delta4",
]
HYPERBOLICITY_COLUMNS = ["graph", "n", "delta4", "tau", "witness", "mode"]
TREE_COLUMNS = [
    "graph",
    "tree",
    "root",
    "scans",
    "d_uv",
    "2rad_minus_d_uv",
    "ecc_far",
    "2rad_minus_ecc_far",
    "ecc_root",
    "ecc_root_minus_rad",
    "d_root_center",
    "center_cover_radius",
    "diam_tree",
    "k_max",
    "k_avg",
    "k_histogram",
]
VERTEX_COLUMNS = ["vertex", "ecc", "estimate", "k"]
DISTANCE_COLUMNS = ["graph", "root", "mode", "delta", "delta_max", "delta_avg", "admissible", "sources"]


def _hyperbolicity_for(g: Graph, settings: Settings) -> HyperbolicityReport:
    return hyperbolicity(
        g,
        budget=settings.quadruple_budget,
        force=settings.force,
        sample_size=settings.hyperbolicity_sample_size,
        rounds=settings.hyperbolicity_sample_rounds,
        seed=settings.seed,
        workers=settings.workers,
    )


# --------------------------------------------------------------------------
# stats
# --------------------------------------------------------------------------


def stats_row(loaded: LoadedGraph, settings: Settings) -> list[Cell]:
    g = loaded.graph
    if g.n <= settings.quadruple_budget or settings.force:
        dist = distance_matrix(g, force=True, workers=settings.workers)
        profile = profile_from_matrix(dist)
        geometry = center_geometry(g, profile, dist)
        hyper = four_point_delta(g, dist, force=True, workers=settings.workers)
    else:
        hyper = sample_delta(
            g,
            sample_size=settings.hyperbolicity_sample_size,
            rounds=settings.hyperbolicity_sample_rounds,
            seed=settings.seed,
        )
        try:
            profile = all_eccentricities(
                g,
                budget=settings.oracle_budget,
                force=settings.force,
                chunk_rows=settings.apsp_chunk_rows,
                workers=settings.workers,
            )
        except BudgetExceededError as exc:
            log.warning("stats.partial_row", graph=loaded.name, reason=str(exc))
            return [
                loaded.name,
                g.n,
                g.edge_count,
                None,
                g.average_degree,
                None,
                None,
                None,
                None,
                hyper.display(),
            ]
        geometry = center_geometry(g, profile)
    return [
        loaded.name,
        g.n,
        g.edge_count,
        len(profile.center),
        g.average_degree,
        profile.rad,
        profile.diam,
        geometry.center_diam,
        geometry.center_connected,
        hyper.display(),
    ]


def cmd_stats(config: RunConfig, settings: Settings) -> ReportTable:
    settings = config.apply(settings)
    loaded = load_graph(config, settings)
    table = ReportTable(title="network statistics", columns=STATS_COLUMNS)
    table.add_row(*stats_row(loaded, settings))
    return table


def cmd_hyperbolicity(config: RunConfig, settings: Settings) -> ReportTable:
    settings = config.apply(settings)
    loaded = load_graph(config, settings)
    report = _hyperbolicity_for(loaded.graph, settings)
    table = ReportTable(title="four-point hyperbolicity", columns=HYPERBOLICITY_COLUMNS)
    table.add_row(
        loaded.name,
        loaded.graph.n,
        report.display(),
        report.tau,
        ",".join(str(v) for v in report.witness),
        "sampled" if report.approximate else "exact",
    )
    return table


# --------------------------------------------------------------------------
# trees
# --------------------------------------------------------------------------


@dataclass
class TreeExperiment:
    table: ReportTable
    estimates: dict[str, EccEstimate] = field(default_factory=dict)


def _histogram_cell(est: EccEstimate) -> str:
    assert est.distortion is not None
    return ";".join(f"{k}:{pct:.1f}%" for k, pct in est.distortion.percentages().items())


def run_tree_experiment(loaded: LoadedGraph, settings: Settings, start: int = 0) -> TreeExperiment:
    g = loaded.graph
    profile = all_eccentricities(
        g,
        budget=settings.oracle_budget,
        force=settings.force,
        chunk_rows=settings.apsp_chunk_rows,
        workers=settings.workers,
    )
    roots = [choose_root(g, variant, profile, start) for variant in TreeVariant]
    roots.append(linear_root(g, start))
    out = TreeExperiment(ReportTable(title="eccentricity-approximating trees", columns=TREE_COLUMNS))
    for choice in roots:
        est = estimate_from_root(g, choice, profile)
        assert est.distortion is not None
        out.estimates[choice.label] = est
        c = choice.root
        pair = choice.pair
        ecc_c = int(profile.ecc[c])
        far = choice.far_vertex
        ecc_far = int(profile.ecc[far]) if far is not None else None
        out.table.add_row(
            loaded.name,
            choice.label,
            g.label(c),
            pair.scans if pair else None,
            pair.distance if pair else None,
            2 * profile.rad - pair.distance if pair else None,
            ecc_far,
            2 * profile.rad - ecc_far if ecc_far is not None else None,
            ecc_c,
            ecc_c - profile.rad,
            distance_to_set(g, c, profile.center),
            ball_cover_radius(g, c, profile.center),
            tree_diameter(est.tree),
            est.distortion.k_max,
            est.distortion.k_avg,
            _histogram_cell(est),
        )
    return out


def vertex_table(loaded: LoadedGraph, est: EccEstimate) -> ReportTable:
    """Per-vertex exact ecc, estimate and k(v), plus a summary row."""
    assert est.distortion is not None
    exact = est.estimate - est.distortion.k
    table = ReportTable(title=f"{est.variant} estimates", columns=VERTEX_COLUMNS)
    for v in range(loaded.graph.n):
        table.add_row(
            loaded.graph.label(v), int(exact[v]), int(est.estimate[v]), int(est.distortion.k[v])
        )
    table.add_row(
        "summary",
        f"k_max={est.distortion.k_max}",
        f"k_avg={est.distortion.k_avg:.3f}",
        _histogram_cell(est),
    )
    return table


def cmd_tree_experiment(config: RunConfig, settings: Settings) -> ReportTable:
    settings = config.apply(settings)
    loaded = load_graph(config, settings)
    result = run_tree_experiment(loaded, settings, config.start)
    if config.out is not None:
        write_table(vertex_table(loaded, result.estimates[TreeVariant.T1.value]), config.out)
    return result.table


# --------------------------------------------------------------------------
# distances
# --------------------------------------------------------------------------


@dataclass
class DistanceExperiment:
    table: ReportTable
    estimate: DistanceEstimate


def default_root(g: Graph, start: int = 0) -> int:
    """The T1 center: middle of a mutually distant pair's geodesic."""
    return choose_root(g, TreeVariant.T1, start=start).root


def run_distance_experiment(
    loaded: LoadedGraph,
    settings: Settings,
    *,
    root: int | None = None,
    start: int = 0,
    delta: int | None = None,
    rho: int | None = None,
) -> DistanceExperiment:
    g = loaded.graph
    root = default_root(g, start) if root is None else root
    table = ReportTable(title="distance approximation", columns=DISTANCE_COLUMNS)
    sources: list[int] | None = None
    if settings.distance_sample:
        sources = sample_sources(bfs(g, root), settings.distance_sample)
        exact = distance_rows(g, sources, chunk_rows=settings.apsp_chunk_rows)
        sources_cell = f"{len(sources)}*"
    else:
        exact = distance_matrix(
            g,
            budget=settings.oracle_budget,
            force=settings.force,
            chunk_rows=settings.apsp_chunk_rows,
            workers=settings.workers,
        )
        sources_cell = "all"
    name, label = loaded.name, g.label(root)

    if rho is not None:
        full = exact if sources is None else distance_matrix(g, force=True)
        estimate = approximate_all_distances_estimated(
            g,
            rho,
            StretchedEstimator(full),
            root,
            check_against=full if settings.debug_checks else None,
        )
        stats = distance_error_stats(estimate, exact, sources)
        estimate = estimate.with_stats(stats)
        bound = 2 * rho + 2
        table.add_row(
            name,
            label,
            estimate.mode.value,
            rho,
            stats.delta_max,
            stats.delta_avg,
            stats.delta_min >= 0 and stats.delta_max <= bound,
            sources_cell,
        )
        return DistanceExperiment(table, estimate)

    if delta is not None:
        reach = power_reachability(
            g,
            delta,
            budget=settings.power_budget,
            force=settings.force,
            chunk_rows=settings.apsp_chunk_rows,
            bitmap_max_n=settings.bitmap_max_n,
        )
        estimate = approximate_all_distances(g, delta, root, reach=reach)
        stats = distance_error_stats(estimate, exact, sources)
        estimate = estimate.with_stats(stats)
        trace = [(delta, stats)]
    else:
        found = smallest_admissible_delta(
            g,
            root,
            exact,
            sources=sources,
            budget=settings.power_budget,
            force=settings.force,
            chunk_rows=settings.apsp_chunk_rows,
        )
        estimate, trace = found.estimate, found.trace
    for d, stats in trace:
        table.add_row(
            name,
            label,
            estimate.mode.value,
            d,
            stats.delta_max,
            stats.delta_avg,
            stats.delta_max <= d + 1,
            sources_cell,
        )
    return DistanceExperiment(table, estimate)


def cmd_distance_experiment(config: RunConfig, settings: Settings) -> ReportTable:
    settings = config.apply(settings)
    loaded = load_graph(config, settings)
    result = run_distance_experiment(
        loaded,
        settings,
        root=config.root,
        start=config.start,
        delta=config.delta,
        rho=config.rho,
    )
    if config.out is not None:
        result.estimate.dhat.save(config.out)
        log.info("distances.dumped", path=str(config.out), n=result.estimate.n)
    return result.table


def write_table(table: ReportTable, path: Path) -> None:
    path.write_text(table.to_tsv(), encoding="utf-8")
