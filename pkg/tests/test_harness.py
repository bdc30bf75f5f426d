"""Tests for report tables, run configuration, the experiment commands and verify."""

from __future__ import annotations

from itertools import islice
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from hyperecc.config import Settings
from hyperecc.distances import TriangularMatrix
from hyperecc.errors import BudgetExceededError, GeneratorSpecError
from hyperecc.graph import is_connected
from hyperecc.graph import generators as gen
from hyperecc.harness import (
    ReportTable,
    RunConfig,
    VerifyReport,
    cmd_distance_experiment,
    cmd_hyperbolicity,
    cmd_stats,
    cmd_tree_experiment,
    cmd_verify,
    default_suite,
    generate,
    load_graph,
    run_distance_experiment,
    run_tree_experiment,
    verify_graph,
)
from hyperecc.models import HalfInt

# --- report tables ---------------------------------------------------------


def test_report_table_formats_cells() -> None:
    table = ReportTable(title="demo", columns=["name", "ok", "avg", "missing", "delta"])
    table.add_row("x", True, 1.23456, None, HalfInt(3))
    assert table.rows == [["x", "yes", "1.235", "-", "1.5"]]
    assert table.to_tsv() == "name\tok\tavg\tmissing\tdelta\nx\tyes\t1.235\t-\t1.5\n"
    assert table.column("avg") == ["1.235"]
    with pytest.raises(ValueError, match="expected 5 cells"):
        table.add_row("too", "short")


def test_report_table_pretty_and_extend() -> None:
    a = ReportTable(title="t", columns=["k", "value"])
    a.add_row("a", 10)
    b = ReportTable(columns=["k", "value"])
    b.add_row("bb", 2)
    a.extend(b)
    assert a.render(pretty=True).splitlines() == [
        "t",
        " k  value",
        "--  -----",
        " a     10",
        "bb      2",
    ]
    assert a.render() == a.to_tsv()
    with pytest.raises(ValueError, match="column mismatch"):
        a.extend(ReportTable(columns=["other"]))
    with pytest.raises(ValidationError):
        ReportTable(columns=["a", "b"], rows=[["only-one"]])


# --- run configuration and inputs ------------------------------------------


def test_run_config_needs_exactly_one_source(tmp_path: Path) -> None:
    with pytest.raises(ValidationError, match="mutually exclusive"):
        RunConfig(command="stats", input=tmp_path / "g.txt", gen="path:3")
    with pytest.raises(ValidationError, match="needs --input or --gen"):
        RunConfig(command="stats")
    assert RunConfig(command="verify").gen is None
    with pytest.raises(ValidationError):
        RunConfig(command="distances", gen="path:3", delta=-1)


def test_run_config_overrides_settings(settings: Settings) -> None:
    config = RunConfig(command="stats", gen="path:3", budget=10, force=True, seed=7, sample=4)
    updated = config.apply(settings)
    assert updated.oracle_budget == 10
    assert updated.force
    assert updated.seed == 7
    assert updated.distance_sample == 4
    assert settings.oracle_budget != 10  # original untouched
    assert RunConfig(command="stats", gen="path:3").apply(settings) == settings


def test_generate_specs() -> None:
    assert generate("path:5", 0).n == 5
    assert generate("cycle:7", 0).edge_count == 7
    assert generate("star:4", 0).degree(0) == 4
    assert generate("complete:4", 0).edge_count == 6
    assert generate("grid:2x3", 0).n == 6
    assert generate("tree:12", 0).edge_count == 11
    assert is_connected(generate("block:4,3", 0))
    a = generate("random:15,0.3", 42)
    b = generate("random:15,0.3", 42)
    assert a.edges().tolist() == b.edges().tolist()


@pytest.mark.parametrize("spec", ["bogus", "wheel:5", "path:x", "grid:3", "cycle:2", "random:5"])
def test_generate_rejects_bad_specs(spec: str) -> None:
    with pytest.raises(GeneratorSpecError):
        generate(spec, 0)


def test_load_graph_reduces_to_largest_component(tmp_path: Path, settings: Settings) -> None:
    path = tmp_path / "edges.txt"
    path.write_text("# two pieces\na b\nb c\nc d\nx y\n", encoding="utf-8")
    loaded = load_graph(RunConfig(command="stats", input=path), settings)
    assert loaded.name == "edges.txt"
    assert loaded.original_n == 6
    assert loaded.components == 2
    assert loaded.graph.n == 4
    assert loaded.retained.tolist() == [0, 1, 2, 3]
    assert loaded.graph.label(3) == "d"


# --- experiments -----------------------------------------------------------


def _row(table: ReportTable, index: int = 0) -> dict[str, str]:
    return dict(zip(table.columns, table.rows[index], strict=True))


def test_stats_on_path(settings: Settings) -> None:
    table = cmd_stats(RunConfig(command="stats", gen="path:5"), settings)
    assert _row(table) == {
        "graph": "path:5",
        "n": "5",
        "m": "4",
        "center_size": "1",
        "avg_degree": "1.600",
        "rad": "2",
        "diam": "4",
        "center_diam": "0",
        "center_connected": "yes",
        "delta4": "0.0",
    }


def test_stats_partial_row_over_budget(settings: Settings) -> None:
    small = settings.model_copy(update={"quadruple_budget": 3})
    table = cmd_stats(RunConfig(command="stats", gen="cycle:8", budget=1), small)
    row = _row(table)
    assert row["n"] == "8"
    assert row["rad"] == "-"
    assert row["center_size"] == "-"
    # sampling covers the whole graph here, so delta4 is still exact
    assert row["delta4"] == "2.0"


def test_stats_force_keeps_delta4_exact_above_budget(settings: Settings) -> None:
    small = settings.model_copy(update={"quadruple_budget": 3, "hyperbolicity_sample_size": 5})
    sampled = _row(cmd_stats(RunConfig(command="stats", gen="grid:3x3"), small))
    assert sampled["delta4"].endswith("*")
    forced = _row(cmd_stats(RunConfig(command="stats", gen="grid:3x3", force=True), small))
    assert forced["delta4"] == "2.0"
    assert forced["rad"] == "2"


def test_hyperbolicity_command(settings: Settings) -> None:
    table = cmd_hyperbolicity(RunConfig(command="hyperbolicity", gen="cycle:4"), settings)
    assert _row(table) == {
        "graph": "cycle:4",
        "n": "4",
        "delta4": "1.0",
        "tau": "4",
        "witness": "0,1,2,3",
        "mode": "exact",
    }
    sampled = settings.model_copy(
        update={"quadruple_budget": 5, "hyperbolicity_sample_size": 5}
    )
    row = _row(cmd_hyperbolicity(RunConfig(command="hyperbolicity", gen="grid:3x3"), sampled))
    assert row["mode"] == "sampled"
    assert row["delta4"].endswith("*")


def test_tree_experiment_on_c6(settings: Settings) -> None:
    loaded = load_graph(RunConfig(command="trees", gen="cycle:6"), settings)
    result = run_tree_experiment(loaded, settings)
    assert result.table.column("tree") == ["T1", "T2", "T3", "linear"]
    t1 = _row(result.table, 0)
    assert t1["root"] == "1"
    assert t1["scans"] == "2"
    assert t1["d_uv"] == "3"
    assert t1["2rad_minus_d_uv"] == "3"
    assert t1["ecc_root_minus_rad"] == "0"
    assert t1["diam_tree"] == "5"
    assert t1["k_max"] == "2"
    assert t1["k_avg"] == "1.000"
    assert t1["k_histogram"] == "0:33.3%;1:33.3%;2:33.3%"
    assert _row(result.table, 2)["scans"] == "-"
    assert set(result.estimates) == {"T1", "T2", "T3", "linear"}


def test_tree_experiment_far_vertex_columns_on_c6(settings: Settings) -> None:
    loaded = load_graph(RunConfig(command="trees", gen="cycle:6"), settings)
    table = run_tree_experiment(loaded, settings).table
    assert table.column("ecc_far") == ["-", "3", "-", "3"]
    assert table.column("2rad_minus_ecc_far") == ["-", "3", "-", "3"]


def test_tree_experiment_far_vertex_columns_on_path(settings: Settings) -> None:
    loaded = load_graph(RunConfig(command="trees", gen="path:5"), settings)
    table = run_tree_experiment(loaded, settings).table
    # the far vertex from 0 is the other end, ecc 4 against rad 2
    assert table.column("ecc_far") == ["-", "4", "-", "4"]
    assert table.column("2rad_minus_ecc_far") == ["-", "0", "-", "0"]
    assert table.column("d_uv") == ["4", "-", "-", "-"]


def test_tree_experiment_writes_vertex_table(tmp_path: Path, settings: Settings) -> None:
    out = tmp_path / "t1.tsv"
    cmd_tree_experiment(RunConfig(command="trees", gen="cycle:6", out=out), settings)
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "vertex\tecc\testimate\tk"
    assert lines[4] == "3\t3\t5\t2"
    assert lines[-1].startswith("summary\tk_max=2")
    assert len(lines) == 1 + 6 + 1


def test_distance_experiment_admissible_search(settings: Settings) -> None:
    loaded = load_graph(RunConfig(command="distances", gen="cycle:6"), settings)
    result = run_distance_experiment(loaded, settings, root=0)
    table = result.table
    assert table.column("delta") == ["0", "1", "2"]
    assert table.column("delta_max") == ["4", "5", "2"]
    assert table.column("admissible") == ["no", "no", "yes"]
    assert set(table.column("sources")) == {"all"}
    assert set(table.column("mode")) == {"exact-power"}
    assert result.estimate.threshold == 2


def test_distance_experiment_single_delta_and_rho(settings: Settings) -> None:
    loaded = load_graph(RunConfig(command="distances", gen="cycle:6"), settings)
    single = run_distance_experiment(loaded, settings, root=0, delta=2)
    assert _row(single.table)["delta_max"] == "2"
    assert len(single.table.rows) == 1
    estimated = run_distance_experiment(loaded, settings, root=0, rho=1)
    row = _row(estimated.table)
    assert row["mode"] == "estimator"
    # rho=1 is below the thinness of C6: every lambda=1 error shifted by 2
    assert row["delta_max"] == "7"
    assert row["admissible"] == "no"
    # the default root is the T1 center
    assert _row(run_distance_experiment(loaded, settings, delta=2).table)["root"] == "1"


def test_distance_experiment_sampled_sources(settings: Settings) -> None:
    sampled = settings.model_copy(update={"distance_sample": 2})
    loaded = load_graph(RunConfig(command="distances", gen="cycle:6"), sampled)
    result = run_distance_experiment(loaded, sampled, root=0)
    assert set(result.table.column("sources")) == {"2*"}
    assert result.estimate.stats is not None
    assert result.estimate.stats.sampled


def test_distance_experiment_dump(tmp_path: Path, settings: Settings) -> None:
    out = tmp_path / "dhat.bin"
    config = RunConfig(command="distances", gen="cycle:6", root=0, delta=2, out=out)
    cmd_distance_experiment(config, settings)
    dump = TriangularMatrix.read(out)
    assert dump.n == 6
    assert dump.get(2, 4) == 2


def test_distance_experiment_budget(settings: Settings) -> None:
    config = RunConfig(command="distances", gen="path:30", budget=1)
    with pytest.raises(BudgetExceededError):
        cmd_distance_experiment(config, settings)


# --- verify ----------------------------------------------------------------


def test_verify_graph_passes_on_small_families(settings: Settings) -> None:
    for g in (gen.cycle_graph(6), gen.grid_graph(3, 3), gen.path_graph(1), gen.star_graph(4)):
        report = verify_graph("g", g, settings)
        assert report.ok, [v.describe() for v in report.violations]
        assert report.checks > 0


def test_verify_detects_corruption(settings: Settings) -> None:
    report = verify_graph("cycle:6", gen.cycle_graph(6), settings, corrupt=(0, 3))
    assert not report.ok
    checks = {v.check for v in report.violations}
    assert any(check.startswith("dhat <= d + lambda + 1") for check in checks)
    table = report.table()
    assert table.columns == ["graph", "check", "witness", "detail"]
    assert "cycle:6" in table.column("graph")
    assert report.summary().startswith("verify FAILED: 1 graphs")


def test_verify_report_merge() -> None:
    total = VerifyReport()
    total.merge(VerifyReport(graphs=1, checks=5))
    total.merge(VerifyReport(graphs=2, checks=7))
    assert (total.graphs, total.checks) == (3, 12)
    assert total.summary() == "verify ok: 3 graphs, 12 checks, 0 violations"


def test_default_suite_composition(settings: Settings) -> None:
    names = []
    for name, g in default_suite(settings):
        names.append(name)
        assert is_connected(g), name
    assert sum(n.startswith("random#") for n in names) == settings.verify_random_graphs
    assert "path:30" in names
    assert "cycle:30" in names
    assert "grid:8x8" in names
    assert "complete:8" in names
    assert sum(n.startswith("block#") for n in names) == 10


def test_cmd_verify_on_a_suite_slice(settings: Settings) -> None:
    suite = islice(default_suite(settings), 8)
    report = cmd_verify(RunConfig(command="verify"), settings, suite=suite)
    assert report.ok, [v.describe() for v in report.violations]
    assert report.graphs == 8


def test_cmd_verify_single_input(settings: Settings) -> None:
    report = cmd_verify(RunConfig(command="verify", gen="tree:20"), settings)
    assert report.ok
    assert report.graphs == 1


def test_verify_checks_block_graph_thinness(settings: Settings) -> None:
    g = gen.block_graph(6, np.random.default_rng(3), 4)
    plain = verify_graph("block#0", g, settings)
    block = verify_graph("block#0", g, settings, block=True)
    assert block.ok, [v.describe() for v in block.violations]
    assert block.checks == plain.checks + 1
    # C8 has delta4 = 2, so the block check must fire
    report = verify_graph("cycle:8", gen.cycle_graph(8), settings, block=True)
    assert [v.check for v in report.violations] == ["block graph: delta4 <= 1"]
    assert cmd_verify(RunConfig(command="verify", gen="block:5,3"), settings).ok


def test_verify_rejects_corrupt_pair_out_of_range(settings: Settings) -> None:
    with pytest.raises(ValueError, match="out of range"):
        verify_graph("cycle:6", gen.cycle_graph(6), settings, corrupt=(0, 99))


def test_suite_corruption_skips_graphs_too_small(settings: Settings) -> None:
    suite = iter([("path:2", gen.path_graph(2)), ("cycle:6", gen.cycle_graph(6))])
    report = cmd_verify(RunConfig(command="verify"), settings, corrupt=(0, 3), suite=suite)
    assert report.graphs == 2
    assert {v.graph for v in report.violations} == {"cycle:6"}
