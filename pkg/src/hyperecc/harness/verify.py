"""Invariant checks over exact oracles, with τ = 4·δ₄ as the thinness bound.

Every inequality is checked exhaustively on one graph; a failure becomes a
:class:`Violation` naming the check and the witness vertices, never an
exception. ``default_suite`` is the seeded batch the acceptance run uses.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from hyperecc.config import Settings
from hyperecc.distances import (
    LevelObserver,
    StretchedEstimator,
    approximate_all_distances,
    approximate_all_distances_estimated,
    closed_form_estimate,
    distance_error_stats,
    distance_sandwich,
    iter_sweep_rows,
    power_reachability,
)
from hyperecc.eccentricity import (
    EccEstimate,
    choose_root,
    estimate_from_root,
    linear_root,
)
from hyperecc.graph import BfsLayering, Graph, bfs
from hyperecc.graph import generators as gen
from hyperecc.harness.inputs import RunConfig, load_graph
from hyperecc.harness.report import ReportTable
from hyperecc.hyperbolicity import four_point_delta, quadruple_delta
from hyperecc.logging import bind_run, get_logger, timed
from hyperecc.models import HalfInt, TreeVariant, Violation
from hyperecc.oracle import (
    DistanceMatrix,
    EccentricityProfile,
    center_geometry,
    distance_matrix,
    profile_from_matrix,
)

log = get_logger(__name__)

# Family-partition and closed-form checks are cubic; skip them above this size.
EXHAUSTIVE_SWEEP_MAX_N = 200


@dataclass
class VerifyReport:
    graphs: int = 0
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: VerifyReport) -> None:
        self.graphs += other.graphs
        self.checks += other.checks
        self.violations.extend(other.violations)

    def table(self) -> ReportTable:
        out = ReportTable(title="invariant violations", columns=["graph", "check", "witness", "detail"])
        for v in self.violations:
            out.add_row(v.graph, v.check, ",".join(str(w) for w in v.witness), v.detail)
        return out

    def summary(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return (
            f"verify {status}: {self.graphs} graphs, {self.checks} checks, "
            f"{len(self.violations)} violations"
        )


class _Checker:
    def __init__(self, graph: str) -> None:
        self.report = VerifyReport(graphs=1)
        self.graph = graph

    def expect(
        self,
        ok: bool,
        check: str,
        detail: str | Callable[[], str] = "",
        witness: tuple[int, ...] = (),
    ) -> None:
        self.report.checks += 1
        if ok:
            return
        text = detail() if callable(detail) else detail
        violation = Violation(check=check, graph=self.graph, detail=text, witness=witness)
        self.report.violations.append(violation)
        log.warning("verify.violation", graph=self.graph, check=check, witness=list(witness))

    def expect_all(
        self, mask: npt.NDArray[np.bool_], check: str, describe: Callable[[tuple[int, ...]], str]
    ) -> None:
        """One check over a boolean array; the first failing index is the witness."""
        bad = np.argwhere(~mask)
        if len(bad):
            witness = tuple(int(i) for i in bad[0])
            self.expect(False, check, lambda: describe(witness), witness)
        else:
            self.expect(True, check)


# --------------------------------------------------------------------------
# exact-oracle
# --------------------------------------------------------------------------


def _check_oracle(
    c: _Checker, g: Graph, dist: DistanceMatrix, profile: EccentricityProfile, tau: int
) -> None:
    rad, diam, ecc = profile.rad, profile.diam, profile.ecc
    c.expect(diam <= 2 * rad, "diam <= 2 rad", f"diam={diam} rad={rad}")
    for k, layer in profile.layers.items():
        idx = np.asarray(layer)
        width = int(dist[np.ix_(idx, idx)].max())
        c.expect(
            width <= 2 * k + 2 * tau + 1,
            "diam(C^k) <= 2k + 2tau + 1",
            f"k={k} diam={width} tau={tau}",
            (k,),
        )
    geometry = center_geometry(g, profile, dist)
    to_center = geometry.dist_to_center
    c.expect(geometry.center_diam <= diam, "center_diam <= diam", f"{geometry.center_diam} > {diam}")
    in_center = np.zeros(g.n, dtype=bool)
    in_center[list(profile.center)] = True
    c.expect_all((to_center == 0) == in_center, "d(v,C)=0 iff v in C", lambda w: f"vertex {w[0]}")
    c.expect_all(
        ecc <= to_center + rad,
        "ecc <= d(x,C) + rad",
        lambda w: f"ecc={ecc[w[0]]} d(x,C)={to_center[w[0]]} rad={rad}",
    )
    c.expect_all(
        to_center + rad - 4 * tau - 2 <= ecc,
        "d(x,C) + rad - 4tau - 2 <= ecc",
        lambda w: f"ecc={ecc[w[0]]} d(x,C)={to_center[w[0]]} rad={rad} tau={tau}",
    )


# --------------------------------------------------------------------------
# ecc-approx
# --------------------------------------------------------------------------


def _tree_bounds(
    c: _Checker, g: Graph, est: EccEstimate, profile: EccentricityProfile, slack: int | None
) -> None:
    tree = est.tree
    name = est.variant
    c.expect(tree.spans(g), f"{name}: tree edges are graph edges", witness=(tree.root,))
    heights = bfs(tree.graph, tree.root).height
    c.expect_all(
        heights == bfs(g, tree.root).height,
        f"{name}: d_T(v,root) = d_G(v,root)",
        lambda w: f"vertex {w[0]}",
    )
    brute = distance_matrix(tree.graph, force=True).max(axis=1)
    c.expect_all(est.estimate == brute, f"{name}: tree ecc = brute force", lambda w: f"vertex {w[0]}")
    c.expect(len(tree.tree_center) in (1, 2), f"{name}: |C(T)| in {{1,2}}")
    if len(tree.tree_center) == 2:
        a, b = tree.tree_center
        c.expect(tree.graph.has_edge(a, b), f"{name}: two tree centers adjacent", witness=(a, b))
    ecc = profile.ecc
    c.expect_all(ecc <= est.estimate, f"{name}: ecc <= ecc_T", lambda w: f"vertex {w[0]}")
    if slack is not None:
        c.expect_all(
            est.estimate <= ecc + slack,
            f"{name}: ecc_T <= ecc + {slack}",
            lambda w: f"vertex {w[0]} ecc={ecc[w[0]]} ecc_T={est.estimate[w[0]]}",
        )


def _check_eccentricity(
    c: _Checker, g: Graph, dist: DistanceMatrix, profile: EccentricityProfile, tau: int
) -> int:
    """Returns the T1 center so the distance checks can root there."""
    rad, diam, ecc = profile.rad, profile.diam, profile.ecc
    t1 = choose_root(g, TreeVariant.T1, profile)
    pair = t1.pair
    assert pair is not None
    u, v, d_uv = pair.u, pair.v, pair.distance
    c.expect(
        int(ecc[u]) == int(ecc[v]) == d_uv,
        "mutual pair: ecc(u) = ecc(v) = d(u,v)",
        f"ecc(u)={ecc[u]} ecc(v)={ecc[v]} d={d_uv}",
        (u, v),
    )
    steps = pair.trace_distances
    c.expect(
        all(a <= b for a, b in zip(steps, steps[1:], strict=False)),
        "mutual pair: trace distances non-decreasing",
        str(steps),
    )
    c.expect(pair.scans <= 2 * tau + 3, "scans <= 2tau + 3", f"scans={pair.scans} tau={tau}")
    c.expect(d_uv >= 2 * rad - 2 * tau - 1, "d(u,v) >= 2rad - 2tau - 1", f"d={d_uv}", (u, v))

    center = t1.root
    half = math.ceil(d_uv / 2)
    c.expect(int(ecc[center]) <= half + tau, "ecc(c) <= ceil(d(u,v)/2) + tau", f"ecc(c)={ecc[center]}", (center,))
    c.expect(half <= rad, "ceil(d(u,v)/2) <= rad", f"d={d_uv} rad={rad}", (u, v))
    for k, layer in profile.layers.items():
        for x in layer:
            d = int(dist[x, center])
            c.expect(
                k - tau <= d <= k + 2 * tau + 1,
                "x in C^k: k - tau <= d(x,c) <= k + 2tau + 1",
                f"k={k} d={d} tau={tau}",
                (x, center),
            )

    far = dist.argmax(axis=1)  # lowest-id furthest vertex per source
    c.expect_all(
        ecc[far] >= diam - 2 * tau,
        "ecc(furthest(u)) >= diam - 2tau",
        lambda w: f"u={w[0]} v={far[w[0]]} ecc(v)={ecc[far[w[0]]]}",
    )

    t2 = choose_root(g, TreeVariant.T2, profile)
    c.expect(int(ecc[t2.root]) <= rad + tau, "T2 root: ecc(w) <= rad + tau", f"ecc={ecc[t2.root]}", (t2.root,))
    lin = linear_root(g)
    cl = lin.root
    c.expect(int(ecc[cl]) <= rad + 3 * tau, "linear root: ecc(c) <= rad + 3tau", f"ecc={ecc[cl]}", (cl,))
    cover = int(dist[cl, list(profile.center)].max())
    c.expect(cover <= 3 * tau + 1, "linear root: C(G) in B(c, 3tau+1)", f"cover={cover}", (cl,))

    t3 = choose_root(g, TreeVariant.T3, profile)
    _tree_bounds(c, g, estimate_from_root(g, t1, profile), profile, 3 * tau + 1)
    _tree_bounds(c, g, estimate_from_root(g, t2, profile), profile, 6 * tau + 1)
    _tree_bounds(c, g, estimate_from_root(g, lin, profile), profile, 6 * tau + 1)
    _tree_bounds(c, g, estimate_from_root(g, t3, profile), profile, None)
    return center


# --------------------------------------------------------------------------
# dist-approx
# --------------------------------------------------------------------------


def _family_observer(c: _Checker, layering: BfsLayering) -> LevelObserver:
    height = layering.height
    sigma = layering.sigma

    def observe(x: int, k: int, family: dict[int, list[int]], assigned: list[int]) -> None:
        expected = (sigma > sigma[x]) & (height >= k)
        expected[assigned] = False
        seen = np.zeros(layering.n, dtype=np.int64)
        for rep, members in family.items():
            for v in members:
                seen[v] += 1
                if layering.ancestor(v, k) != rep:
                    c.expect(False, "sweep: set member below its representative", f"k={k}", (x, rep, v))
                    return
        ok = bool(np.all(seen == expected.astype(np.int64)))
        c.expect(ok, "sweep: family partitions the unassigned vertices", f"k={k}", (x,))

    return observe


def _check_sweep(
    c: _Checker,
    g: Graph,
    dist: DistanceMatrix,
    root: int,
    lam: int,
    corrupt: tuple[int, int] | None,
) -> None:
    reach = power_reachability(g, lam, force=True)
    estimate = approximate_all_distances(g, lam, root, reach=reach)
    if corrupt is not None:
        x, y = corrupt
        estimate.dhat.set(x, y, estimate.get(x, y) + lam + 2)
    dense = estimate.dhat.to_dense()
    layering = estimate.layering
    tag = f"root={root} lambda={lam}"
    diff = dense - dist
    c.expect_all(diff >= 0, f"d <= dhat ({tag})", lambda w: f"dhat={dense[w]} d={dist[w]}")
    c.expect_all(diff <= lam + 1, f"dhat <= d + lambda + 1 ({tag})", lambda w: f"dhat={dense[w]} d={dist[w]}")
    c.expect_all(dense == dense.T, f"dhat symmetric ({tag})", lambda w: "asymmetric pair")
    c.expect_all(dense[root] == layering.height, f"dhat(x,root) = h(x) ({tag})", lambda w: f"x={w[0]}")
    stats = distance_error_stats(estimate, dist)
    c.expect(stats.delta_avg <= stats.delta_max, f"delta_avg <= delta_max ({tag})")

    if g.n > EXHAUSTIVE_SWEEP_MAX_N:
        return
    writes = np.zeros((g.n, g.n), dtype=np.int64)
    observer = _family_observer(c, layering)
    rows = iter_sweep_rows(layering, lambda u, xk: reach.contains(xk, u), lam, observer)
    for x, targets, _ in rows:
        writes[x, targets] += 1
        writes[targets, x] += 1
    np.fill_diagonal(writes, 1)
    c.expect_all(writes == 1, f"sweep writes each pair once ({tag})", lambda w: "pair written twice or never")
    for x in range(g.n):
        for y in range(x):
            want = closed_form_estimate(layering, reach, x, y, lam, lam)
            got = int(dense[x, y])
            c.expect(got == want, f"sweep = closed form ({tag})", f"sweep={got} closed={want}", (x, y))
            lower, upper = distance_sandwich(layering, dist, x, y, lam)
            c.expect(
                lower <= int(dist[x, y]) <= upper,
                f"sandwich holds ({tag})",
                f"[{lower}, {upper}] d={dist[x, y]}",
                (x, y),
            )


def _check_estimated(
    c: _Checker, g: Graph, dist: DistanceMatrix, root: int, rho: int, strict: bool
) -> None:
    estimate = approximate_all_distances_estimated(
        g, rho, StretchedEstimator(dist), root, check_against=dist if strict else None
    )
    diff = estimate.dhat.to_dense() - dist
    tag = f"root={root} rho={rho}"
    c.expect_all(diff >= 0, f"estimated: d <= dhat ({tag})", lambda w: f"pair {w}")
    c.expect_all(
        diff <= 2 * rho + 2, f"estimated: dhat <= d + 2rho + 2 ({tag})", lambda w: f"pair {w}"
    )


# --------------------------------------------------------------------------
# Drivers
# --------------------------------------------------------------------------


def verify_graph(
    name: str,
    g: Graph,
    settings: Settings,
    *,
    corrupt: tuple[int, int] | None = None,
    block: bool = False,
) -> VerifyReport:
    """Check every bound on ``g``; ``block`` adds the block-graph delta4 <= 1 check."""
    if corrupt is not None and not all(0 <= v < g.n for v in corrupt):
        raise ValueError(f"--corrupt pair {corrupt} out of range for n={g.n}")
    bind_run(graph=name)
    with timed("verify.graph", n=g.n) as summary:
        report = _verify(name, g, settings, corrupt, block)
        summary.update(checks=report.checks, violations=len(report.violations))
    return report


def _verify(
    name: str,
    g: Graph,
    settings: Settings,
    corrupt: tuple[int, int] | None,
    block: bool,
) -> VerifyReport:
    c = _Checker(name)
    dist = distance_matrix(
        g,
        budget=settings.oracle_budget,
        force=settings.force,
        chunk_rows=settings.apsp_chunk_rows,
        workers=settings.workers,
    )
    profile = profile_from_matrix(dist)
    hyper = four_point_delta(
        g, dist, budget=settings.quadruple_budget, force=settings.force, workers=settings.workers
    )
    tau = hyper.tau
    c.expect(
        quadruple_delta(dist, *hyper.witness) == hyper.delta4,
        "witness reproduces delta4",
        str(hyper.delta4),
        hyper.witness,
    )
    if block:
        c.expect(
            hyper.delta4 <= HalfInt.of(1),
            "block graph: delta4 <= 1",
            str(hyper.delta4),
            hyper.witness,
        )
    _check_oracle(c, g, dist, profile, tau)
    center = _check_eccentricity(c, g, dist, profile, tau)
    for root in sorted({center, 0}):
        _check_sweep(c, g, dist, root, tau, corrupt if root == center else None)
        _check_estimated(c, g, dist, root, tau, settings.debug_checks)
    log.debug("verify.delta4", delta4=str(hyper.delta4), tau=tau)
    return c.report


def default_suite(settings: Settings) -> Iterator[tuple[str, Graph]]:
    """Seeded random graphs plus paths, cycles, grids, stars, cliques, trees and block graphs."""
    rng = np.random.default_rng(settings.seed)
    for i in range(settings.verify_random_graphs):
        n = int(rng.integers(settings.verify_min_n, settings.verify_max_n + 1))
        floor = min(1.0, 1.2 * math.log(n) / n)
        p = float(rng.uniform(floor, max(floor, 0.9)))
        yield f"random#{i}:{n},{p:.3f}", gen.random_connected_graph(n, p, rng)
    for n in range(1, 31):
        yield f"path:{n}", gen.path_graph(n)
    for n in range(3, 31):
        yield f"cycle:{n}", gen.cycle_graph(n)
    for r in range(1, 9):
        for cols in range(r, 9):
            yield f"grid:{r}x{cols}", gen.grid_graph(r, cols)
    for leaves in range(1, 11):
        yield f"star:{leaves}", gen.star_graph(leaves)
    for n in range(1, 9):
        yield f"complete:{n}", gen.complete_graph(n)
    for i in range(10):
        yield f"tree#{i}", gen.random_tree(int(rng.integers(2, 41)), rng)
        yield f"block#{i}", gen.block_graph(int(rng.integers(2, 12)), rng)


def cmd_verify(
    config: RunConfig,
    settings: Settings,
    *,
    corrupt: tuple[int, int] | None = None,
    suite: Iterator[tuple[str, Graph]] | None = None,
) -> VerifyReport:
    settings = config.apply(settings)
    report = VerifyReport()
    if config.input is not None or config.gen is not None:
        loaded = load_graph(config, settings)
        block = config.gen is not None and config.gen.startswith("block:")
        report.merge(
            verify_graph(loaded.name, loaded.graph, settings, corrupt=corrupt, block=block)
        )
        return report
    for name, g in suite if suite is not None else default_suite(settings):
        # suite graphs too small for the corrupted pair run uncorrupted
        fits = corrupt is not None and max(corrupt) < g.n
        report.merge(
            verify_graph(
                name,
                g,
                settings,
                corrupt=corrupt if fits else None,
                block=name.startswith("block#"),
            )
        )
    return report
