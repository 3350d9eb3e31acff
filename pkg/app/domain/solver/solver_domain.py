"""Exact local antimagic chromatic number by sharded exhaustive search."""

import time

from loguru import logger

from app.app_config import get_app_environ_config
from app.domain.graph import chromatic_number_exact, pendant_vertices
from app.schemas import EdgeLabeling, Graph, SolverMethod, SolverResult
from app.utils.app_errors import AppError, AppErrorCode, ExitCode

from ._plan import build_plan
from ._profile_search import search_labeling_with_profile
from ._sharding import available_jobs, run_shards


def lower_bound(g: Graph) -> int:
    """max(2, k + 1, chi(G)); chi(G) is skipped above the chromatic vertex limit."""
    bound = max(2, len(pendant_vertices(g)) + 1)
    vertex_limit = get_app_environ_config().LA_CHROMATIC_VERTEX_LIMIT
    if g.vertex_count <= vertex_limit:
        bound = max(bound, chromatic_number_exact(g, vertex_limit=vertex_limit))
    return bound


class ChiLaSolver:
    """Solver bound to an edge limit and a worker count.

    Both default to the LA_EDGE_LIMIT / LA_JOBS settings; jobs=0 means available
    parallelism and jobs=1 runs every shard in this process.
    """

    def __init__(self, edge_limit: int | None = None, jobs: int | None = None):
        cfg = get_app_environ_config()
        self.edge_limit = cfg.LA_EDGE_LIMIT if edge_limit is None else edge_limit
        self.hard_cap = cfg.LA_EDGE_HARD_CAP
        jobs = cfg.LA_JOBS if jobs is None else jobs
        self.jobs = available_jobs() if jobs <= 0 else jobs

        if self.edge_limit > self.hard_cap:
            raise AppError(
                errcode=AppErrorCode.E_TOO_LARGE,
                errmesg=f"edge_limit {self.edge_limit} exceeds the hard cap {self.hard_cap}",
            )

    def _check_size(self, g: Graph) -> None:
        g.require_labelable()
        if g.edge_count > self.edge_limit:
            raise AppError(
                errcode=AppErrorCode.E_TOO_LARGE,
                errmesg=f"{g.describe()} exceeds the edge limit {self.edge_limit}",
            )
        if g.edge_count == self.hard_cap:
            logger.warning("Searching {} at the hard cap of {} edges; expect a long run", g.describe(), self.hard_cap)

    def solve(self, g: Graph) -> SolverResult:
        self._check_size(g)
        bound = lower_bound(g)
        started = time.perf_counter()

        plan = build_plan(g)
        best, nodes = run_shards(plan, bound, self.jobs)
        if best is None or best.witness is None:
            # every connected graph of order >= 3 has a local antimagic labeling
            raise AppError(
                errcode=AppErrorCode.E_INTERNAL_ERROR,
                errmesg=f"Search of {g.describe()} found no local antimagic labeling",
                exit_code=ExitCode.INTERNAL_ERROR,
            )

        wall_time_ms = int((time.perf_counter() - started) * 1000)
        logger.info(
            "chi_la({}) = {} (lower bound {}, {} nodes, {} jobs, {} ms)",
            g.describe(),
            best.best,
            bound,
            nodes,
            self.jobs,
            wall_time_ms,
        )
        return SolverResult(
            chi_la=best.best,
            witness=EdgeLabeling(labels=best.witness),
            exhaustive=True,
            nodes=nodes,
            method=SolverMethod.EXHAUSTIVE,
            lower_bound=bound,
            wall_time_ms=wall_time_ms,
        )

    def find_labeling_with_profile(self, g: Graph, target: dict[int, int]) -> EdgeLabeling | None:
        self._check_size(g)
        return search_labeling_with_profile(g, target)


def solve_chi_la(g: Graph, edge_limit: int | None = None, jobs: int | None = None) -> SolverResult:
    return ChiLaSolver(edge_limit=edge_limit, jobs=jobs).solve(g)


def find_labeling_with_profile(
    g: Graph, target: dict[int, int], edge_limit: int | None = None
) -> EdgeLabeling | None:
    return ChiLaSolver(edge_limit=edge_limit, jobs=1).find_labeling_with_profile(g, target)
