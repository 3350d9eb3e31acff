"""Shard the search by the label on the first edge and reduce the shard minima."""

import os
from multiprocessing import Pool

from loguru import logger

from ._plan import SearchPlan
from ._search import ShardOutcome, _search_shard_task, search_shard


def available_jobs() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:
        return max(1, os.cpu_count() or 1)


def _reduce(outcomes: list[ShardOutcome]) -> ShardOutcome | None:
    found = [o for o in outcomes if o.best is not None]
    if not found:
        return None
    return min(found, key=lambda o: (o.best, o.first_label))


def run_sequential(plan: SearchPlan, lower_bound: int) -> tuple[ShardOutcome | None, int]:
    """Run shards in label order, carrying the incumbent from shard to shard."""
    outcomes: list[ShardOutcome] = []
    incumbent: int | None = None
    nodes = 0
    for first_label in range(1, plan.q + 1):
        outcome = search_shard(plan, first_label, incumbent, lower_bound)
        nodes += outcome.nodes
        logger.debug("Shard {}/{}: best {}, {} nodes", first_label, plan.q, outcome.best, outcome.nodes)
        outcomes.append(outcome)
        if outcome.best is not None:
            incumbent = outcome.best
        if outcome.hit_lower_bound:
            break
    return _reduce(outcomes), nodes


def run_parallel(plan: SearchPlan, lower_bound: int, jobs: int) -> tuple[ShardOutcome | None, int]:
    """Run shards on a process pool; remaining shards are dropped once one reaches the lower bound."""
    tasks = [(plan, first_label, lower_bound) for first_label in range(1, plan.q + 1)]
    outcomes: list[ShardOutcome] = []
    nodes = 0
    with Pool(processes=min(jobs, len(tasks))) as pool:
        for outcome in pool.imap_unordered(_search_shard_task, tasks):
            nodes += outcome.nodes
            logger.debug("Shard {}/{}: best {}, {} nodes", outcome.first_label, plan.q, outcome.best, outcome.nodes)
            outcomes.append(outcome)
            if outcome.hit_lower_bound:
                logger.debug("Shard {} reached the lower bound {}, cancelling the rest", outcome.first_label, lower_bound)
                pool.terminate()
                break
    return _reduce(outcomes), nodes


def run_shards(plan: SearchPlan, lower_bound: int, jobs: int) -> tuple[ShardOutcome | None, int]:
    if jobs <= 1 or plan.q <= 1:
        return run_sequential(plan, lower_bound)
    return run_parallel(plan, lower_bound, jobs)
