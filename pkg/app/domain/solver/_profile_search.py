"""Search for a labeling whose induced colour multiset equals a target."""

from collections import Counter
from collections.abc import Mapping

from loguru import logger

from app.schemas import EdgeLabeling, Graph

from ._plan import SearchPlan, build_plan


class _ProfileSearch:
    def __init__(self, plan: SearchPlan, target: Counter):
        self.plan = plan
        self.capacity = dict(target)
        self.max_color = max(target)
        self.sums = [0] * plan.vertex_count
        self.left = list(plan.degrees)
        self.used = [False] * (plan.q + 1)
        self.assigned = [0] * plan.q
        self.nodes = 0

    def _close(self, x: int) -> bool:
        color = self.sums[x]
        if self.capacity.get(color, 0) == 0:
            return False
        for y in self.plan.neighbors[x]:
            if self.left[y] == 0 and self.sums[y] == color:
                return False
        self.capacity[color] -= 1
        return True

    def _descend(self, pos: int) -> bool:
        plan = self.plan
        if pos == plan.q:
            return True
        u, v = plan.endpoints[pos]
        for label in range(1, plan.q + 1):
            if self.used[label]:
                continue
            if self.sums[u] + label > self.max_color or self.sums[v] + label > self.max_color:
                # labels only grow the sums
                break
            self.nodes += 1
            self.used[label] = True
            self.assigned[pos] = label
            self.sums[u] += label
            self.sums[v] += label
            self.left[u] -= 1
            self.left[v] -= 1

            closed: list[int] = []
            feasible = True
            for x in (u, v):
                if self.left[x] == 0:
                    if not self._close(x):
                        feasible = False
                        break
                    closed.append(x)

            if feasible and self._descend(pos + 1):
                return True

            for x in closed:
                self.capacity[self.sums[x]] += 1
            self.left[u] += 1
            self.left[v] += 1
            self.sums[u] -= label
            self.sums[v] -= label
            self.used[label] = False
        return False

    def run(self) -> tuple[int, ...] | None:
        if not self._descend(0):
            return None
        labels = [0] * self.plan.q
        for pos, label in enumerate(self.assigned):
            labels[self.plan.order[pos]] = label
        return tuple(labels)


def search_labeling_with_profile(g: Graph, target: Mapping[int, int]) -> EdgeLabeling | None:
    """Any local antimagic labeling with colour multiset `target`, else None.

    Size limits are enforced by the caller.
    """
    g.require_labelable()
    wanted = Counter({color: mult for color, mult in target.items() if mult > 0})
    q = g.edge_count
    if not wanted:
        return None
    if sum(wanted.values()) != g.vertex_count:
        logger.debug("Target holds {} colours for {} vertices", sum(wanted.values()), g.vertex_count)
        return None
    if sum(color * mult for color, mult in wanted.items()) != q * (q + 1):
        logger.debug("Target colour sum differs from q(q+1)={}", q * (q + 1))
        return None

    search = _ProfileSearch(build_plan(g), wanted)
    labels = search.run()
    logger.debug("Profile search on {} explored {} nodes", g.describe(), search.nodes)
    return EdgeLabeling(labels=labels) if labels is not None else None
