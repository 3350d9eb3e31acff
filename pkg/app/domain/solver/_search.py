"""Depth-first branch and bound over edge-label bijections."""

from dataclasses import dataclass

from ._plan import SearchPlan


@dataclass
class ShardOutcome:
    first_label: int
    best: int | None
    # labels indexed by edge index
    witness: tuple[int, ...] | None
    nodes: int
    hit_lower_bound: bool


class _BoundedSearch:
    """Minimum colour count among labelings whose first edge (in plan order) has a fixed label.

    Prunes a branch when a vertex whose incident edges are all labelled shares its colour
    with an equally closed neighbour, or when the closed vertices already use as many
    distinct colours as the incumbent.
    """

    def __init__(self, plan: SearchPlan, incumbent: int | None, lower_bound: int):
        self.plan = plan
        self.best = incumbent if incumbent is not None else plan.vertex_count + 1
        self.lower_bound = lower_bound
        self.witness: tuple[int, ...] | None = None
        self.nodes = 0
        self.done = False

        self.sums = [0] * plan.vertex_count
        self.left = list(plan.degrees)
        self.used = [False] * (plan.q + 1)
        self.assigned = [0] * plan.q
        self.color_counts: dict[int, int] = {}

    def _close(self, x: int) -> bool:
        color = self.sums[x]
        for y in self.plan.neighbors[x]:
            if self.left[y] == 0 and self.sums[y] == color:
                return False
        self.color_counts[color] = self.color_counts.get(color, 0) + 1
        return True

    def _open(self, x: int) -> None:
        color = self.sums[x]
        remaining = self.color_counts[color] - 1
        if remaining:
            self.color_counts[color] = remaining
        else:
            del self.color_counts[color]

    def _place(self, pos: int, label: int) -> None:
        plan = self.plan
        u, v = plan.endpoints[pos]
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

        if feasible and len(self.color_counts) < self.best:
            self._descend(pos + 1)

        for x in reversed(closed):
            self._open(x)
        self.left[u] += 1
        self.left[v] += 1
        self.sums[u] -= label
        self.sums[v] -= label
        self.used[label] = False

    def _descend(self, pos: int) -> None:
        plan = self.plan
        if pos == plan.q:
            self.best = len(self.color_counts)
            witness = [0] * plan.q
            for p, label in enumerate(self.assigned):
                witness[plan.order[p]] = label
            self.witness = tuple(witness)
            if self.best <= self.lower_bound:
                self.done = True
            return

        for label in range(1, plan.q + 1):
            if self.done:
                return
            if not self.used[label]:
                self._place(pos, label)

    def run(self, first_label: int) -> ShardOutcome:
        self._place(0, first_label)
        found = self.witness is not None
        return ShardOutcome(
            first_label=first_label,
            best=self.best if found else None,
            witness=self.witness,
            nodes=self.nodes,
            hit_lower_bound=self.done,
        )


def search_shard(plan: SearchPlan, first_label: int, incumbent: int | None, lower_bound: int) -> ShardOutcome:
    return _BoundedSearch(plan, incumbent, lower_bound).run(first_label)


def _search_shard_task(args: tuple[SearchPlan, int, int]) -> ShardOutcome:
    plan, first_label, lower_bound = args
    return search_shard(plan, first_label, None, lower_bound)
