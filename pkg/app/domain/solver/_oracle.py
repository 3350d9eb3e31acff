"""Unpruned enumeration over all q! bijections, used to cross-check the solver."""

from itertools import permutations

from app.schemas import Graph, LemmaAudit
from app.utils.app_errors import AppError, AppErrorCode

ORACLE_EDGE_LIMIT = 8


def _require_small(g: Graph) -> None:
    g.require_labelable()
    if g.edge_count > ORACLE_EDGE_LIMIT:
        raise AppError(
            errcode=AppErrorCode.E_TOO_LARGE,
            errmesg=f"Full enumeration is limited to {ORACLE_EDGE_LIMIT} edges, got {g.edge_count}",
        )


def _colors(g: Graph, labels: tuple[int, ...]) -> list[int]:
    sums = [0] * g.vertex_count
    for (u, v), label in zip(g.edges, labels):
        sums[u] += label
        sums[v] += label
    return sums


def _is_proper(g: Graph, colors: list[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def brute_force_chi_la(g: Graph) -> int:
    _require_small(g)
    best: int | None = None
    for labels in permutations(range(1, g.edge_count + 1)):
        colors = _colors(g, labels)
        if _is_proper(g, colors):
            count = len(set(colors))
            if best is None or count < best:
                best = count
    if best is None:
        raise AppError(
            errcode=AppErrorCode.E_INTERNAL_ERROR,
            errmesg=f"No local antimagic labeling of {g.describe()}",
        )
    return best


def audit_pendant_lemma(g: Graph) -> LemmaAudit:
    """Count labelings that put q on a non-pendant edge yet use at most k + 1 colours."""
    _require_small(g)
    degrees = g.degrees()
    k = sum(1 for d in degrees if d == 1)
    q = g.edge_count
    top_edge_pendant = [degrees[u] == 1 or degrees[v] == 1 for u, v in g.edges]

    total = proper = on_nonpendant = violations = 0
    for labels in permutations(range(1, q + 1)):
        total += 1
        colors = _colors(g, labels)
        if not _is_proper(g, colors):
            continue
        proper += 1
        if top_edge_pendant[labels.index(q)]:
            continue
        on_nonpendant += 1
        if len(set(colors)) < k + 2:
            violations += 1
    return LemmaAudit(
        labelings=total,
        local_antimagic=proper,
        max_on_nonpendant=on_nonpendant,
        violations=violations,
    )
