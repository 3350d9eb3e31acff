from app.schemas import EdgeLabeling, Graph, SolverMethod, SolverResult
from app.domain.graph import pendant_vertices
from app.domain.labeling import require_local_antimagic


def certify(g: Graph, f: EdgeLabeling) -> SolverResult | None:
    """Exact chi_la when f meets the pendant lower bound k + 1, else None.

    Raises AppError(E_NOT_LOCAL_ANTIMAGIC) when f is not local antimagic.
    """
    coloring = require_local_antimagic(g, f)
    k = len(pendant_vertices(g))
    if coloring.count != k + 1:
        return None
    return SolverResult(
        chi_la=k + 1,
        witness=f,
        exhaustive=False,
        method=SolverMethod.CERTIFIED_BY_PENDANT_BOUND,
        lower_bound=k + 1,
    )
