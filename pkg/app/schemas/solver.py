"""Solver results."""

from enum import Enum

from pydantic import BaseModel, ConfigDict

from .labeling import EdgeLabeling


class SolverMethod(str, Enum):
    EXHAUSTIVE = "exhaustive"
    CERTIFIED_BY_PENDANT_BOUND = "certified-by-pendant-bound"

    def __str__(self) -> str:
        return self.value


class SolverResult(BaseModel):
    """Exact chi_la with a witness labeling.

    `exhaustive` is set when the search space was closed, either by full
    enumeration or by reaching the proven lower bound.
    """

    model_config = ConfigDict(frozen=True)

    chi_la: int
    witness: EdgeLabeling
    exhaustive: bool
    nodes: int = 0
    method: SolverMethod = SolverMethod.EXHAUSTIVE
    lower_bound: int
    wall_time_ms: int = 0


class LemmaAudit(BaseModel):
    """Outcome of enumerating every labeling of one graph against the pendant lemma."""

    model_config = ConfigDict(frozen=True)

    labelings: int
    local_antimagic: int
    max_on_nonpendant: int
    violations: int
