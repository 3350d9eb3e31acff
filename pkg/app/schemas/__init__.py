"""Pydantic models shared across domain packages."""

from .graph import Edge, Graph, GraphMetadata, VertexSet
from .labeling import ColorProfile, EdgeLabeling, InducedColoring
from .prediction import ExperimentReport, PredictedBounds, PredictionCase
from .solver import LemmaAudit, SolverMethod, SolverResult
from .store import ResultRecord

__all__ = [
    "ColorProfile",
    "Edge",
    "EdgeLabeling",
    "ExperimentReport",
    "Graph",
    "GraphMetadata",
    "InducedColoring",
    "LemmaAudit",
    "PredictedBounds",
    "PredictionCase",
    "ResultRecord",
    "SolverMethod",
    "SolverResult",
    "VertexSet",
]
