import mmh3
import orjson

from app.schemas import EdgeLabeling, Graph


def canonical_bytes(payload: dict) -> bytes:
    return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS)


def instance_hash(g: Graph, f: EdgeLabeling | None = None) -> str:
    """128-bit murmur hash of the edge list (and labels when given), as hex."""
    payload: dict = {"vertex_count": g.vertex_count, "edges": [list(pair) for pair in g.edges]}
    if f is not None:
        payload["labels"] = list(f.labels)
    return f"{mmh3.hash128(canonical_bytes(payload), signed=False):032x}"
