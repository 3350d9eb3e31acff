"""Edge-list text files: one `u v` pair per line, `#` comments, 0-based indices."""

from pathlib import Path

import orjson

from app.app_config import get_app_environ_config
from app.schemas import Graph, GraphMetadata
from app.utils.app_errors import AppError, AppErrorCode

from ._families import from_edge_list

_METADATA_PREFIX = "# metadata:"


def parse_edge_list(text: str, max_edges: int | None = None) -> Graph:
    max_edges = max_edges or get_app_environ_config().LA_FILE_MAX_EDGES
    pairs: list[tuple[int, int]] = []
    metadata = GraphMetadata()

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(_METADATA_PREFIX):
            try:
                metadata = GraphMetadata.model_validate(orjson.loads(line[len(_METADATA_PREFIX) :]))
            except (orjson.JSONDecodeError, ValueError):
                # metadata is informational only
                pass
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue

        fields = line.split()
        if len(fields) != 2:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Line {line_number}: expected 'u v', got {raw!r}",
            )
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Line {line_number}: vertex indices must be integers, got {raw!r}",
            ) from exc
        if u < 0 or v < 0:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Line {line_number}: vertex indices must be non-negative",
            )
        pairs.append((u, v))
        if len(pairs) > max_edges:
            raise AppError(
                errcode=AppErrorCode.E_TOO_LARGE,
                errmesg=f"Edge list exceeds {max_edges} edges",
            )

    return from_edge_list(pairs, metadata=metadata)


def read_edge_list(path: Path | str, max_edges: int | None = None) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg=f"Cannot read graph file {path}: {exc}",
        ) from exc
    return parse_edge_list(text, max_edges=max_edges)


def format_edge_list(g: Graph) -> str:
    lines = [
        f"# {g.describe()}",
        f"{_METADATA_PREFIX} {orjson.dumps(g.metadata.model_dump()).decode()}",
    ]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_edge_list(g), encoding="utf-8")
    return path
