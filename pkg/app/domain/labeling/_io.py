"""Labeling files: `edge_index label` per line plus a trailing `# colors: v=c` block."""

from pathlib import Path

from app.schemas import EdgeLabeling, Graph
from app.utils.app_errors import AppError, AppErrorCode

from ._coloring import induced_colors


def parse_labeling(text: str, g: Graph) -> EdgeLabeling:
    assigned: dict[int, int] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Line {line_number}: expected 'edge_index label', got {raw!r}",
            )
        try:
            index, label = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Line {line_number}: expected integers, got {raw!r}",
            ) from exc
        if index in assigned:
            raise AppError(
                errcode=AppErrorCode.E_LABELING_MISMATCH,
                errmesg=f"Line {line_number}: edge {index} labelled twice",
            )
        assigned[index] = label

    if sorted(assigned) != list(range(g.edge_count)):
        raise AppError(
            errcode=AppErrorCode.E_LABELING_MISMATCH,
            errmesg=f"Labeling must cover edges 0..{g.edge_count - 1} exactly once",
        )
    return EdgeLabeling(labels=tuple(assigned[i] for i in range(g.edge_count)))


def read_labeling(path: Path | str, g: Graph) -> EdgeLabeling:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg=f"Cannot read labeling file {path}: {exc}",
        ) from exc
    return parse_labeling(text, g)


def format_labeling(g: Graph, f: EdgeLabeling) -> str:
    lines = [f"{index} {label}" for index, label in enumerate(f.labels)]
    lines.append("# colors:")
    lines.extend(f"# {v}={c}" for v, c in enumerate(induced_colors(g, f).colors))
    return "\n".join(lines) + "\n"


def write_labeling(g: Graph, f: EdgeLabeling, path: Path | str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_labeling(g, f), encoding="utf-8")
    return path
