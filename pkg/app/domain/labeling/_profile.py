"""Colour profile (t, r, b, n_i, c_i) of a local antimagic labeling."""

from collections import defaultdict

from app.schemas import ColorProfile, EdgeLabeling, Graph

from ._coloring import require_local_antimagic


def extract_profile(g: Graph, f: EdgeLabeling) -> ColorProfile:
    """Group vertices by colour and order the classes canonically.

    Classes holding at least one non-pendant vertex come first, by increasing
    colour; pendant-only classes follow, also by increasing colour. Two pendants
    never share a colour, so every pendant-only class is a singleton.
    """
    coloring = require_local_antimagic(g, f, what="base labeling")
    degrees = g.degrees()

    by_color: dict[int, list[int]] = defaultdict(list)
    for v, color in enumerate(coloring.colors):
        by_color[color].append(v)

    top = sorted(c for c, vs in by_color.items() if any(degrees[v] != 1 for v in vs))
    tail = sorted(c for c, vs in by_color.items() if all(degrees[v] == 1 for v in vs))
    ordered = top + tail

    pendant_classes = tuple(
        i for i, c in enumerate(top, start=1) if any(degrees[v] == 1 for v in by_color[c])
    )
    b = sum(1 for c in top for v in by_color[c] if degrees[v] == 1)

    return ColorProfile(
        e=g.edge_count,
        t=len(ordered),
        r=len(top),
        b=b,
        sizes=tuple(len(by_color[c]) for c in ordered),
        colors=tuple(ordered),
        pendant_classes=pendant_classes,
        members=tuple(tuple(sorted(by_color[c])) for c in ordered),
    )
