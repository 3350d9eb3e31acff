"""Subcommand implementations; each returns the exit code."""

from collections import Counter
from pathlib import Path
from typing import Any

import orjson
from loguru import logger
from pydantic import ValidationError

from app.domain.constructions import (
    Construction,
    augment_and_label,
    augment_star_leaf,
    label_spider_2n,
    label_star,
    wheel_family_profile,
)
from app.domain.graph import build_path, build_spider, build_wheel, read_edge_list, write_edge_list
from app.domain.harness import check_family_member, load_batch, predict, run_batch
from app.domain.labeling import (
    check_pendant_lemma,
    extract_profile,
    induced_colors,
    is_local_antimagic,
    read_labeling,
    write_labeling,
)
from app.domain.solver import ChiLaSolver, solve_chi_la
from app.schemas import ColorProfile, EdgeLabeling, Graph
from app.services.results_store import ResultsStore
from app.utils.app_errors import AppError, AppErrorCode, ExitCode

from .responses import CliSuccess, emit

CONSTRUCT_FAMILIES = ("spider2", "star", "star-augment", "wheel", "path", "spider")


def parse_multiplicities(text: str) -> list[tuple[int, int]]:
    """'2x4,1x3' -> [(2, 4), (1, 3)]; used for spider legs and colour targets."""
    pairs: list[tuple[int, int]] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        left, sep, right = item.partition("x")
        if not (sep and left.isdigit() and right.isdigit()):
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Expected 'AxB' items separated by commas, got {item!r}",
            )
        pairs.append((int(left), int(right)))
    if not pairs:
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg="Empty multiplicity list")
    return pairs


def _write_outputs(g: Graph, f: EdgeLabeling | None, out_dir: Path, stem: str) -> dict[str, Any]:
    files: dict[str, Any] = {"graph_file": str(write_edge_list(g, out_dir.joinpath(f"{stem}.edges")))}
    if f is None:
        return files
    files["labeling_file"] = str(write_labeling(g, f, out_dir.joinpath(f"{stem}.labels")))
    if is_local_antimagic(g, f):
        profile_path = out_dir.joinpath(f"{stem}.profile.json")
        profile = extract_profile(g, f)
        profile_path.write_bytes(orjson.dumps(profile.model_dump(mode="json"), option=orjson.OPT_INDENT_2))
        files["profile_file"] = str(profile_path)
    return files


def _construction_payload(construction: Construction) -> dict[str, Any]:
    return {
        "instance": construction.graph.describe(),
        "valid": construction.valid,
        "color_count": construction.color_count,
        "note": construction.note,
    }


def _labeled_by_search(g: Graph, target: str | None, edge_limit: int | None, jobs: int | None) -> Construction | None:
    solver = ChiLaSolver(edge_limit=edge_limit, jobs=jobs)
    if g.edge_count > solver.edge_limit:
        logger.info("{} exceeds the edge limit; writing the graph only", g.describe())
        return None
    if target:
        wanted = Counter({color: mult for color, mult in parse_multiplicities(target)})
        f = solver.find_labeling_with_profile(g, wanted)
        if f is None:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"No local antimagic labeling of {g.describe()} has colours {target}",
            )
    else:
        f = solver.solve(g).witness
    return Construction(graph=g, labeling=f, valid=True, color_count=induced_colors(g, f).count)


def cmd_construct(
    family: str,
    *,
    n: int | None = None,
    k: int | None = None,
    i: int | None = None,
    s: int | None = None,
    legs: str | None = None,
    target: str | None = None,
    out_dir: Path = Path("out"),
    edge_limit: int | None = None,
    jobs: int | None = None,
) -> int:
    def need(name: str, value: int | str | None) -> Any:
        if value is None:
            raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"construct {family} needs --{name}")
        return value

    if family == "spider2":
        construction, stem = label_spider_2n(need("n", n)), f"spider2-n{n}"
    elif family == "star":
        construction, stem = label_star(need("k", k)), f"star-k{k}"
    elif family == "star-augment":
        construction = augment_star_leaf(need("k", k), need("i", i), need("s", s))
        stem = f"star-k{k}-i{i}-s{s}"
    else:
        if family == "wheel":
            g, stem = build_wheel(need("n", n)), f"wheel-n{n}"
        elif family == "path":
            g, stem = build_path(need("n", n)), f"path-n{n}"
        elif family == "spider":
            g = build_spider(parse_multiplicities(need("legs", legs)))
            stem = "spider-" + need("legs", legs).replace(",", "-")
        else:
            raise AppError(
                errcode=AppErrorCode.E_INVALID_INPUT,
                errmesg=f"Unknown family {family!r}; expected one of {', '.join(CONSTRUCT_FAMILIES)}",
            )
        construction = _labeled_by_search(g, target, edge_limit, jobs)
        if construction is None:
            files = _write_outputs(g, None, out_dir, stem)
            emit(CliSuccess(results={"instance": g.describe(), **files}))
            return ExitCode.OK

    files = _write_outputs(construction.graph, construction.labeling, out_dir, stem)
    emit(CliSuccess(results={**_construction_payload(construction), **files}))
    return ExitCode.OK


def cmd_solve(
    graph_file: Path,
    *,
    edge_limit: int | None = None,
    jobs: int | None = None,
    store: ResultsStore,
) -> int:
    g = read_edge_list(graph_file)
    result = solve_chi_la(g, edge_limit=edge_limit, jobs=jobs)
    payload = result.model_dump(mode="json")

    record = store.append("solve", g, {}, payload)
    agrees = store.audit(record)
    emit(CliSuccess(results={**payload, "record_id": record.record_id, "audit": agrees}))
    return ExitCode.OK if agrees else ExitCode.INCONSISTENT


def cmd_verify(graph_file: Path, labeling_file: Path) -> int:
    g = read_edge_list(graph_file)
    f = read_labeling(labeling_file, g)
    valid = is_local_antimagic(g, f)
    coloring = induced_colors(g, f)

    results: dict[str, Any] = {
        "instance": g.describe(),
        "local_antimagic": valid,
        "color_count": coloring.count,
        "colors": list(coloring.colors),
    }
    if valid:
        results["profile"] = extract_profile(g, f).model_dump(mode="json")
        results["pendant_lemma"] = check_pendant_lemma(g, f)
        results["family"] = check_family_member(g, f).model_dump(mode="json")
    emit(CliSuccess(results=results))
    return ExitCode.OK


def _load_profile(text: str) -> ColorProfile:
    try:
        raw = Path(text[1:]).read_bytes() if text.startswith("@") else text.encode()
    except OSError as e:
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Cannot read profile file: {e}")
    try:
        data = orjson.loads(raw)
    except orjson.JSONDecodeError as e:
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Profile is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg="Profile JSON must be an object")
    try:
        if "t" in data:
            return ColorProfile.model_validate(data)
        return ColorProfile.from_synthetic(**data)
    except (TypeError, ValidationError) as e:
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Profile fields: {e}")


def cmd_predict(
    *,
    i: int,
    s: int,
    graph_file: Path | None = None,
    labeling_file: Path | None = None,
    profile: str | None = None,
    wheel_family: int | None = None,
) -> int:
    sources = sum(x is not None for x in (graph_file, profile, wheel_family))
    if sources != 1 or (graph_file is None) != (labeling_file is None):
        raise AppError(
            errcode=AppErrorCode.E_INVALID_INPUT,
            errmesg="Give exactly one of --graph with --labeling, --profile or --wheel-family",
        )

    if graph_file is not None:
        g = read_edge_list(graph_file)
        base = extract_profile(g, read_labeling(labeling_file, g))
    elif profile is not None:
        base = _load_profile(profile)
    else:
        base = wheel_family_profile(wheel_family)

    predicted = predict(base, i, s)
    emit(CliSuccess(results=predicted.model_dump(mode="json")))
    return ExitCode.OK


def cmd_experiment(
    batch_file: Path,
    *,
    use_solver: bool = False,
    edge_limit: int | None = None,
    jobs: int | None = None,
    store: ResultsStore,
) -> int:
    """One ExperimentReport JSON line per row; exit 1 when any applicable row is inconsistent."""
    rows = load_batch(batch_file)
    reports = run_batch(rows, use_solver=use_solver, edge_limit=edge_limit, jobs=jobs)

    inconsistent = 0
    for row, report in zip(rows, reports):
        if report.instance_hash is not None:
            store.append_record(
                "experiment",
                report.instance_hash,
                {"i": row.i, "s": row.s, "use_solver": use_solver},
                report.model_dump(mode="json"),
            )
        emit(report)
        inconsistent += 0 if report.consistent else 1

    if inconsistent:
        logger.warning("{} inconsistent rows in {}", inconsistent, batch_file)
        return ExitCode.INCONSISTENT
    return ExitCode.OK


def cmd_augment(graph_file: Path, labeling_file: Path, *, i: int, s: int, out_dir: Path = Path("out")) -> int:
    g = read_edge_list(graph_file)
    f = read_labeling(labeling_file, g)
    construction = augment_and_label(g, f, i, s)
    stem = f"{Path(graph_file).stem}-i{i}-s{s}"
    files = _write_outputs(construction.graph, construction.labeling, out_dir, stem)
    emit(CliSuccess(results={**_construction_payload(construction), **files}))
    return ExitCode.OK
