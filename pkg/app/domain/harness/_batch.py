"""YAML batch files of augmentation experiments.

    rows:
      - {graph: w4.edges, labeling: w4.labels, i: 3, s: 12}
      - {profile: {e: 7, colors: [7, 14], sizes: [4, 2], r: 2, b: 1, pendant_classes: [1]}, i: 1, s: 2}

Relative file paths resolve against the batch file's directory.
"""

from pathlib import Path

import yaml
from loguru import logger
from pydantic import ValidationError

from app.domain.graph import read_edge_list
from app.domain.labeling import read_labeling
from app.schemas import ColorProfile, ExperimentReport
from app.utils.app_errors import AppError, AppErrorCode

from ._experiment import run_experiment, run_profile_experiment
from .harness_models import BatchRow


def load_batch(path: Path) -> list[BatchRow]:
    try:
        document = yaml.safe_load(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError) as e:
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Cannot read batch file {path}: {e}")
    except yaml.YAMLError as e:
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Malformed batch file {path}: {e}")

    if not isinstance(document, dict) or not isinstance(document.get("rows"), list):
        raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Batch file {path} needs a 'rows' list")

    rows: list[BatchRow] = []
    for index, entry in enumerate(document["rows"]):
        try:
            row = BatchRow.model_validate(entry)
        except ValidationError as e:
            raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Batch row {index}: {e}")
        if row.graph is not None and not row.graph.is_absolute():
            row = row.model_copy(
                update={"graph": path.parent.joinpath(row.graph), "labeling": path.parent.joinpath(row.labeling)}
            )
        rows.append(row)
    return rows


def run_batch(
    rows: list[BatchRow],
    use_solver: bool = False,
    edge_limit: int | None = None,
    jobs: int | None = None,
) -> list[ExperimentReport]:
    reports: list[ExperimentReport] = []
    for index, row in enumerate(rows):
        if row.profile is not None:
            try:
                profile = ColorProfile.from_synthetic(**row.profile)
            except (TypeError, ValidationError) as e:
                raise AppError(errcode=AppErrorCode.E_INVALID_INPUT, errmesg=f"Batch row {index} profile: {e}")
            report = run_profile_experiment(profile, row.i, row.s, instance=row.label or f"row-{index}")
        else:
            g = read_edge_list(row.graph)
            f = read_labeling(row.labeling, g)
            report = run_experiment(g, f, row.i, row.s, use_solver=use_solver, edge_limit=edge_limit, jobs=jobs)
        reports.append(report)

    inconsistent = sum(1 for report in reports if not report.consistent)
    logger.info("Batch finished: {} rows, {} inconsistent", len(reports), inconsistent)
    return reports
