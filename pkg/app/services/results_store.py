"""Append-only JSON-lines store of solver and experiment results.

Usage:
    from app.services.results_store import ResultsStore

    store = ResultsStore.from_config()
    record = store.append("solve", graph, {"edge_limit": 10}, result.model_dump(mode="json"))
    store.audit(record)  # False when an earlier run on the same instance disagrees
"""

from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import orjson
from loguru import logger

from app.app_config import get_app_environ_config
from app.domain.utils import fingerprint
from app.domain.utils.idgen import new_record_id
from app.schemas import EdgeLabeling, Graph, ResultRecord
from app.utils.app_errors import AppError, AppErrorCode, ExitCode

# run-dependent fields left out of audits
VOLATILE_KEYS = frozenset({"wall_time_ms", "witness", "nodes"})


def _stable(payload: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in payload.items() if k not in VOLATILE_KEYS}


class ResultsStore:
    def __init__(self, path: Path, enabled: bool = True):
        self.path = Path(path)
        self.enabled = enabled

    @classmethod
    def from_config(cls, enabled: bool | None = None) -> "ResultsStore":
        cfg = get_app_environ_config()
        return cls(cfg.LA_RESULTS_STORE, cfg.LA_STORE_ENABLED if enabled is None else enabled)

    def append(
        self,
        operation: str,
        graph: Graph,
        params: dict[str, Any],
        payload: dict[str, Any],
        labeling: EdgeLabeling | None = None,
    ) -> ResultRecord:
        return self.append_record(operation, fingerprint.instance_hash(graph, labeling), params, payload)

    def append_record(
        self,
        operation: str,
        instance_hash: str,
        params: dict[str, Any],
        payload: dict[str, Any],
    ) -> ResultRecord:
        """Build a record and, when the store is enabled, append it as one JSON line."""
        record = ResultRecord(
            record_id=new_record_id(),
            instance_hash=instance_hash,
            operation=operation,
            params=params,
            payload=payload,
            created_at=datetime.now(timezone.utc).isoformat(),
        )
        if not self.enabled:
            return record

        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("ab") as fp:
                fp.write(orjson.dumps(record.model_dump(mode="json")) + b"\n")
        except OSError as e:
            raise AppError(
                errcode=AppErrorCode.E_INTERNAL_ERROR,
                errmesg=f"Cannot write results store {self.path}: {e}",
                exit_code=ExitCode.INTERNAL_ERROR,
            )
        logger.debug("Stored {} record {} for {}", operation, record.record_id, record.instance_hash)
        return record

    def records(self) -> list[ResultRecord]:
        if not self.path.exists():
            return []
        records: list[ResultRecord] = []
        with self.path.open("rb") as fp:
            for lineno, line in enumerate(fp, start=1):
                if not line.strip():
                    continue
                try:
                    records.append(ResultRecord.model_validate(orjson.loads(line)))
                except (orjson.JSONDecodeError, ValueError) as e:
                    logger.warning("Skipping malformed line {} of {}: {}", lineno, self.path, e)
        return records

    def lookup(self, instance_hash: str) -> list[ResultRecord]:
        return [record for record in self.records() if record.instance_hash == instance_hash]

    def audit(self, record: ResultRecord) -> bool:
        """Compare against the earliest other record with the same instance, operation and params.

        Returns True when there is nothing earlier to compare with.
        """
        for earlier in self.lookup(record.instance_hash):
            if earlier.record_id == record.record_id:
                continue
            if earlier.operation != record.operation or earlier.params != record.params:
                continue
            same = _stable(earlier.payload) == _stable(record.payload)
            if not same:
                logger.warning(
                    "Record {} disagrees with earlier {} on {}",
                    record.record_id,
                    earlier.record_id,
                    record.instance_hash,
                )
            return same
        return True
