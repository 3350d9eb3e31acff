"""Tests for the JSON-lines results store."""

import orjson
import pytest

from app.domain.graph import build_cycle, build_path
from app.services import ResultsStore


@pytest.fixture
def store(tmp_path) -> ResultsStore:
    return ResultsStore(tmp_path / "results" / "results.jsonl")


class TestAppend:
    def test_writes_one_line_per_record(self, store):
        g = build_path(4)
        store.append("solve", g, {}, {"chi_la": 3})
        store.append("solve", g, {}, {"chi_la": 3})

        lines = store.path.read_bytes().splitlines()
        assert len(lines) == 2
        first = orjson.loads(lines[0])
        assert first["operation"] == "solve"
        assert first["payload"] == {"chi_la": 3}
        assert first["record_id"].startswith("rs_")

    def test_disabled_store_writes_nothing(self, tmp_path):
        store = ResultsStore(tmp_path / "results.jsonl", enabled=False)

        record = store.append("solve", build_path(4), {}, {"chi_la": 3})

        assert record.payload == {"chi_la": 3}
        assert not store.path.exists()

    def test_lookup_by_instance(self, store):
        path_record = store.append("solve", build_path(4), {}, {"chi_la": 3})
        store.append("solve", build_cycle(4), {}, {"chi_la": 3})

        found = store.lookup(path_record.instance_hash)
        assert [record.record_id for record in found] == [path_record.record_id]

    def test_skips_malformed_lines(self, store):
        store.append("solve", build_path(4), {}, {"chi_la": 3})
        with store.path.open("ab") as fp:
            fp.write(b"{not json\n\n")

        assert len(store.records()) == 1

    def test_missing_file_has_no_records(self, store):
        assert store.records() == []


class TestAudit:
    def test_first_record_passes(self, store):
        record = store.append("solve", build_path(4), {}, {"chi_la": 3})

        assert store.audit(record)

    def test_volatile_fields_ignored(self, store):
        """Should compare values only, not witnesses, node counts or timings."""
        g = build_path(5)
        store.append("solve", g, {}, {"chi_la": 3, "witness": {"labels": [1, 2, 3, 4]}, "nodes": 10, "wall_time_ms": 4})
        rerun = store.append(
            "solve", g, {}, {"chi_la": 3, "witness": {"labels": [4, 3, 2, 1]}, "nodes": 99, "wall_time_ms": 40}
        )

        assert store.audit(rerun)

    def test_disagreement_fails(self, store):
        g = build_path(5)
        store.append("solve", g, {}, {"chi_la": 3})
        rerun = store.append("solve", g, {}, {"chi_la": 4})

        assert not store.audit(rerun)

    def test_different_params_not_compared(self, store):
        g = build_path(5)
        store.append("experiment", g, {"i": 1, "s": 2}, {"consistent": True})
        other = store.append("experiment", g, {"i": 1, "s": 4}, {"consistent": False})

        assert store.audit(other)
