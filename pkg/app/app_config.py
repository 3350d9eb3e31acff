from pathlib import Path

from pydantic import BaseModel

from app.shared.config import config


class AppEnvironConfig(BaseModel):
    DEBUG: bool = config.get_bool("DEBUG", False)

    # Solver limits
    LA_EDGE_LIMIT: int = config.get_int("LA_EDGE_LIMIT", 10, minimum=1, maximum=11)
    # Absolute cap; searches at this size log a warning (~40M leaves)
    LA_EDGE_HARD_CAP: int = config.get_int("LA_EDGE_HARD_CAP", 11, minimum=1, maximum=11)
    LA_CHROMATIC_VERTEX_LIMIT: int = config.get_int(
        "LA_CHROMATIC_VERTEX_LIMIT", 16, minimum=1, maximum=64
    )
    # 0 means available parallelism
    LA_JOBS: int = config.get_int("LA_JOBS", 0, minimum=0)

    # File-driven paths keep q small enough that colour sums stay in 64 bits
    LA_FILE_MAX_EDGES: int = config.get_int("LA_FILE_MAX_EDGES", 10_000, minimum=1, maximum=10_000)

    # Results store
    LA_RESULTS_STORE: Path = Path(
        (config.get("LA_RESULTS_STORE") or "").strip() or "results/results.jsonl"
    )
    LA_STORE_ENABLED: bool = config.get_bool("LA_STORE_ENABLED", True)


_app_environ_config = AppEnvironConfig()


def get_app_environ_config() -> AppEnvironConfig:
    return _app_environ_config
