"""Persistent result records."""

from typing import Any

from pydantic import BaseModel, ConfigDict


class ResultRecord(BaseModel):
    """One append-only line of the results store."""

    model_config = ConfigDict(frozen=True)

    record_id: str
    instance_hash: str
    operation: str
    params: dict[str, Any]
    payload: dict[str, Any]
    created_at: str
