import sys
from os import environ
from typing import Any, Literal
from uuid import uuid4

import orjson
from pydantic import BaseModel, Field


class CliResponse(BaseModel):
    version: str | None = Field(default_factory=lambda: environ.get("BUILD_COMMIT", "dev"))


class CliSuccess(CliResponse):
    success: Literal[True] = True
    results: Any = "OK"


class CliFailure(CliResponse):
    success: Literal[False] = False
    errcode: str = "E_INTERNAL_ERROR"
    erresid: str = Field(default_factory=lambda: uuid4().hex[:10])
    errmesg: str = "We are sorry, an error occurred."


def emit(payload: BaseModel | dict[str, Any]) -> None:
    """Write one compact JSON document to stdout."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    sys.stdout.write(orjson.dumps(payload).decode() + "\n")
    sys.stdout.flush()
