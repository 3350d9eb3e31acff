"""Command-line front end: subcommands, JSON envelopes and the error handler."""

from .commands import (
    CONSTRUCT_FAMILIES,
    cmd_augment,
    cmd_construct,
    cmd_experiment,
    cmd_predict,
    cmd_solve,
    cmd_verify,
    parse_multiplicities,
)
from .errors import app_error_handler, unexpected_error_handler
from .responses import CliFailure, CliSuccess, emit

__all__ = [
    "CONSTRUCT_FAMILIES",
    "CliFailure",
    "CliSuccess",
    "app_error_handler",
    "cmd_augment",
    "cmd_construct",
    "cmd_experiment",
    "cmd_predict",
    "cmd_solve",
    "cmd_verify",
    "emit",
    "parse_multiplicities",
    "unexpected_error_handler",
]
