import inspect
from enum import Enum
from uuid import uuid4


class ExitCode(int, Enum):
    """Process exit codes for AppError exceptions."""

    OK = 0
    INCONSISTENT = 1
    INPUT_ERROR = 2
    INTERNAL_ERROR = 3


class AppErrorCode(str, Enum):
    """Error codes for AppError exceptions."""

    # Graph structure
    E_LOOP_EDGE = "E_LOOP_EDGE"
    E_DUPLICATE_EDGE = "E_DUPLICATE_EDGE"
    E_DISCONNECTED = "E_DISCONNECTED"
    E_TOO_SMALL = "E_TOO_SMALL"
    E_TOO_LARGE = "E_TOO_LARGE"
    E_DEGENERATE_FAMILY = "E_DEGENERATE_FAMILY"
    E_EMPTY_TARGET_SET = "E_EMPTY_TARGET_SET"

    # Labelings & profiles
    E_LABELING_MISMATCH = "E_LABELING_MISMATCH"
    E_NOT_LOCAL_ANTIMAGIC = "E_NOT_LOCAL_ANTIMAGIC"
    E_PARITY_VIOLATION = "E_PARITY_VIOLATION"
    E_CLASS_OUT_OF_RANGE = "E_CLASS_OUT_OF_RANGE"

    # Predictions
    E_NOT_APPLICABLE = "E_NOT_APPLICABLE"

    # Generic/Validation
    E_INVALID_INPUT = "E_INVALID_INPUT"
    E_INTERNAL_ERROR = "E_INTERNAL_ERROR"

    def __str__(self) -> str:
        return self.value


class AppError(Exception):
    def __init__(
        self,
        errcode: AppErrorCode,
        errmesg: str,
        exit_code: ExitCode | None = None,
    ):
        if exit_code is None:
            exit_code = ExitCode.INTERNAL_ERROR if errcode == AppErrorCode.E_INTERNAL_ERROR else ExitCode.INPUT_ERROR
        self.errcode = errcode.value
        self.errmesg = errmesg
        self.exit_code = exit_code.value

        # Capture caller info at raise site
        caller_frame = inspect.currentframe()
        caller_frame = caller_frame.f_back if caller_frame else None
        if caller_frame is not None:
            module_name = caller_frame.f_globals.get("__name__", caller_frame.f_code.co_filename)
            self.caller_info = (
                f"{module_name}:{caller_frame.f_code.co_name}:{caller_frame.f_lineno}"
            )
        else:
            self.caller_info = "unknown"
        self.erresid = uuid4().hex[:10]

        super().__init__(f"{self.errcode}: {errmesg}")
