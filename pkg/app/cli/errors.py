from loguru import logger

from app.shared.logger import format_error
from app.utils.app_errors import AppError, AppErrorCode, ExitCode

from .responses import CliFailure, emit


def app_error_handler(exc: AppError) -> int:
    """Log an AppError with its raise site, print the failure envelope, return the exit code."""
    log_msg = f"{exc.errcode} {exc.erresid} msg={exc.errmesg} caller={exc.caller_info}"
    if exc.errcode == AppErrorCode.E_INTERNAL_ERROR.value:
        logger.error(log_msg)
    else:
        logger.warning(log_msg)

    emit(CliFailure(errcode=exc.errcode, errmesg=exc.errmesg, erresid=exc.erresid))
    return exc.exit_code


def unexpected_error_handler(exc: BaseException) -> int:
    failure = CliFailure(errcode=AppErrorCode.E_INTERNAL_ERROR.value)
    logger.error(f"Unhandled {type(exc).__name__} {failure.erresid}\n{format_error(exc)}")
    emit(failure)
    return ExitCode.INTERNAL_ERROR
