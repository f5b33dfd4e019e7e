from .logging_utils import LoggingUtils, LogTagging, LogType
from .rotate_handler import AsyncTimedRotatingFileHandler

__all__ = [
    "AsyncTimedRotatingFileHandler",
    "LogTagging",
    "LogType",
    "LoggingUtils",
]
