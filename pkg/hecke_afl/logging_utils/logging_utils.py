"""Structured logging for hecke-afl runs."""
import logging
from pathlib import Path

import structlog
from structlog.processors import (
    EventRenamer,
    JSONRenderer,
    KeyValueRenderer,
    TimeStamper,
    format_exc_info,
)
from structlog.stdlib import (
    ExtraAdder,
    LoggerFactory,
    ProcessorFormatter,
    add_log_level,
    add_logger_name,
)

from .rotate_handler import AsyncTimedRotatingFileHandler


class LogType:
    """Event categories carried in the ``log_type`` field."""

    LOG_TYPE = "log_type"
    ARITHMETIC = "arithmetic"
    ENUMERATION = "enumeration"
    ORBITAL = "orbital"
    VERIFICATION = "verification"
    CLI = "cli"


class LogTagging:
    """Fixed fields merged into every record a module emits."""

    def __init__(self, base_logging: dict | None = None) -> None:
        self.base_logging = base_logging or {}

    def get_log_kwargs(self, log_type: str | None = None) -> dict:
        if log_type is None:
            return self.base_logging
        return {LogType.LOG_TYPE: log_type, **self.base_logging}


_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}

# log files roll over daily
_ROLLOVER = "D"


def _level_name(level: int | str | None) -> str:
    if isinstance(level, str):
        level = _LEVELS.get(level.upper())
    return logging.getLevelName(level or logging.INFO)


def _same_target(left: logging.Handler, right: logging.Handler) -> bool:
    if type(left) is not type(right):
        return False
    if hasattr(left, "baseFilename"):
        return str(left.baseFilename) == str(right.baseFilename)
    return getattr(left, "stream", None) is getattr(right, "stream", None)


class LoggingUtils:
    """Sets up structured logging for a hecke-afl run.

    Records go to stderr (``print_output``) and optionally to a daily rotating
    file; stdout is never touched so reports stay machine-readable. Building
    a second instance for the same file or stream re-formats the handler
    already attached instead of adding another one.
    """

    def __init__(
        self,
        log_file: str | None = None,
        log_dir: str | None = None,
        log_level: int | str | None = None,
        *,
        print_output: bool = False,
        binding_dict: dict | None = None,
        json_formatter: bool = True,
    ) -> None:
        """Initialize the LoggingUtils class.

        Args:
            log_file: File name inside ``log_dir``; no file handler when omitted.
            log_dir: Directory for ``log_file``, ``./Logs`` by default.
            log_level: Level name or number, INFO by default.
            print_output: Attach a stderr handler.
            binding_dict: Context bound on every record (command, p, seed).
            json_formatter: JSON lines when true, key/value pairs otherwise.
        """
        self.binding_dict = dict(binding_dict or {})
        level = _level_name(log_level)
        self.binding_dict["min_log_level"] = level

        root = logging.getLogger()
        root.setLevel(level)

        self.log_file = None
        if log_file:
            directory = Path(log_dir) if log_dir else Path.cwd() / "Logs"
            directory.mkdir(parents=True, exist_ok=True)
            self.log_file = str(directory / log_file)

        renderer = (
            JSONRenderer(sort_keys=True)
            if json_formatter
            else KeyValueRenderer(key_order=["timestamp", "level", "msg", "logger"])
        )
        formatter = ProcessorFormatter(
            processor=renderer,
            foreign_pre_chain=[
                add_logger_name,
                add_log_level,
                ExtraAdder(),
                TimeStamper(fmt="iso"),
                format_exc_info,
                EventRenamer("msg"),
            ],
        )

        handlers: list[logging.Handler] = []
        if self.log_file:
            handlers.append(AsyncTimedRotatingFileHandler(self.log_file, when=_ROLLOVER))
        if print_output:
            handlers.append(logging.StreamHandler())
        for handler in handlers:
            attached = next((h for h in root.handlers if _same_target(h, handler)), None)
            if attached is None:
                handler.setFormatter(formatter)
                root.addHandler(handler)
            else:
                attached.setFormatter(formatter)
                handler.close()

        structlog.configure(
            processors=[
                structlog.contextvars.merge_contextvars,
                add_logger_name,
                add_log_level,
                TimeStamper(fmt="iso"),
                format_exc_info,
                EventRenamer("msg"),
                ProcessorFormatter.wrap_for_formatter,
            ],
            logger_factory=LoggerFactory(),
            wrapper_class=structlog.stdlib.BoundLogger,
            cache_logger_on_first_use=True,
        )
        structlog.contextvars.clear_contextvars()
        structlog.contextvars.bind_contextvars(**self.binding_dict)

        self.logger = structlog.get_logger()
        self.logger.debug("logging set up", log_file=self.log_file or "None", json=json_formatter)

    def get_logger(self) -> structlog.stdlib.BoundLogger:
        """Return a structlog logger carrying the bound run context."""
        return self.logger
