"""Queue-backed file handlers for long enumeration runs."""
from logging import LogRecord
from logging.handlers import TimedRotatingFileHandler
from queue import Queue
from threading import Thread


class IntegralPointRotatingFileHandler(TimedRotatingFileHandler):
    """Rolls over on multiples of the interval instead of relative to start time."""

    def computeRollover(self, currentTime: int) -> int:  # noqa: N802, N803
        if self.when[0] == "W" or self.when == "MIDNIGHT":
            return super().computeRollover(currentTime)
        return ((currentTime // self.interval) + 1) * self.interval


class AsyncHandlerMixin:
    """Emit records from a daemon thread so workers never block on disk."""

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.__queue: Queue[LogRecord] = Queue()
        self.__thread = Thread(target=self.__loop, daemon=True)
        self.__thread.start()

    def emit(self, record: LogRecord) -> None:
        self.__queue.put(record)

    def flush_queue(self) -> None:
        """Block until every queued record has been written."""
        self.__queue.join()

    def __loop(self) -> None:
        while True:
            record = self.__queue.get()
            try:
                super().emit(record)
            except Exception:  # noqa: BLE001
                self.handleError(record)
            finally:
                self.__queue.task_done()


class AsyncTimedRotatingFileHandler(AsyncHandlerMixin, IntegralPointRotatingFileHandler):
    pass
