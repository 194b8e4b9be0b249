import time
from typing import Callable, TypeVar

from prometheus_client import Counter, Histogram, REGISTRY, write_to_textfile

from app.core.settings import settings

T = TypeVar("T")


COMMAND_COUNT = Counter(
    "cli_commands_total",
    "Total number of CLI commands executed",
    ["command", "status"],
)

COMMAND_DURATION = Histogram(
    "cli_command_duration_seconds",
    "CLI command duration in seconds",
    ["command"],
)

CLOSURE_ELEMENTS = Histogram(
    "group_closure_elements",
    "Number of elements enumerated by group closures",
    buckets=[1, 2, 4, 8, 16, 24, 48, 120, 500, 1000, 10000],
)

FIELD_CONSTRUCTIONS_TOTAL = Counter(
    "field_constructions_total",
    "Total number of finite field contexts constructed",
)

CAP_EXCEEDED_TOTAL = Counter(
    "cap_exceeded_total",
    "Total number of internal cap violations",
    ["kind"],
)


class MetricsMiddleware:
    def __init__(self, metrics_file: str | None = None):
        self.metrics_file = metrics_file if metrics_file is not None else settings.METRICS_FILE

    def dispatch(self, command: str, call_next: Callable[[], T]) -> T:
        start_time = time.perf_counter()
        status = "ok"
        try:
            return call_next()
        except Exception:
            status = "error"
            raise
        finally:
            COMMAND_DURATION.labels(command=command).observe(time.perf_counter() - start_time)
            COMMAND_COUNT.labels(command=command, status=status).inc()
            if self.metrics_file:
                write_to_textfile(self.metrics_file, REGISTRY)
