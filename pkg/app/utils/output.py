from typing import Any, List, Sequence, Union

import orjson
from pydantic import BaseModel

from app.core.constants import FORMAT_JSON, FORMAT_TEXT
from app.exceptions.custom_exceptions import ValidationException

Report = Union[BaseModel, Sequence[BaseModel]]


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return orjson.dumps(value).decode()
    return str(value)


def _lines(key: str, value: Any) -> List[str]:
    if isinstance(value, list) and value and all(isinstance(row, list) for row in value):
        if all(isinstance(x, int) for row in value for x in row):
            return [f"{key}:"] + ["  " + " ".join(str(x) for x in row) for row in value]
    if isinstance(value, list) and value and all(isinstance(item, dict) for item in value):
        return [f"{key}: " + " ".join(f"{k}={_scalar(v)}" for k, v in item.items()) for item in value]
    if isinstance(value, list):
        return [f"{key}: " + ", ".join(_scalar(x) for x in value)]
    if isinstance(value, dict):
        return [f"{key}: " + " ".join(f"{k}={_scalar(v)}" for k, v in value.items())]
    return [f"{key}: {_scalar(value)}"]


def to_text(model: BaseModel) -> str:
    lines: List[str] = []
    for key, value in model.model_dump().items():
        lines.extend(_lines(key, value))
    return "\n".join(lines)


def render(report: Report, fmt: str = FORMAT_TEXT) -> str:
    """Text is `key: value` lines; json is a single indented document."""
    many = isinstance(report, (list, tuple))
    if fmt == FORMAT_JSON:
        data = [r.model_dump() for r in report] if many else report.model_dump()
        return orjson.dumps(data, option=orjson.OPT_INDENT_2).decode()
    if fmt != FORMAT_TEXT:
        raise ValidationException(f"unknown output format {fmt!r}; use text or json")
    if many:
        return "\n\n".join(to_text(r) for r in report)
    return to_text(report)
