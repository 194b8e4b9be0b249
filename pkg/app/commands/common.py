"""Option resolution shared by the command modules."""
from pathlib import Path
from typing import Optional

import typer

from app.core.constants import FORMAT_JSON, FORMAT_TEXT
from app.exceptions.custom_exceptions import ValidationException
from app.models.polynomial import BivarPoly
from app.models.scheme import ADEType, SubgroupScheme
from app.schemas.presentation import GeneratorOut
from app.services.catalog import CatalogService
from app.utils.output import Report, render
from app.utils.parsing import read_scheme_file

GENERATOR_NAMES = "xyz"


def check_format(fmt: str) -> str:
    if fmt not in (FORMAT_TEXT, FORMAT_JSON):
        raise ValidationException(f"unknown output format {fmt!r}; use text or json")
    return fmt


def resolve_type(ade_type: Optional[str], n: Optional[int]) -> ADEType:
    if not ade_type:
        raise ValidationException("a type is required (--type A|D|E6|E7|E8, with --n for A and D)")
    return ADEType.parse(ade_type, n)


def resolve_scheme(
    input_path: Optional[Path],
    ade_type: Optional[str],
    n: Optional[int],
    p: Optional[int],
) -> SubgroupScheme:
    """A scheme from --input, or the catalog scheme named by --type/--n/--p."""
    if input_path is not None:
        return read_scheme_file(input_path)
    if p is None:
        raise ValidationException("either --input or --type with --p is required")
    return CatalogService.make_catalog(resolve_type(ade_type, n), p)


def generator_out(index: int, degree: int, poly: BivarPoly) -> GeneratorOut:
    return GeneratorOut(name=GENERATOR_NAMES[index], degree=degree, polynomial=poly.text())


def emit(report: Report, fmt: str) -> None:
    typer.echo(render(report, fmt))
