from pathlib import Path
from typing import Optional

import typer

from app.core.constants import FORMAT_TEXT
from app.core.settings import settings
from app.commands.common import check_format, emit
from app.exceptions.custom_exceptions import ValidationException
from app.middleware.command_stack import command_stack
from app.models.lattice import AbelianGroup, IntMat, smith_normal_form
from app.schemas.lattice import SnfReport
from app.utils.parsing import parse_int_matrix

router = typer.Typer()


def snf_report(A: IntMat, cap: Optional[int] = None) -> SnfReport:
    U, D, V = smith_normal_form(A, cap)
    factors = [d for d in D.diagonal() if d != 0]
    group = AbelianGroup(rank=A.rows - len(factors), torsion=tuple(d for d in factors if d > 1))
    return SnfReport(
        input=A.to_list(),
        U=U.to_list(),
        D=D.to_list(),
        V=V.to_list(),
        invariant_factors=factors,
        cokernel=group.text(),
    )


@router.command("snf")
def cmd_snf(
    matrix: Optional[str] = typer.Argument(None, help="Rows separated by ';', entries by spaces or commas"),
    input_path: Optional[Path] = typer.Option(None, "--input", help="File with one matrix row per line"),
    fmt: str = typer.Option(FORMAT_TEXT, "--format", help="text or json"),
):
    """
    Smith normal form U A V = D of an integer matrix
    """
    def run():
        check_format(fmt)
        if input_path is not None:
            if not input_path.is_file():
                raise ValidationException(f"matrix file {str(input_path)!r} does not exist")
            text = input_path.read_text()
        elif matrix:
            text = matrix
        else:
            raise ValidationException("give a matrix argument or --input")
        emit(snf_report(parse_int_matrix(text), settings.INT_MAGNITUDE_CAP), fmt)

    command_stack.run("snf", run)
