from pathlib import Path
from typing import Optional

import typer

from app.core.constants import FORMAT_TEXT
from app.commands.common import check_format, emit, generator_out, resolve_scheme
from app.middleware.command_stack import command_stack
from app.schemas.presentation import NormalizationOut, PresentationReport
from app.schemas.scheme import FieldDescription
from app.services.classification import ClassificationService, InvariantPresentation

router = typer.Typer()


def presentation_report(presentation: InvariantPresentation, p: int, field: FieldDescription) -> PresentationReport:
    match = presentation.match
    report = PresentationReport(
        tag=presentation.ade.tag(p),
        p=p,
        field=field,
        generators=[generator_out(i, d, poly) for i, (d, poly) in enumerate(presentation.generators)],
        degrees=presentation.degrees,
        relation_degree=presentation.relation_degree,
        relation=presentation.relation.text(),
        normalization=NormalizationOut(
            type=match.ade.label,
            permutation=list(match.permutation),
            shifts=match.shifts,
            scaling=[s.text() for s in match.scaling],
            factor=match.factor.text(),
            normal_form=match.normal_form.text(),
            field=FieldDescription.from_ctx(match.ctx),
        ),
    )
    if presentation.hilbert:
        report.hilbert = presentation.hilbert
        report.expected_hilbert = presentation.expected_hilbert
        report.hilbert_matches = presentation.hilbert == presentation.expected_hilbert
    return report


@router.command("invariants")
def cmd_invariants(
    input_path: Optional[Path] = typer.Option(None, "--input", help="Scheme file"),
    ade_type: Optional[str] = typer.Option(None, "--type", help="Catalog type A, D, E6, E7 or E8"),
    n: Optional[int] = typer.Option(None, "--n", help="Index for A and D"),
    p: Optional[int] = typer.Option(None, "--p", help="Characteristic"),
    dmax: Optional[int] = typer.Option(None, "--dmax", help="Degree bound for generator search"),
    hilbert_dmax: Optional[int] = typer.Option(None, "--hilbert-dmax", help="Also compare the Hilbert series up to this degree"),
    fmt: str = typer.Option(FORMAT_TEXT, "--format", help="text or json"),
):
    """
    Minimal generators, relation and ADE normal form of an invariant ring
    """
    def run():
        check_format(fmt)
        G = resolve_scheme(input_path, ade_type, n, p).ensure_valid()
        presentation = ClassificationService.present(G, dmax, hilbert_dmax)
        emit(presentation_report(presentation, G.p, FieldDescription.from_ctx(G.ctx)), fmt)

    command_stack.run("invariants", run)
