import logging
from pathlib import Path
from typing import Optional

import typer

from app.core.constants import FORMAT_TEXT, KIND_A, KIND_D
from app.commands.common import check_format, emit, resolve_scheme
from app.exceptions.custom_exceptions import AlgebraException
from app.middleware.command_stack import command_stack
from app.models.scheme import SubgroupScheme
from app.schemas.scheme import ClassificationReport, FieldDescription
from app.services.classification import ClassificationService

logger = logging.getLogger(__name__)

router = typer.Typer()


def classification_report(G: SubgroupScheme, normalize: bool = True) -> ClassificationReport:
    t = ClassificationService.classify(G)
    report = ClassificationReport(
        tag=t.tag(G.p),
        type=t.label,
        p=G.p,
        order=G.order,
        connected_order=G.connected_component,
        reduced_order=G.reduced_part.order,
        abelian=G.is_abelian_scheme(),
        small=G.is_small(),
        field=FieldDescription.from_ctx(G.ctx),
    )
    if not normalize:
        return report
    if t.kind not in (KIND_A, KIND_D):
        report.note = f"no conjugator is computed for {t.label}"
        return report
    try:
        T, conjugated = ClassificationService.normalize_conjugator(G)
    except AlgebraException as exc:
        logger.warning(f"Normalization of {t.label} failed: {exc.detail}")
        report.note = exc.detail
        return report
    report.conjugator = T.text()
    report.normalized = conjugated.describe()
    return report


@router.command("classify")
def cmd_classify(
    input_path: Optional[Path] = typer.Option(None, "--input", help="Scheme file"),
    ade_type: Optional[str] = typer.Option(None, "--type", help="Classify a catalog scheme instead"),
    n: Optional[int] = typer.Option(None, "--n", help="Index for A and D"),
    p: Optional[int] = typer.Option(None, "--p", help="Characteristic"),
    normalize: bool = typer.Option(True, "--normalize/--no-normalize", help="Compute a conjugator to the catalog form"),
    fmt: str = typer.Option(FORMAT_TEXT, "--format", help="text or json"),
):
    """
    Validate a scheme and report its ADE type
    """
    def run():
        check_format(fmt)
        G = resolve_scheme(input_path, ade_type, n, p)
        emit(classification_report(G, normalize), fmt)

    command_stack.run("classify", run)
