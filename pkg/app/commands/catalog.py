import logging
from pathlib import Path
from typing import List, Optional

import typer
from sympy import isprime

from app.core.constants import E_KINDS, FORMAT_TEXT, KIND_A, KIND_D
from app.core.settings import settings
from app.commands.common import check_format, emit
from app.exceptions.custom_exceptions import NotPrimeException, ValidationException
from app.middleware.command_stack import command_stack
from app.models.field import build_field
from app.models.lattice import p_part_split
from app.models.scheme import ADEType
from app.schemas.scheme import CatalogEntry, FieldDescription
from app.services.catalog import CatalogService
from app.services.classification import ClassificationService
from app.services.relations import NormalForm
from app.utils.parsing import dump_scheme

logger = logging.getLogger(__name__)

router = typer.Typer()


def _kinds(ade_type: Optional[str]) -> Optional[List[str]]:
    if ade_type is None:
        return None
    label = ade_type.strip().upper()
    if label in (KIND_A, KIND_D):
        return [label]
    if label == "E":
        return list(E_KINDS)
    if label in E_KINDS:
        return [label]
    raise ValidationException(f"--type must be one of A, D, E, E6, E7, E8; got {ade_type!r}")


def build_entry(t: ADEType, p: int, compute: bool = False, dmax: Optional[int] = None,
                output_dir: Optional[Path] = None) -> CatalogEntry:
    """One catalog line; generator matrices only when the field is small enough."""
    r = CatalogService.mu_order(t)
    k = CatalogService.field_degree(t, p)
    connected, _ = p_part_split(r, p)
    entry = CatalogEntry(
        tag=t.tag(p),
        type=t.label,
        p=p,
        r=r,
        order=t.group_order,
        connected_order=connected,
        field_degree=k,
        degrees=list(t.degrees),
        relation=NormalForm.for_type(t, build_field(p, 1)).poly.text(),
    )
    if k > settings.CATALOG_FIELD_DEGREE_CAP:
        logger.warning(f"{t.label} at p={p} needs F_{p}^{k}; listing it without generator matrices")
        return entry

    G = CatalogService.make_catalog(t, p)
    entry.order = G.order
    entry.reduced_order = G.reduced_part.order
    entry.field = FieldDescription.from_ctx(G.ctx)
    entry.generators = [g.text() for g in G.extra_gens]
    if compute:
        presentation = ClassificationService.present(G, dmax if dmax is not None else max(t.degrees))
        entry.degrees = presentation.degrees
        entry.relation = presentation.relation.text()
    if output_dir is not None:
        output_dir.mkdir(parents=True, exist_ok=True)
        (output_dir / f"{t.label}_p{p}.scheme").write_text(dump_scheme(G))
    return entry


@router.command("catalog")
def cmd_catalog(
    p: int = typer.Option(..., "--p", help="Characteristic"),
    max_order: int = typer.Option(10, "--max-order", help="Largest group order to list"),
    ade_type: Optional[str] = typer.Option(None, "--type", help="Restrict to A, D, E or one of E6/E7/E8"),
    fmt: str = typer.Option(FORMAT_TEXT, "--format", help="text or json"),
    output_dir: Optional[Path] = typer.Option(None, "--output-dir", help="Write one scheme file per entry"),
    compute: bool = typer.Option(False, "--compute", help="Compute generators and relation for each entry"),
    dmax: Optional[int] = typer.Option(None, "--dmax", help="Degree bound when computing"),
):
    """
    List every catalog scheme in characteristic p with |G| <= max-order
    """
    def run():
        check_format(fmt)
        if not isprime(p):
            raise NotPrimeException(p)
        kinds = _kinds(ade_type)
        if kinds and len(kinds) == 1:
            index = 4 if kinds[0] == KIND_D else (1 if kinds[0] == KIND_A else None)
            gated = ADEType(kinds[0], index) if index else ADEType.exceptional(kinds[0])
            CatalogService.check_gate(gated, p)
        types = CatalogService.catalog_types(p, max_order, kinds)
        logger.info(f"Catalog at p={p}, max order {max_order}: {len(types)} entries")
        emit([build_entry(t, p, compute, dmax, output_dir) for t in types], fmt)

    command_stack.run("catalog", run)
