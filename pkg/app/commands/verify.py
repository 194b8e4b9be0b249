"""
Substitution checks of the explicit invariant generators of each catalog type.

A_n uses x = u^(n+1), y = -v^(n+1), z = uv. D_n uses, with N = 2n - 4,
s = (-1)^n and c a root of c^(n-1) = 2,

    x = uv(u^N - s v^N),  y = -c^2 u^2 v^2,  z = c^-1 (u^N + s v^N)

so that x^2 + y z^2 = y^(n-1). E types are checked against the computed
presentation of the catalog scheme.
"""
import logging
from typing import List, Optional, Sequence, Tuple

import typer

from app.core.constants import FORMAT_TEXT, KIND_A, KIND_D
from app.commands.common import check_format, emit, generator_out, resolve_type
from app.middleware.command_stack import command_stack
from app.models.field import FieldCtx, FieldElem, build_field, nth_root
from app.models.polynomial import BivarPoly, WeightedPoly3
from app.models.scheme import ADEType
from app.schemas.presentation import RelationCheck, VerifyReport
from app.schemas.scheme import FieldDescription
from app.services.catalog import CatalogService
from app.services.classification import ClassificationService
from app.services.invariants import InvariantEngine
from app.services.relations import RelationService, template_weights

logger = logging.getLogger(__name__)

router = typer.Typer()

PASS = "PASS"
FAIL = "FAIL"

Generators = List[Tuple[int, BivarPoly]]


def explicit_generators(t: ADEType, p: int) -> Tuple[FieldCtx, Generators]:
    """The closed-form generators of an A or D invariant ring, over the field they need."""
    F = build_field(p, 1)
    n = t.n
    u, v = BivarPoly.u(F), BivarPoly.v(F)
    if t.kind == KIND_A:
        return F, [(n + 1, u ** (n + 1)), (n + 1, -(v ** (n + 1))), (2, u * v)]

    K, c = nth_root(F, F.element(2), n - 1)
    u, v = BivarPoly.u(K), BivarPoly.v(K)
    N = 2 * n - 4
    s = K.element(-1 if n % 2 else 1)
    uN, vN = u ** N, (v ** N).scale(s)
    x = u * v * (uN - vN)
    y = (u * u * v * v).scale(-(c * c))
    z = (uN + vN).scale(c.inverse())
    return K, [(N + 2, x), (4, y), (N, z)]


def _relation(ctx: FieldCtx, t: ADEType, monomials) -> WeightedPoly3:
    return WeightedPoly3.from_monomials(ctx, template_weights(t), monomials)


def _vanishes(label: str, rel: WeightedPoly3, gens: Sequence[Tuple[int, BivarPoly]]) -> RelationCheck:
    image = InvariantEngine.substitute(rel, gens)
    return RelationCheck(relation=label, status=PASS if image.is_zero() else FAIL)


def proportionality(lhs: BivarPoly, rhs: BivarPoly) -> Optional[FieldElem]:
    """The constant c with lhs = c * rhs, or None."""
    if rhs.is_zero():
        return None
    c = lhs.leading_coefficient() / rhs.leading_coefficient() if not lhs.is_zero() else lhs.ctx.zero
    return c if lhs == rhs.scale(c) else None


def verify_explicit(t: ADEType, p: int) -> VerifyReport:
    CatalogService.check_gate(t, p)
    K, gens = explicit_generators(t, p)
    n = t.n
    if t.kind == KIND_A:
        candidates = [
            (f"XY+Z^{n + 1}", [((1, 1, 0), 1), ((0, 0, n + 1), 1)]),
            (f"XY-Z^{n + 1}", [((1, 1, 0), 1), ((0, 0, n + 1), -1)]),
        ]
    else:
        candidates = [
            (f"X^2+YZ^2-Y^{n - 1}", [((2, 0, 0), 1), ((0, 1, 2), 1), ((0, n - 1, 0), -1)]),
            (f"X^2+YZ^2+Y^{n - 1}", [((2, 0, 0), 1), ((0, 1, 2), 1), ((0, n - 1, 0), 1)]),
        ]
    checks = [_vanishes(label, _relation(K, t, monomials), gens) for label, monomials in candidates]

    if t.kind == KIND_D:
        lhs = InvariantEngine.substitute(_relation(K, t, [((2, 0, 0), 1), ((0, 1, 2), 1)]), gens)
        rhs = InvariantEngine.substitute(_relation(K, t, [((0, n - 1, 0), 1)]), gens)
        c = proportionality(lhs, rhs)
        checks.append(RelationCheck(
            relation=f"X^2+YZ^2 ~ Y^{n - 1}",
            status=PASS if c is not None and not c.is_zero() else FAIL,
            constant=c.text() if c is not None else None,
        ))

    passing = next((_relation(K, t, m) for (label, m), chk in zip(candidates, checks) if chk.status == PASS), None)
    normal_form = None
    if passing is not None:
        normal_form = RelationService.normalize_ADE(passing).normal_form.text()
    return VerifyReport(
        tag=t.tag(p),
        p=p,
        field=FieldDescription.from_ctx(K),
        generators=[generator_out(i, d, poly) for i, (d, poly) in enumerate(gens)],
        checks=checks,
        normal_form=normal_form,
        passed=checks[0].status == PASS and all(chk.status == PASS for chk in checks if chk.constant is not None),
    )


def verify_exceptional(t: ADEType, p: int, dmax: Optional[int] = None) -> VerifyReport:
    G = CatalogService.make_catalog(t, p)
    presentation = ClassificationService.present(G, dmax)
    image = InvariantEngine.substitute(presentation.relation, presentation.generators)
    checks = [
        RelationCheck(relation=presentation.relation.text(), status=PASS if image.is_zero() else FAIL),
        RelationCheck(relation=f"type {t.label}", status=PASS if presentation.ade == t else FAIL),
    ]
    return VerifyReport(
        tag=t.tag(p),
        p=p,
        field=FieldDescription.from_ctx(G.ctx),
        generators=[generator_out(i, d, poly) for i, (d, poly) in enumerate(presentation.generators)],
        checks=checks,
        normal_form=presentation.match.normal_form.text(),
        passed=all(chk.status == PASS for chk in checks),
    )


@router.command("verify")
def cmd_verify(
    ade_type: Optional[str] = typer.Option(None, "--type", help="A, D, E6, E7 or E8"),
    n: Optional[int] = typer.Option(None, "--n", help="Index for A and D"),
    p: int = typer.Option(..., "--p", help="Characteristic"),
    dmax: Optional[int] = typer.Option(None, "--dmax", help="Degree bound for E types"),
    fmt: str = typer.Option(FORMAT_TEXT, "--format", help="text or json"),
):
    """
    Substitute the explicit generators into the candidate relations
    """
    def run():
        check_format(fmt)
        t = resolve_type(ade_type, n)
        report = verify_explicit(t, p) if t.kind in (KIND_A, KIND_D) else verify_exceptional(t, p, dmax)
        logger.info(f"Verified {t.label} at p={p}: {'pass' if report.passed else 'fail'}")
        emit(report, fmt)

    command_stack.run("verify", run)
