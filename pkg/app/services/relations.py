"""
Relations among three invariant generators and their ADE normal forms.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.constants import E_DEGREES, E_KINDS, KIND_A, KIND_D, KIND_E6, KIND_E7, KIND_E8
from app.exceptions.classification_exceptions import NoRelationException, UnmatchedNormalFormException
from app.exceptions.custom_exceptions import ValidationException
from app.models.field import FieldCtx, FieldElem, common_field, embed, nth_root
from app.models.polynomial import BivarPoly, WeightedPoly3
from app.models.scheme import ADEType
from app.services.linalg import LinearAlgebra, Vector

logger = logging.getLogger(__name__)

Generator = Tuple[int, BivarPoly]


@dataclass(frozen=True)
class NormalForm:
    ade: ADEType
    poly: WeightedPoly3

    @classmethod
    def for_type(cls, t: ADEType, ctx: FieldCtx) -> "NormalForm":
        """XY + Z^(n+1), X^2 + YZ^2 + Y^(n-1), X^2 + Y^3 + Z^4, X^2 + Y^3 + YZ^3, X^2 + Y^3 + Z^5."""
        weights = template_weights(t)
        if t.kind == KIND_A:
            monomials = [((1, 1, 0), 1), ((0, 0, t.n + 1), 1)]
        elif t.kind == KIND_D:
            monomials = [((2, 0, 0), 1), ((0, 1, 2), 1), ((0, t.n - 1, 0), 1)]
        elif t.kind == KIND_E6:
            monomials = [((2, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 4), 1)]
        elif t.kind == KIND_E7:
            monomials = [((2, 0, 0), 1), ((0, 3, 0), 1), ((0, 1, 3), 1)]
        else:
            monomials = [((2, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 5), 1)]
        return cls(t, WeightedPoly3.from_monomials(ctx, weights, monomials))


def template_weights(t: ADEType) -> Tuple[int, int, int]:
    if t.kind == KIND_A:
        return (t.n + 1, t.n + 1, 2)
    if t.kind == KIND_D:
        return (2 * t.n - 2, 4, 2 * t.n - 4)
    d1, d2, d3 = E_DEGREES[t.kind][0]
    return (d3, d2, d1)


def candidate_type(weights: Sequence[int], e: int) -> Optional[ADEType]:
    """The ADE type whose normal form has these (X, Y, Z) weights and degree."""
    wx, wy, wz = weights
    if wx == wy and wz == 2 and e == 2 * wx and wx >= 2:
        return ADEType(KIND_A, wx - 1)
    if wy == 4 and wx % 2 == 0:
        n = (wx + 2) // 2
        if n >= 4 and wz == 2 * n - 4 and e == 4 * n - 4:
            return ADEType(KIND_D, n)
    for kind in E_KINDS:
        t = ADEType.exceptional(kind)
        if tuple(weights) == template_weights(t) and e == t.relation_degree:
            return t
    return None


@dataclass
class ADEMatch:
    """How a relation was carried onto its normal form."""

    ade: ADEType
    ctx: FieldCtx
    permutation: Tuple[int, int, int]
    scaling: Tuple[FieldElem, FieldElem, FieldElem]
    factor: FieldElem
    shifts: List[str] = field(default_factory=list)
    normal_form: Optional[WeightedPoly3] = None


def _monomials_of_degree(weights: Sequence[int], e: int) -> List[Tuple[int, int, int]]:
    """Exponents (i, j, l) of weighted degree e, ordered i, j, l descending."""
    w1, w2, w3 = weights
    out = []
    for i in range(e // w1, -1, -1):
        rest = e - i * w1
        for j in range(rest // w2, -1, -1):
            left = rest - j * w2
            if left % w3 == 0:
                out.append((i, j, left // w3))
    return out


def _power_vectors(gens: Sequence[Generator], ctx: FieldCtx):
    cache: Dict[Tuple[int, int], Vector] = {}
    vectors = [poly.to_vector(d) for d, poly in gens]

    def power(i: int, e: int) -> Vector:
        if e == 0:
            return [ctx.one]
        if (i, e) not in cache:
            cache[(i, e)] = LinearAlgebra.convolve(power(i, e - 1), vectors[i], ctx)
        return cache[(i, e)]

    return power


def _relation_kernel(gens: Sequence[Generator], e: int):
    if len(gens) != 3:
        raise ValidationException(f"expected three generators, got {len(gens)}")
    ctx = gens[0][1].ctx
    weights = tuple(d for d, _ in gens)
    monomials = _monomials_of_degree(weights, e)
    if not monomials:
        return ctx, weights, monomials, []
    power = _power_vectors(gens, ctx)
    columns = [
        LinearAlgebra.convolve(LinearAlgebra.convolve(power(0, i), power(1, j), ctx), power(2, l), ctx)
        for i, j, l in monomials
    ]
    rows = LinearAlgebra.transpose(columns)
    return ctx, weights, monomials, LinearAlgebra.kernel(rows, len(monomials), ctx)


class RelationService:
    @staticmethod
    def find_relation(gens: Sequence[Generator], e: int) -> WeightedPoly3:
        """The unique relation of weighted degree e, first coefficient 1."""
        ctx, weights, monomials, kernel = _relation_kernel(gens, e)
        if len(kernel) != 1:
            raise NoRelationException(e, len(kernel))
        vec = kernel[0]
        lead = next(c for c in vec if not c.is_zero())
        inv = lead.inverse()
        relation = WeightedPoly3(ctx, weights, {m: c * inv for m, c in zip(monomials, vec)})
        logger.info(f"Relation in weighted degree {e}: {relation.text()}")
        return relation

    @staticmethod
    def relation_degree(gens: Sequence[Generator], emax: int) -> int:
        """Least weighted degree carrying a relation."""
        for e in range(1, emax + 1):
            if _relation_kernel(gens, e)[3]:
                return e
        raise NoRelationException(emax, 0)

    @staticmethod
    def normalize_ADE(rel: WeightedPoly3) -> ADEMatch:
        """Carry rel onto an ADE normal form by permuting, shifting and scaling variables."""
        if not all(rel.variables_used()) or not rel.is_homogeneous():
            raise UnmatchedNormalFormException(rel.text())
        e = rel.weighted_degree(next(iter(rel.terms)))
        for perm in itertools.permutations(range(3)):
            f = rel.permute(perm)
            t = candidate_type(f.weights, e)
            if t is None:
                continue
            match = _match_template(f, t)
            if match is not None:
                match.permutation = tuple(perm)
                logger.info(f"Relation {rel.text()} has type {t.label}")
                return match
        raise UnmatchedNormalFormException(rel.text())


def _substitute_variable(f: WeightedPoly3, index: int, image: WeightedPoly3) -> WeightedPoly3:
    images = [WeightedPoly3.variable(f.ctx, f.weights, i) for i in range(3)]
    images[index] = image
    return f.compose(images)


def _complete_square(f: WeightedPoly3, index: int, square: Tuple[int, int, int], cross: Tuple[int, int, int]):
    """Remove the monomial `cross` = V * M using the monomial `square` = V^2 * N, for V the variable at index."""
    c_cross = f.coefficient(*cross)
    if c_cross.is_zero():
        return f, None
    c_square = f.coefficient(*square)
    if c_square.is_zero():
        return None, None
    two = f.ctx.element(2)
    if two.is_zero():
        return None, None
    shift_exp = tuple(cross[i] - square[i] + (1 if i == index else 0) for i in range(3))
    if any(x < 0 for x in shift_exp) or shift_exp[index] != 0:
        return None, None
    shift = c_cross / (two * c_square)
    variable = WeightedPoly3.variable(f.ctx, f.weights, index)
    image = variable - WeightedPoly3(f.ctx, f.weights, {shift_exp: shift})
    names = "XYZ"
    mono = "*".join(f"{names[i]}^{x}" if x > 1 else names[i] for i, x in enumerate(shift_exp) if x)
    return _substitute_variable(f, index, image), f"{names[index]} -> {names[index]} - {shift.text()}*{mono or '1'}"


def _sqrt(ctx: FieldCtx, a: FieldElem) -> Tuple[FieldCtx, FieldElem]:
    return nth_root(ctx, a, 2)


def _match_template(f: WeightedPoly3, t: ADEType) -> Optional[ADEMatch]:
    shifts: List[str] = []
    if t.kind != KIND_A:
        n = t.n
        if t.kind == KIND_D and n % 2 == 1:
            f, note = _complete_square(f, 0, (2, 0, 0), (1, (n - 1) // 2, 0))
            if f is None:
                return None
            if note:
                shifts.append(note)
        elif t.kind == KIND_E6:
            f, note = _complete_square(f, 0, (2, 0, 0), (1, 0, 2))
            if f is None:
                return None
            if note:
                shifts.append(note)
        if t.kind == KIND_D and n % 2 == 0:
            f, note = _complete_square(f, 2, (0, 1, 2), (0, n // 2, 1))
            if f is None:
                return None
            if note:
                shifts.append(note)

    template = NormalForm.for_type(t, f.ctx).poly
    if set(f.terms) != set(template.terms):
        return None

    ctx = f.ctx
    coeffs = [f.coefficient(*exp) for exp, _ in template.sorted_terms()]
    c1, c2, c3 = coeffs if len(coeffs) == 3 else (coeffs[0], coeffs[1], None)

    if t.kind == KIND_A:
        # template terms sorted: XY, Z^(n+1)
        alpha, beta, gamma = ctx.one, c2 / c1, ctx.one
        factor = c2
    elif t.kind == KIND_D:
        # sorted: X^2, Y^(n-1), YZ^2
        cx, cyn, cyz = c1, c2, c3
        K1, alpha = _sqrt(ctx, cyn / cx)
        K2, gamma = _sqrt(ctx, cyn / cyz)
        K = common_field(K1, K2)
        alpha, gamma = embed(alpha, K), embed(gamma, K)
        beta, factor = K.one, embed(cyn, K)
        ctx = K
    elif t.kind == KIND_E6:
        # sorted: X^2, Y^3, Z^4
        K1, rho = _sqrt(ctx, c1)
        K2, sigma = _sqrt(ctx, c3)
        K = common_field(K1, K2)
        rho, sigma, c2 = embed(rho, K), embed(sigma, K), embed(c2, K)
        factor = c2 ** 4 * sigma ** 6
        alpha = c2 ** 2 * sigma ** 3 / rho
        beta = c2 * sigma ** 2
        gamma = c2 * sigma
        ctx = K
    elif t.kind == KIND_E7:
        # sorted: X^2, Y^3, YZ^3
        factor = c1 ** 9 * c2 ** 4 * c3 ** 6
        alpha = c1 ** 4 * c2 ** 2 * c3 ** 3
        beta = c1 ** 3 * c2 * c3 ** 2
        gamma = c1 ** 2 * c2 * c3
    else:
        # sorted: X^2, Y^3, Z^5
        factor = c1 ** 15 * c2 ** 10 * c3 ** 6
        alpha = c1 ** 7 * c2 ** 5 * c3 ** 3
        beta = c1 ** 5 * c2 ** 3 * c3 ** 2
        gamma = c1 ** 3 * c2 ** 2 * c3

    g = f.embed(ctx)
    scaled = g.compose(
        [WeightedPoly3.variable(ctx, g.weights, i, s) for i, s in enumerate((alpha, beta, gamma))]
    )
    normal_form = NormalForm.for_type(t, ctx).poly
    if scaled != normal_form.scale(factor):
        return None
    return ADEMatch(
        ade=t,
        ctx=ctx,
        permutation=(0, 1, 2),
        scaling=(alpha, beta, gamma),
        factor=factor,
        shifts=shifts,
        normal_form=normal_form,
    )
