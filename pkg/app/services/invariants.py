"""
Invariant rings of subgroup schemes acting on k[u, v].

Homogeneous pieces S_d are handled as dense vectors: coordinate i multiplies
u^(d-i) v^i. A matrix g acts by g.u = g11*u + g21*v and g.v = g12*u + g22*v,
extended multiplicatively, so diag(z, 1/z) scales u^a v^b by z^(a-b).
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from app.core.settings import settings
from app.exceptions.classification_exceptions import GeneratorCountException
from app.exceptions.custom_exceptions import (
    NotLinearlyReductiveException,
    SingularMatrixException,
    ValidationException,
)
from app.models.field import FieldElem, common_field
from app.models.matrix import GroupClosure, Mat2
from app.models.polynomial import BivarPoly, WeightedPoly3
from app.models.scheme import ADEType, SubgroupScheme
from app.services.linalg import LinearAlgebra, Vector

logger = logging.getLogger(__name__)

METHOD_FIXED = "fixed"
METHOD_REYNOLDS = "reynolds"

Generator = Tuple[int, BivarPoly]


class LinearPowers:
    """Cached dense powers of g.u and g.v for one matrix g."""

    def __init__(self, g: Mat2):
        self.g = g
        self.ctx = g.ctx
        self._u = [[self.ctx.one]]
        self._v = [[self.ctx.one]]
        self._u_form = [g.a, g.c]
        self._v_form = [g.b, g.d]

    def _extend(self, powers: List[Vector], form: Vector, n: int) -> Vector:
        while len(powers) <= n:
            powers.append(LinearAlgebra.convolve(powers[-1], form, self.ctx))
        return powers[n]

    def monomial(self, a: int, b: int) -> Vector:
        """Image of u^a v^b as a dense vector of degree a + b."""
        return LinearAlgebra.convolve(
            self._extend(self._u, self._u_form, a),
            self._extend(self._v, self._v_form, b),
            self.ctx,
        )

    def act_vector(self, w: Sequence[FieldElem], d: int) -> Vector:
        g, ctx = self.g, self.ctx
        if g.is_diagonal():
            return [c * g.a ** (d - i) * g.d ** i for i, c in enumerate(w)]
        if g.is_antidiagonal():
            out = [ctx.zero] * (d + 1)
            for i, c in enumerate(w):
                if not c.is_zero():
                    out[d - i] = c * g.c ** (d - i) * g.b ** i
            return out
        out = [ctx.zero] * (d + 1)
        for i, c in enumerate(w):
            if c.is_zero():
                continue
            image = self.monomial(d - i, i)
            out = [x + c * y for x, y in zip(out, image)]
        return out


def _generator_rank(g: Mat2) -> int:
    if g.is_diagonal():
        return 0
    if g.is_antidiagonal():
        return 1
    return 2


class SchemeAction:
    """The reduced generators of a scheme, ordered diagonal, antidiagonal, general."""

    def __init__(self, G: SubgroupScheme):
        self.scheme = G
        gens = [g for g in G.reduced_generators if not g.is_identity()]
        gens.sort(key=_generator_rank)
        self.powers = [LinearPowers(g) for g in gens]


class InvariantEngine:
    @staticmethod
    def act(g: Mat2, f: BivarPoly) -> BivarPoly:
        """Image of f under the matrix g."""
        if g.det().is_zero():
            raise SingularMatrixException()
        if g.ctx != f.ctx:
            K = common_field(g.ctx, f.ctx)
            g, f = g.embed(K), f.embed(K)
        ctx = f.ctx
        if g.is_diagonal():
            return BivarPoly(ctx, {(a, b): c * g.a ** a * g.d ** b for (a, b), c in f.terms.items()})
        if g.is_antidiagonal():
            return BivarPoly(ctx, {(b, a): c * g.c ** a * g.b ** b for (a, b), c in f.terms.items()})
        powers = LinearPowers(g)
        result = BivarPoly(ctx)
        for (a, b), c in f.terms.items():
            result = result + BivarPoly.from_vector(ctx, a + b, powers.monomial(a, b)).scale(c)
        return result

    @staticmethod
    def act_matrix(g: Mat2, d: int) -> List[Vector]:
        """Columns are the images of u^d, u^(d-1) v, ..., v^d."""
        powers = LinearPowers(g)
        return [powers.monomial(d - i, i) for i in range(d + 1)]

    @staticmethod
    def mu_invariant_basis(r: int, d: int) -> List[Tuple[int, int]]:
        """Exponents (a, b) with a + b = d and a = b mod r, a descending."""
        if r < 1 or d < 0:
            raise ValidationException(f"need r >= 1 and d >= 0, got r={r}, d={d}")
        return [(d - b, b) for b in range(d + 1) if (d - 2 * b) % r == 0]

    @staticmethod
    def reynolds(H: GroupClosure, f: BivarPoly) -> BivarPoly:
        """Average of f over H."""
        ctx = H.ctx
        if H.order % ctx.p == 0:
            raise NotLinearlyReductiveException(
                f"Reynolds operator undefined: p = {ctx.p} divides |H| = {H.order}"
            )
        total = BivarPoly(ctx)
        for g in H.elements:
            total = total + InvariantEngine.act(g, f)
        return total.scale(ctx.element(H.order).inverse())

    @staticmethod
    def fixed_space(powers: LinearPowers, d: int, basis: List[Vector]) -> List[Vector]:
        """Vectors in the span of basis fixed by one matrix."""
        if not basis:
            return []
        ctx = powers.ctx
        differences = [
            [x - y for x, y in zip(powers.act_vector(w, d), w)] for w in basis
        ]
        rows = LinearAlgebra.transpose(differences)
        kernel = LinearAlgebra.kernel(rows, len(basis), ctx)
        fixed = []
        for coeffs in kernel:
            v = [ctx.zero] * (d + 1)
            for c, w in zip(coeffs, basis):
                if not c.is_zero():
                    v = [x + c * y for x, y in zip(v, w)]
            fixed.append(v)
        return fixed

    @staticmethod
    def invariant_vectors(
        G: SubgroupScheme,
        d: int,
        method: str = METHOD_FIXED,
        action: Optional[SchemeAction] = None,
    ) -> List[Vector]:
        """RREF basis of the degree-d invariants as dense vectors."""
        ctx = G.ctx
        if G.reduced_part.order % ctx.p == 0:
            raise NotLinearlyReductiveException(
                f"reduced part of order {G.reduced_part.order} is not linearly reductive at p = {ctx.p}"
            )
        exps = InvariantEngine.mu_invariant_basis(G.r, d)

        if method == METHOD_REYNOLDS:
            images = [
                InvariantEngine.reynolds(G.reduced_part, BivarPoly.monomial(ctx, a, b)).to_vector(d)
                for a, b in exps
            ]
            return LinearAlgebra.rref(images, d + 1)[0]
        if method != METHOD_FIXED:
            raise ValidationException(f"unknown invariant method {method!r}")

        action = action or SchemeAction(G)
        unit = [[ctx.one if i == b else ctx.zero for i in range(d + 1)] for _, b in exps]
        basis = unit
        monomial = True
        for powers in action.powers:
            g = powers.g
            if monomial and g.is_diagonal():
                basis = [w for w, (a, b) in zip(basis, exps) if (g.a ** a * g.d ** b).is_one()]
                exps = [(a, b) for a, b in exps if (g.a ** a * g.d ** b).is_one()]
            else:
                monomial = False
                basis = InvariantEngine.fixed_space(powers, d, basis)
            if not basis:
                return []
        return LinearAlgebra.rref(basis, d + 1)[0]

    @staticmethod
    def invariant_basis(G: SubgroupScheme, d: int, method: str = METHOD_FIXED) -> List[BivarPoly]:
        """Basis of the degree-d invariants in reduced row-echelon form."""
        return [BivarPoly.from_vector(G.ctx, d, v) for v in InvariantEngine.invariant_vectors(G, d, method)]

    @staticmethod
    def hilbert(G: SubgroupScheme, dmax: Optional[int] = None) -> List[int]:
        dmax = dmax if dmax is not None else settings.HILBERT_DMAX
        action = SchemeAction(G)
        return [len(InvariantEngine.invariant_vectors(G, d, action=action)) for d in range(dmax + 1)]

    @staticmethod
    def expected_hilbert(t: ADEType, dmax: int) -> List[int]:
        """Coefficients of (1 - t^e) / ((1 - t^d1)(1 - t^d2)(1 - t^d3)) through t^dmax."""
        series = [1] + [0] * dmax
        for k in t.degrees:
            for i in range(k, dmax + 1):
                series[i] += series[i - k]
        e = t.relation_degree
        return [series[i] - (series[i - e] if i >= e else 0) for i in range(dmax + 1)]

    @staticmethod
    def minimal_generators(G: SubgroupScheme, dmax: Optional[int] = None) -> List[Generator]:
        """Minimal homogeneous generators of the invariant ring, by degree."""
        dmax = dmax if dmax is not None else settings.DEFAULT_DMAX
        ctx = G.ctx
        action = SchemeAction(G)
        chosen: List[Tuple[int, Vector]] = []
        algebra: Dict[int, List[Vector]] = {0: [[ctx.one]]}

        for d in range(1, dmax + 1):
            invariants = InvariantEngine.invariant_vectors(G, d, action=action)
            products = [
                LinearAlgebra.convolve(vec, row, ctx)
                for e, vec in chosen
                if e <= d
                for row in algebra[d - e]
            ]
            span, pivots = LinearAlgebra.rref(products, d + 1) if products else ([], [])
            remainders = [LinearAlgebra.reduce(v, span, pivots) for v in invariants]
            remainders = [v for v in remainders if not LinearAlgebra.is_zero(v)]
            new = LinearAlgebra.rref(remainders, d + 1)[0] if remainders else []
            for vec in new:
                chosen.append((d, vec))
                logger.debug(f"New invariant generator in degree {d}")
            if len(chosen) > 3:
                raise GeneratorCountException(len(chosen), d)
            algebra[d] = LinearAlgebra.rref(span + new, d + 1)[0] if new else span

        if len(chosen) != 3:
            raise GeneratorCountException(len(chosen), dmax)
        logger.info(f"Invariant generators in degrees {[d for d, _ in chosen]}")
        return [(d, BivarPoly.from_vector(ctx, d, vec)) for d, vec in chosen]

    @staticmethod
    def subalgebra_dims(gens: Sequence[Generator], dmax: int) -> List[int]:
        """Hilbert function of the algebra generated by homogeneous gens."""
        if not gens:
            return [1] + [0] * dmax
        ctx = gens[0][1].ctx
        vectors = [(d, poly.to_vector(d)) for d, poly in gens]
        algebra: Dict[int, List[Vector]] = {0: [[ctx.one]]}
        for d in range(1, dmax + 1):
            products = [
                LinearAlgebra.convolve(vec, row, ctx)
                for e, vec in vectors
                if e <= d
                for row in algebra[d - e]
            ]
            algebra[d] = LinearAlgebra.rref(products, d + 1)[0] if products else []
        return [len(algebra[d]) for d in range(dmax + 1)]

    @staticmethod
    def substitute(rel: WeightedPoly3, gens: Sequence[Union[BivarPoly, Generator]]) -> BivarPoly:
        """Image of rel under X, Y, Z -> the three generators."""
        polys = [g[1] if isinstance(g, tuple) else g for g in gens]
        if len(polys) != 3:
            raise ValidationException("substitution needs exactly three generators")
        ctx = polys[0].ctx
        cache: Dict[Tuple[int, int], BivarPoly] = {}

        def power(i: int, e: int) -> BivarPoly:
            if (i, e) not in cache:
                cache[(i, e)] = polys[i] ** e
            return cache[(i, e)]

        result = BivarPoly(ctx)
        for (i, j, l), c in rel.terms.items():
            result = result + (power(0, i) * power(1, j) * power(2, l)).scale(c)
        return result
