"""
2x2 matrices over a finite field and the finite groups they generate.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from app.core.settings import settings
from app.exceptions.custom_exceptions import (
    CapExceededException,
    FieldMismatchException,
    NonSemisimpleException,
    NotAbelianException,
    SingularMatrixException,
    ValidationException,
)
from app.middleware.metrics_middleware import CLOSURE_ELEMENTS
from app.models.field import (
    FieldCtx,
    FieldElem,
    build_field,
    common_field,
    embed,
    ext_degree_for_root,
    nth_root,
    primitive_root_of_unity,
)

logger = logging.getLogger(__name__)

Entry = Union[int, Sequence[int], FieldElem]


class Mat2:
    """[[a, b], [c, d]] with entries in a single field."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem):
        ctx = a.ctx
        if not (b.ctx == ctx and c.ctx == ctx and d.ctx == ctx):
            raise FieldMismatchException("matrix entries must share one field")
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def of(cls, ctx: FieldCtx, a: Entry, b: Entry, c: Entry, d: Entry) -> "Mat2":
        return cls(ctx.element(a), ctx.element(b), ctx.element(c), ctx.element(d))

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "Mat2":
        return cls(ctx.one, ctx.zero, ctx.zero, ctx.one)

    @classmethod
    def diag(cls, x: FieldElem, y: FieldElem) -> "Mat2":
        return cls(x, x.ctx.zero, x.ctx.zero, y)

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    @property
    def key(self) -> Tuple:
        return (self.a.coeffs, self.b.coeffs, self.c.coeffs, self.d.coeffs)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, e: int) -> "Mat2":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Mat2.identity(self.ctx)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.ctx == other.ctx and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Mat2({self.text()})"

    def det(self) -> FieldElem:
        return self.a * self.d - self.b * self.c

    def trace(self) -> FieldElem:
        return self.a + self.d

    def inverse(self) -> "Mat2":
        det = self.det()
        if det.is_zero():
            raise SingularMatrixException()
        inv = det.inverse()
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def scale(self, s: FieldElem) -> "Mat2":
        return Mat2(self.a * s, self.b * s, self.c * s, self.d * s)

    def is_diagonal(self) -> bool:
        return self.b.is_zero() and self.c.is_zero()

    def is_antidiagonal(self) -> bool:
        return self.a.is_zero() and self.d.is_zero()

    def is_scalar(self) -> bool:
        return self.is_diagonal() and self.a == self.d

    def is_identity(self) -> bool:
        return self.is_diagonal() and self.a.is_one() and self.d.is_one()

    def in_sl2(self) -> bool:
        return self.det().is_one()

    def rank_of_difference(self) -> int:
        """Rank of g - I."""
        a, d = self.a - 1, self.d - 1
        if a.is_zero() and d.is_zero() and self.b.is_zero() and self.c.is_zero():
            return 0
        return 1 if (a * d - self.b * self.c).is_zero() else 2

    def commutes_with(self, other: "Mat2") -> bool:
        return (self * other).key == (other * self).key

    def embed(self, dst: FieldCtx) -> "Mat2":
        if self.ctx == dst:
            return self
        return Mat2(embed(self.a, dst), embed(self.b, dst), embed(self.c, dst), embed(self.d, dst))

    def literal(self) -> List[List]:
        return [[self.a.literal(), self.b.literal()], [self.c.literal(), self.d.literal()]]

    def text(self) -> str:
        return f"[[{self.a.text()},{self.b.text()}],[{self.c.text()},{self.d.text()}]]"


def is_pseudo_reflection(g: Mat2) -> bool:
    return g.rank_of_difference() == 1


def is_transvection(g: Mat2) -> bool:
    if not is_pseudo_reflection(g):
        return False
    n = Mat2(g.a - 1, g.b, g.c, g.d - 1)
    sq = n * n
    return sq.is_diagonal() and sq.a.is_zero() and sq.d.is_zero()


def element_order(g: Mat2, cap: Optional[int] = None) -> int:
    cap = cap if cap is not None else settings.CLOSURE_CAP
    x = g
    for n in range(1, cap + 1):
        if x.is_identity():
            return n
        x = x * g
    raise CapExceededException(cap, what="element order")


@dataclass(frozen=True)
class GroupClosure:
    elements: Tuple[Mat2, ...]
    gen_indices: Tuple[int, ...] = ()

    @property
    def ctx(self) -> FieldCtx:
        return self.elements[0].ctx

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> List[Mat2]:
        return [self.elements[i] for i in self.gen_indices]

    def contains(self, g: Mat2) -> bool:
        g = g.embed(self.ctx) if g.ctx != self.ctx else g
        return any(x.key == g.key for x in self.elements)

    def embed(self, dst: FieldCtx) -> "GroupClosure":
        if dst == self.ctx:
            return self
        return GroupClosure(tuple(x.embed(dst) for x in self.elements), self.gen_indices)

    def keys(self) -> frozenset:
        return frozenset(x.key for x in self.elements)


def close_group(gens: Iterable[Mat2], cap: Optional[int] = None, ctx: Optional[FieldCtx] = None) -> GroupClosure:
    """Breadth-first closure of the generators, starting from the identity."""
    cap = cap if cap is not None else settings.CLOSURE_CAP
    gens = list(gens)
    if not gens and ctx is None:
        raise ValidationException("close_group needs generators or a field")
    ctx = ctx or gens[0].ctx
    gens = [g.embed(ctx) if g.ctx != ctx else g for g in gens]
    for g in gens:
        if g.det().is_zero():
            raise SingularMatrixException(f"generator {g.text()} is singular")

    identity = Mat2.identity(ctx)
    elements: List[Mat2] = [identity]
    index: Dict[Tuple, int] = {identity.key: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y.key not in index:
                if len(elements) >= cap:
                    raise CapExceededException(cap, what="group")
                index[y.key] = len(elements)
                elements.append(y)
                queue.append(y)

    CLOSURE_ELEMENTS.observe(len(elements))
    logger.debug(f"Closed group over {ctx.describe()}: {len(elements)} elements from {len(gens)} generators")
    return GroupClosure(tuple(elements), tuple(index[g.key] for g in gens))


def is_abelian(G: GroupClosure) -> bool:
    gens = G.generators
    return all(x.commutes_with(y) for i, x in enumerate(gens) for y in gens[i + 1:])


def is_cyclic(G: GroupClosure) -> bool:
    return any(element_order(g) == G.order for g in G.elements)


def center(G: GroupClosure) -> List[Mat2]:
    gens = G.generators
    return [x for x in G.elements if all(x.commutes_with(g) for g in gens)]


def conjugate(T: Mat2, G: GroupClosure) -> GroupClosure:
    """Element-wise T g T^-1 over the least field holding both."""
    K = common_field(T.ctx, G.ctx)
    T = T.embed(K)
    T_inv = T.inverse()
    return GroupClosure(tuple(T * g.embed(K) * T_inv for g in G.elements), G.gen_indices)


def _eigenvalues(g: Mat2) -> Tuple[FieldCtx, FieldElem, FieldElem]:
    """Both eigenvalues of a non-scalar semisimple g in SL2."""
    ctx = g.ctx
    t = g.trace()
    if ctx.p != 2:
        disc = t * t - 4
        if disc.is_zero():
            raise NonSemisimpleException(f"{g.text()} has a repeated eigenvalue but is not scalar")
        K, s = nth_root(ctx, disc, 2)
        t = embed(t, K)
        half = K.element(2).inverse()
        return K, (t + s) * half, (t - s) * half

    m = element_order(g)
    if m % 2 == 0:
        raise NonSemisimpleException(f"{g.text()} has even order {m} in characteristic 2")
    K = common_field(ctx, build_field(2, ext_degree_for_root(2, m)))
    zeta = primitive_root_of_unity(K, m)
    t = embed(t, K)
    roots = []
    lam = K.one
    for _ in range(m):
        if (lam * lam - t * lam + 1).is_zero():
            roots.append(lam)
        lam = lam * zeta
    if len(roots) != 2:
        raise NonSemisimpleException(f"{g.text()} is not diagonalizable")
    return K, roots[0], roots[1]


def _eigenvector(g: Mat2, lam: FieldElem) -> Tuple[FieldElem, FieldElem]:
    x, y = g.b, lam - g.a
    if x.is_zero() and y.is_zero():
        x, y = lam - g.d, g.c
    lead = x if not x.is_zero() else y
    inv = lead.inverse()
    return x * inv, y * inv


def _vector_key(v: Tuple[FieldElem, FieldElem]) -> Tuple[int, int, int]:
    return (0 if not v[0].is_zero() else 1, v[0].code, v[1].code)


def simultaneous_diagonalize(G: GroupClosure) -> Mat2:
    """T in SL2 with T g T^-1 diagonal for every g in G."""
    if not is_abelian(G):
        raise NotAbelianException("simultaneous diagonalization needs an abelian group")
    for g in G.elements:
        if element_order(g) % G.ctx.p == 0:
            raise NonSemisimpleException(f"{g.text()} has order divisible by p = {G.ctx.p}")

    witness = next((g for g in G.elements if not g.is_scalar()), None)
    if witness is None:
        return Mat2.identity(G.ctx)

    K, lam1, lam2 = _eigenvalues(witness)
    witness = witness.embed(K)
    v1, v2 = sorted((_eigenvector(witness, lam1), _eigenvector(witness, lam2)), key=_vector_key)
    P = Mat2(v1[0], v2[0], v1[1], v2[1])
    s = P.det().inverse()
    P = Mat2(P.a, P.b * s, P.c, P.d * s)
    T = P.inverse()

    conjugated = conjugate(T, G)
    if not all(g.is_diagonal() for g in conjugated.elements):
        raise NotAbelianException("group elements do not share an eigenbasis")
    logger.debug(f"Diagonalized group of order {G.order} with T = {T.text()}")
    return T
