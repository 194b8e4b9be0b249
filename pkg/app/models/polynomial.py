"""
Polynomials in k[u, v] and weighted polynomials in k[X, Y, Z].

Both keep a canonical sparse form: a map from exponent tuples to nonzero
field elements.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from app.exceptions.custom_exceptions import FieldMismatchException, ValidationException
from app.models.field import FieldCtx, FieldElem, embed

Exp2 = Tuple[int, int]
Exp3 = Tuple[int, int, int]


def _coeff_text(c: FieldElem, monomial: str) -> str:
    if not monomial:
        return c.text()
    if c.is_one():
        return monomial
    return f"{c.text()}*{monomial}"


def _power_text(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


class BivarPoly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms: Optional[Mapping[Exp2, FieldElem]] = None):
        self.ctx = ctx
        self.terms: Dict[Exp2, FieldElem] = {}
        for exp, c in (terms or {}).items():
            c = ctx.element(c)
            if not c.is_zero():
                self.terms[exp] = c

    @classmethod
    def monomial(cls, ctx: FieldCtx, a: int, b: int, coeff=1) -> "BivarPoly":
        return cls(ctx, {(a, b): ctx.element(coeff)})

    @classmethod
    def constant(cls, ctx: FieldCtx, c=1) -> "BivarPoly":
        return cls.monomial(ctx, 0, 0, c)

    @classmethod
    def u(cls, ctx: FieldCtx) -> "BivarPoly":
        return cls.monomial(ctx, 1, 0)

    @classmethod
    def v(cls, ctx: FieldCtx) -> "BivarPoly":
        return cls.monomial(ctx, 0, 1)

    @classmethod
    def linear(cls, x: FieldElem, y: FieldElem) -> "BivarPoly":
        """x*u + y*v."""
        return cls(x.ctx, {(1, 0): x, (0, 1): y})

    @classmethod
    def from_vector(cls, ctx: FieldCtx, d: int, vector: Sequence[FieldElem]) -> "BivarPoly":
        """Homogeneous polynomial whose i-th coordinate multiplies u^(d-i) v^i."""
        return cls(ctx, {(d - i, i): c for i, c in enumerate(vector)})

    def to_vector(self, d: int) -> List[FieldElem]:
        zero = self.ctx.zero
        vec = [zero] * (d + 1)
        for (a, b), c in self.terms.items():
            if a + b != d:
                raise ValidationException(f"polynomial is not homogeneous of degree {d}")
            vec[b] = c
        return vec

    def _check(self, other: "BivarPoly") -> None:
        if other.ctx != self.ctx:
            raise FieldMismatchException()

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms[exp] + c if exp in terms else c
        return BivarPoly(self.ctx, terms)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly(self.ctx, {exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        return self + (-other)

    def __mul__(self, other) -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return self.scale(self.ctx.element(other))
        self._check(other)
        terms: Dict[Exp2, FieldElem] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                exp = (a1 + a2, b1 + b2)
                terms[exp] = terms[exp] + c1 * c2 if exp in terms else c1 * c2
        return BivarPoly(self.ctx, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivarPoly":
        result = BivarPoly.constant(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(sorted((exp, c.coeffs) for exp, c in self.terms.items())))

    def __repr__(self) -> str:
        return f"BivarPoly({self.text()})"

    def scale(self, s: FieldElem) -> "BivarPoly":
        return BivarPoly(self.ctx, {exp: c * s for exp, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({a + b for a, b in self.terms}) <= 1

    def coefficient(self, a: int, b: int) -> FieldElem:
        return self.terms.get((a, b), self.ctx.zero)

    def sorted_terms(self) -> List[Tuple[Exp2, FieldElem]]:
        """Canonical order: total degree, then the u-exponent descending."""
        return sorted(self.terms.items(), key=lambda item: (item[0][0] + item[0][1], -item[0][0]))

    def leading_coefficient(self) -> FieldElem:
        items = self.sorted_terms()
        return items[0][1] if items else self.ctx.zero

    def monic(self) -> "BivarPoly":
        lead = self.leading_coefficient()
        return self if lead.is_zero() else self.scale(lead.inverse())

    def embed(self, dst: FieldCtx) -> "BivarPoly":
        if dst == self.ctx:
            return self
        return BivarPoly(dst, {exp: embed(c, dst) for exp, c in self.terms.items()})

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            mono = "*".join(x for x in (_power_text("u", a), _power_text("v", b)) if x)
            parts.append(_coeff_text(c, mono))
        return " + ".join(parts)


class WeightedPoly3:
    """Polynomial in X, Y, Z with positive weights (d_X, d_Y, d_Z)."""

    __slots__ = ("ctx", "weights", "terms")

    def __init__(self, ctx: FieldCtx, weights: Sequence[int], terms: Optional[Mapping[Exp3, FieldElem]] = None):
        if len(weights) != 3 or any(w <= 0 for w in weights):
            raise ValidationException(f"weights must be three positive integers, got {list(weights)}")
        self.ctx = ctx
        self.weights: Tuple[int, int, int] = tuple(weights)
        self.terms: Dict[Exp3, FieldElem] = {}
        for exp, c in (terms or {}).items():
            c = ctx.element(c)
            if not c.is_zero():
                self.terms[tuple(exp)] = c

    @classmethod
    def variable(cls, ctx: FieldCtx, weights: Sequence[int], index: int, coeff=1) -> "WeightedPoly3":
        exp = tuple(int(i == index) for i in range(3))
        return cls(ctx, weights, {exp: ctx.element(coeff)})

    @classmethod
    def from_monomials(cls, ctx: FieldCtx, weights: Sequence[int], monomials: Iterable[Tuple[Exp3, object]]) -> "WeightedPoly3":
        terms: Dict[Exp3, FieldElem] = {}
        for exp, c in monomials:
            c = ctx.element(c)
            terms[exp] = terms[exp] + c if exp in terms else c
        return cls(ctx, weights, terms)

    def _like(self, terms: Mapping[Exp3, FieldElem]) -> "WeightedPoly3":
        return WeightedPoly3(self.ctx, self.weights, terms)

    def _check(self, other: "WeightedPoly3") -> None:
        if other.ctx != self.ctx:
            raise FieldMismatchException()
        if other.weights != self.weights:
            raise ValidationException(f"weights {other.weights} differ from {self.weights}")

    def __add__(self, other: "WeightedPoly3") -> "WeightedPoly3":
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms[exp] + c if exp in terms else c
        return self._like(terms)

    def __neg__(self) -> "WeightedPoly3":
        return self._like({exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other: "WeightedPoly3") -> "WeightedPoly3":
        return self + (-other)

    def __mul__(self, other) -> "WeightedPoly3":
        if not isinstance(other, WeightedPoly3):
            return self.scale(self.ctx.element(other))
        self._check(other)
        terms: Dict[Exp3, FieldElem] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                terms[exp] = terms[exp] + c1 * c2 if exp in terms else c1 * c2
        return self._like(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "WeightedPoly3":
        result = self._like({(0, 0, 0): self.ctx.one})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedPoly3):
            return NotImplemented
        return self.ctx == other.ctx and self.weights == other.weights and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.weights, tuple(sorted((exp, c.coeffs) for exp, c in self.terms.items()))))

    def __repr__(self) -> str:
        return f"WeightedPoly3({self.text()}; weights={list(self.weights)})"

    def scale(self, s: FieldElem) -> "WeightedPoly3":
        return self._like({exp: c * s for exp, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degree(self, exp: Exp3) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def is_homogeneous(self) -> bool:
        return len({self.weighted_degree(exp) for exp in self.terms}) <= 1

    def coefficient(self, i: int, j: int, l: int) -> FieldElem:
        return self.terms.get((i, j, l), self.ctx.zero)

    def sorted_terms(self) -> List[Tuple[Exp3, FieldElem]]:
        """Monomial order: X-exponent, then Y-exponent, then Z-exponent, all descending."""
        return sorted(self.terms.items(), key=lambda item: tuple(-e for e in item[0]))

    def leading_coefficient(self) -> FieldElem:
        items = self.sorted_terms()
        return items[0][1] if items else self.ctx.zero

    def monic(self) -> "WeightedPoly3":
        lead = self.leading_coefficient()
        return self if lead.is_zero() else self.scale(lead.inverse())

    def variables_used(self) -> Tuple[bool, bool, bool]:
        return tuple(any(exp[i] for exp in self.terms) for i in range(3))

    def permute(self, perm: Sequence[int]) -> "WeightedPoly3":
        """Rename variables: the old variable i becomes variable perm[i]."""
        weights = [0, 0, 0]
        for i, target in enumerate(perm):
            weights[target] = self.weights[i]
        terms = {}
        for exp, c in self.terms.items():
            new = [0, 0, 0]
            for i, target in enumerate(perm):
                new[target] = exp[i]
            terms[tuple(new)] = c
        return WeightedPoly3(self.ctx, weights, terms)

    def compose(self, images: Sequence["WeightedPoly3"]) -> "WeightedPoly3":
        """Substitute X, Y, Z by the given polynomials (which share their weights)."""
        if len(images) != 3:
            raise ValidationException("compose needs three images")
        result = WeightedPoly3(self.ctx, images[0].weights)
        cache: Dict[Tuple[int, int], WeightedPoly3] = {}

        def power(i: int, e: int) -> WeightedPoly3:
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        for exp, c in self.terms.items():
            term = power(0, exp[0]) * power(1, exp[1]) * power(2, exp[2])
            result = result + term.scale(c)
        return result

    def embed(self, dst: FieldCtx) -> "WeightedPoly3":
        if dst == self.ctx:
            return self
        return WeightedPoly3(dst, self.weights, {exp: embed(c, dst) for exp, c in self.terms.items()})

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(x for x in (_power_text(v, e) for v, e in zip("XYZ", exp)) if x)
            parts.append(_coeff_text(c, mono))
        return " + ".join(parts)
