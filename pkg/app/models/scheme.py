"""
Linearly reductive finite subgroup schemes of SL2.

A scheme is stored as the diagonal root-of-unity part mu_r, carried as the
integer r with weights (1, -1), together with extra matrix generators. Its
reduced points are the closure of the extra generators and diag(z, z^-1)
for a primitive m-th root z, m the prime-to-p part of r. The connected
component is mu_{p^e} for the p-part p^e of r.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence

from app.core.constants import (
    E_DEGREES,
    E_KINDS,
    E_ORDERS,
    KIND_A,
    KIND_D,
    MIN_CHARACTERISTIC,
)
from app.exceptions.custom_exceptions import (
    NotAbelianException,
    NotLinearlyReductiveException,
    ValidationException,
)
from app.models.field import FieldCtx, common_field, primitive_root_of_unity
from app.models.lattice import AbelianGroup, char_group_of_mu, p_part_split
from app.models.matrix import (
    GroupClosure,
    Mat2,
    close_group,
    is_abelian,
    is_pseudo_reflection,
)

logger = logging.getLogger(__name__)

_LABEL = re.compile(r"^\s*([ADE])\s*_?\s*(\d*)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class ADEType:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind == KIND_A and self.n < 1:
            raise ValidationException(f"A_n needs n >= 1, got {self.n}")
        if self.kind == KIND_D and self.n < 4:
            raise ValidationException(f"D_n needs n >= 4, got {self.n}")
        if self.kind in E_KINDS and self.n != int(self.kind[1]):
            raise ValidationException(f"{self.kind} has fixed index {self.kind[1]}")
        if self.kind not in (KIND_A, KIND_D) + E_KINDS:
            raise ValidationException(f"unknown ADE family {self.kind!r}")

    @classmethod
    def parse(cls, label: str, n: Optional[int] = None) -> "ADEType":
        """Accepts 'A3', 'D_5', 'E6', or a bare family letter together with n."""
        match = _LABEL.match(label or "")
        if not match:
            raise ValidationException(f"cannot parse ADE type {label!r}")
        family, digits = match.group(1).upper(), match.group(2)
        if digits and n is not None and int(digits) != n:
            raise ValidationException(f"type {label!r} disagrees with n={n}")
        index = int(digits) if digits else n
        if index is None:
            raise ValidationException(f"type {label!r} needs an index")
        kind = f"E{index}" if family == "E" else family
        return cls(kind, index)

    @classmethod
    def exceptional(cls, kind: str) -> "ADEType":
        return cls(kind, int(kind[1]))

    @property
    def family(self) -> str:
        return self.kind[0]

    @property
    def label(self) -> str:
        return self.kind if self.kind in E_KINDS else f"{self.kind}{self.n}"

    @property
    def group_order(self) -> int:
        if self.kind == KIND_A:
            return self.n + 1
        if self.kind == KIND_D:
            return 4 * self.n - 8
        return E_ORDERS[self.kind]

    @property
    def degrees(self) -> tuple:
        if self.kind == KIND_A:
            return (2, self.n + 1, self.n + 1)
        if self.kind == KIND_D:
            return (4, 2 * self.n - 4, 2 * self.n - 2)
        return E_DEGREES[self.kind][0]

    @property
    def relation_degree(self) -> int:
        if self.kind == KIND_A:
            return 2 * self.n + 2
        if self.kind == KIND_D:
            return 4 * self.n - 4
        return E_DEGREES[self.kind][1]

    @property
    def min_characteristic(self) -> int:
        return MIN_CHARACTERISTIC[self.kind]

    def tag(self, p: int) -> str:
        return f"{self.family} n={self.n} p={p} |G|={self.group_order}"


class SubgroupScheme:
    def __init__(self, ctx: FieldCtx, r: int, extra_gens: Sequence[Mat2] = (), cap: Optional[int] = None):
        if r < 1:
            raise ValidationException(f"r must be positive, got {r}")
        self.ctx = ctx
        self.r = r
        self.extra_gens: List[Mat2] = [g.embed(ctx) if g.ctx != ctx else g for g in extra_gens]
        self.p_e, self.m = p_part_split(r, ctx.p)
        zeta = primitive_root_of_unity(ctx, self.m)
        self.mu_generator = Mat2.diag(zeta, zeta.inverse())
        self.reduced_part: GroupClosure = close_group(self.extra_gens + [self.mu_generator], cap=cap, ctx=ctx)
        logger.debug(
            f"Scheme r={r} over {ctx.describe()}: connected part mu_{self.p_e}, "
            f"{self.reduced_part.order} reduced points"
        )

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def order(self) -> int:
        return self.p_e * self.reduced_part.order

    @property
    def connected_component(self) -> int:
        """Order p^e of the infinitesimal part mu_{p^e}."""
        return self.p_e

    @property
    def is_reduced(self) -> bool:
        return self.p_e == 1

    @property
    def reduced_generators(self) -> List[Mat2]:
        return self.reduced_part.generators

    def is_abelian_scheme(self) -> bool:
        if self.r <= 2:
            return is_abelian(self.reduced_part)
        return all(g.is_diagonal() for g in self.extra_gens)

    def is_small(self) -> bool:
        return not any(is_pseudo_reflection(g) for g in self.reduced_part.elements)

    def validate(self) -> List[str]:
        violations = []
        for i, g in enumerate(self.extra_gens):
            if not g.in_sl2():
                violations.append(f"generator {i} {g.text()} has determinant {g.det().text()}, not 1")
            if self.r >= 3 and not (g.is_diagonal() or g.is_antidiagonal()):
                violations.append(
                    f"generator {i} {g.text()} does not normalize the diagonal torus (r = {self.r} >= 3)"
                )
        if self.reduced_part.order % self.p == 0:
            violations.append(
                f"reduced part has order {self.reduced_part.order}, divisible by p = {self.p}; "
                "the scheme is not linearly reductive"
            )
        if self.p == 2 and self.p_e > 1 and not self.is_abelian_scheme():
            violations.append(
                "a non-abelian scheme with nontrivial connected part needs p >= 3 "
                "(the reduced part would have odd order and be abelian)"
            )
        return violations

    def ensure_valid(self) -> "SubgroupScheme":
        violations = self.validate()
        if not violations:
            return self
        if any("not linearly reductive" in v for v in violations):
            raise NotLinearlyReductiveException("; ".join(violations))
        raise ValidationException("; ".join(violations))

    def embed(self, dst: FieldCtx) -> "SubgroupScheme":
        if dst == self.ctx:
            return self
        return SubgroupScheme(dst, self.r, [g.embed(dst) for g in self.extra_gens])

    def conjugate(self, T: Mat2) -> "SubgroupScheme":
        """Scheme T G T^-1; for r >= 3 T must normalize the diagonal torus."""
        if self.r >= 3 and not (T.is_diagonal() or T.is_antidiagonal()):
            raise ValidationException(
                f"conjugator {T.text()} does not normalize the diagonal torus required for r = {self.r}"
            )
        K = common_field(T.ctx, self.ctx)
        T = T.embed(K)
        T_inv = T.inverse()
        return SubgroupScheme(K, self.r, [T * g.embed(K) * T_inv for g in self.extra_gens])

    def same_as(self, other: "SubgroupScheme") -> bool:
        if self.p != other.p or self.p_e != other.p_e:
            return False
        K = common_field(self.ctx, other.ctx)
        return self.reduced_part.embed(K).keys() == other.reduced_part.embed(K).keys()

    def describe(self) -> str:
        return f"r={self.r} over {self.ctx.describe()} with {len(self.extra_gens)} extra generators, |G|={self.order}"


def character_group(G: SubgroupScheme) -> AbelianGroup:
    """Characters of an abelian scheme, which is diagonalizable and hence mu_{|G|}."""
    if not G.is_abelian_scheme():
        raise NotAbelianException("only abelian schemes are diagonalizable")
    return char_group_of_mu(G.order)


def sweedler_form(G: SubgroupScheme) -> AbelianGroup:
    """Characters of the connected component mu_{p^e}."""
    return char_group_of_mu(G.p_e)
