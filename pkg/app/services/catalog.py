"""Catalog constructors for the A/D/E subgroup schemes of SL2."""
import logging
import math
from typing import List, Optional, Sequence

from sympy import isprime

from app.core.constants import E_KINDS, E_ORDERS, KIND_A, KIND_D, KIND_E6, KIND_E7, KIND_E8
from app.exceptions.custom_exceptions import GateViolationException, NotPrimeException
from app.models.field import (
    FieldCtx,
    build_field,
    embed,
    ext_degree_for_root,
    nth_root,
    primitive_root_of_unity,
)
from app.models.lattice import p_part_split
from app.models.matrix import Mat2
from app.models.scheme import ADEType, SubgroupScheme

logger = logging.getLogger(__name__)


class CatalogService:
    @staticmethod
    def check_gate(t: ADEType, p: int) -> None:
        """Raise unless type t exists in characteristic p."""
        if not isprime(p):
            raise NotPrimeException(p)
        if p < t.min_characteristic:
            raise GateViolationException(t.label, p, t.min_characteristic)

    @staticmethod
    def mu_order(t: ADEType) -> int:
        """Order r of the diagonal mu_r part of the catalog scheme."""
        if t.kind == KIND_A:
            return t.n + 1
        if t.kind == KIND_D:
            return 2 * t.n - 4
        return 1

    @staticmethod
    def field_degree(t: ADEType, p: int) -> int:
        """Degree over F_p of the least field holding every root of unity the generators use."""
        if t.kind == KIND_A:
            roots = t.n + 1
        elif t.kind == KIND_D:
            roots = math.lcm(4, 2 * t.n - 4)
        elif t.kind == KIND_E8:
            roots = 10
        else:
            roots = 8
        _, m = p_part_split(roots, p)
        return ext_degree_for_root(p, m)

    @staticmethod
    def field_for(t: ADEType, p: int) -> FieldCtx:
        return build_field(p, CatalogService.field_degree(t, p))

    @staticmethod
    def make_catalog(t: ADEType, p: int) -> SubgroupScheme:
        """Build the catalog scheme of type t over the least sufficient field."""
        CatalogService.check_gate(t, p)
        F = CatalogService.field_for(t, p)

        if t.kind == KIND_A:
            G = SubgroupScheme(F, t.n + 1)
        elif t.kind == KIND_D:
            z4 = primitive_root_of_unity(F, 4)
            sigma = Mat2(F.zero, z4, z4, F.zero)
            G = SubgroupScheme(F, 2 * t.n - 4, [sigma])
        elif t.kind in (KIND_E6, KIND_E7):
            G = SubgroupScheme(*CatalogService._octahedral_data(F, t.kind))
        else:
            G = SubgroupScheme(*CatalogService._icosahedral_data(F))

        logger.info(f"Catalog {t.label} at p={p}: {G.describe()}")
        return G

    @staticmethod
    def _octahedral_data(F: FieldCtx, kind: str):
        K, sqrt2 = nth_root(F, F.element(2), 2)
        z8 = embed(primitive_root_of_unity(F, 8), K)
        z4 = z8 * z8
        sigma = Mat2(K.zero, z4, z4, K.zero)
        s = sqrt2.inverse()
        tau = Mat2(z8 ** 7 * s, z8 ** 7 * s, z8 ** 5 * s, z8 * s)
        gens = [Mat2.diag(z4, z4.inverse()), sigma, tau]
        if kind == KIND_E7:
            gens.append(Mat2.diag(z8, z8.inverse()))
        return K, 1, gens

    @staticmethod
    def _icosahedral_data(F: FieldCtx):
        z10 = primitive_root_of_unity(F, 10)
        z5 = z10 * z10
        phi = z5 + z5.inverse()
        s = (z5 ** 2 - z5 ** 3).inverse()
        rho = Mat2(phi * s, s, s, -phi * s)
        J = Mat2(F.zero, F.one, -F.one, F.zero)
        return F, 1, [Mat2.diag(z10, z10.inverse()), J, rho]

    @staticmethod
    def catalog_types(p: int, max_order: int, kinds: Optional[Sequence[str]] = None) -> List[ADEType]:
        """Every type admissible at p with |G| <= max_order, A first, then D, then E."""
        wanted = set(kinds) if kinds else {KIND_A, KIND_D, *E_KINDS}
        types: List[ADEType] = []
        if KIND_A in wanted:
            types.extend(ADEType(KIND_A, n) for n in range(1, max_order))
        if KIND_D in wanted and p >= 3:
            types.extend(ADEType(KIND_D, n) for n in range(4, (max_order + 8) // 4 + 1))
        for kind in E_KINDS:
            t = ADEType.exceptional(kind)
            if kind in wanted and p >= t.min_characteristic and E_ORDERS[kind] <= max_order:
                types.append(t)
        return types
