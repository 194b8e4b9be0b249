"""
Classification of subgroup schemes of SL2 into the A/D/E catalog and the
conjugators that carry a scheme onto its catalog representative.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.core.constants import E_BY_ORDER, KIND_A, KIND_D
from app.exceptions.classification_exceptions import (
    ClassificationException,
    UnsupportedNormalizationException,
)
from app.exceptions.custom_exceptions import NotLinearlyReductiveException
from app.models.field import build_field, common_field, embed, ext_degree_for_root, nth_root, primitive_root_of_unity
from app.models.matrix import GroupClosure, Mat2, close_group, element_order, is_cyclic, simultaneous_diagonalize
from app.models.polynomial import BivarPoly, WeightedPoly3
from app.models.scheme import ADEType, SubgroupScheme
from app.services.catalog import CatalogService
from app.services.invariants import InvariantEngine
from app.services.relations import ADEMatch, RelationService

logger = logging.getLogger(__name__)


@dataclass
class InvariantPresentation:
    generators: List[Tuple[int, BivarPoly]]
    relation: WeightedPoly3
    relation_degree: int
    ade: ADEType
    match: ADEMatch
    hilbert: List[int] = field(default_factory=list)
    expected_hilbert: List[int] = field(default_factory=list)

    @property
    def degrees(self) -> List[int]:
        return [d for d, _ in self.generators]


class ClassificationService:
    @staticmethod
    def classify(G: SubgroupScheme) -> ADEType:
        """ADE type of a valid scheme."""
        G.ensure_valid()
        order = G.order
        if order < 2:
            raise ClassificationException("the trivial scheme has no ADE type")
        if G.is_abelian_scheme():
            t = ADEType(KIND_A, order - 1)
        elif G.is_reduced:
            t = ClassificationService.classify_reduced(G.reduced_part)
        else:
            if G.p < 3:
                raise ClassificationException(
                    f"non-abelian scheme with connected part mu_{G.p_e} cannot exist at p = {G.p}"
                )
            if (order + 8) % 4:
                raise ClassificationException(f"|G| = {order} is not of the form 4n - 8")
            t = ADEType(KIND_D, (order + 8) // 4)
        logger.info(f"Classified scheme {G.describe()} as {t.label}")
        return t

    @staticmethod
    def classify_reduced(H: GroupClosure) -> ADEType:
        """ADE type of a finite reduced subgroup of SL2 of order prime to p."""
        N = H.order
        if N % H.ctx.p == 0:
            raise NotLinearlyReductiveException(f"|H| = {N} is divisible by p = {H.ctx.p}")
        if N == 1:
            raise ClassificationException("the trivial group has no ADE type")
        if is_cyclic(H):
            return ADEType(KIND_A, N - 1)

        orders: Dict[Tuple, int] = {g.key: element_order(g) for g in H.elements}
        involutions = sum(1 for o in orders.values() if o == 2)
        if N % 4 == 0 and involutions == 1 and any(o == N // 2 for o in orders.values()):
            return ADEType(KIND_D, (N + 8) // 4)
        if N in E_BY_ORDER:
            return ADEType.exceptional(E_BY_ORDER[N])
        raise ClassificationException(f"group of order {N} matches no catalog type")

    @staticmethod
    def normalize_conjugator(G: SubgroupScheme) -> Tuple[Mat2, SubgroupScheme]:
        """T with G conjugated by T equal to the catalog scheme of the same type."""
        t = ClassificationService.classify(G)
        if t.kind == KIND_A:
            T = simultaneous_diagonalize(G.reduced_part)
        elif t.kind == KIND_D:
            T = ClassificationService._dihedral_conjugator(G)
        else:
            raise UnsupportedNormalizationException(f"no conjugator is computed for type {t.label}")

        conjugated = G.conjugate(T)
        catalog = CatalogService.make_catalog(t, G.p)
        if not conjugated.same_as(catalog):
            raise ClassificationException(f"conjugation by {T.text()} does not reach the catalog {t.label}")
        logger.info(f"Normalized {t.label} scheme with T = {T.text()}")
        return T, conjugated

    @staticmethod
    def _dihedral_conjugator(G: SubgroupScheme) -> Mat2:
        H = G.reduced_part
        T1 = Mat2.identity(G.ctx)
        anti = next((g for g in H.elements if g.is_antidiagonal()), None)
        if anti is None:
            if G.r >= 3:
                raise ClassificationException("no antidiagonal element normalizes the diagonal torus")
            half = H.order // 2
            c = next((g for g in H.elements if element_order(g) == half), None)
            if c is None:
                raise ClassificationException("no cyclic subgroup of index 2")
            T1 = simultaneous_diagonalize(close_group([c]))
            H = G.conjugate(T1).reduced_part
            anti = next((g for g in H.elements if g.is_antidiagonal()), None)
            if anti is None:
                raise ClassificationException("no antidiagonal element after diagonalizing the cyclic part")

        K = common_field(anti.ctx, build_field(G.p, ext_degree_for_root(G.p, 8)))
        z8 = primitive_root_of_unity(K, 8)
        K, root_b = nth_root(K, embed(anti.b, K), 2)
        z8 = embed(z8, K)
        S = Mat2.diag(root_b.inverse() * z8, root_b * z8.inverse())
        return S * T1.embed(K)

    @staticmethod
    def present(G: SubgroupScheme, dmax: Optional[int] = None, hilbert_dmax: Optional[int] = None) -> InvariantPresentation:
        """Generators, relation and normal form of the invariant ring."""
        gens = InvariantEngine.minimal_generators(G, dmax)
        e = RelationService.relation_degree(gens, 2 * max(d for d, _ in gens))
        relation = RelationService.find_relation(gens, e)
        match = RelationService.normalize_ADE(relation)
        presentation = InvariantPresentation(
            generators=gens,
            relation=relation,
            relation_degree=e,
            ade=match.ade,
            match=match,
        )
        if hilbert_dmax is not None:
            presentation.hilbert = InvariantEngine.hilbert(G, hilbert_dmax)
            presentation.expected_hilbert = InvariantEngine.expected_hilbert(match.ade, hilbert_dmax)
        return presentation
