"""Seeded round trips: conjugate a catalog scheme at random and classify it back."""
import logging
import random
from dataclasses import dataclass
from typing import Callable, List, Optional

from app.core.constants import KIND_A, KIND_D
from app.exceptions.custom_exceptions import AlgebraException
from app.models.field import FieldCtx, FieldElem
from app.models.matrix import Mat2
from app.models.scheme import ADEType, SubgroupScheme
from app.schemas.scheme import SelftestCase
from app.services.catalog import CatalogService
from app.services.classification import ClassificationService

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RoundTrip:
    name: str
    ade: ADEType
    p: int
    reduced: bool = False

    def scheme(self) -> SubgroupScheme:
        G = CatalogService.make_catalog(self.ade, self.p)
        if self.reduced:
            return SubgroupScheme(G.ctx, 1, G.reduced_generators)
        return G


ROUND_TRIPS = (
    RoundTrip("A2 p=5", ADEType(KIND_A, 2), 5),
    RoundTrip("A2 p=3 non-reduced", ADEType(KIND_A, 2), 3),
    RoundTrip("A3 p=5 reduced", ADEType(KIND_A, 3), 5, reduced=True),
    RoundTrip("D4 p=5", ADEType(KIND_D, 4), 5),
    RoundTrip("D4 p=5 reduced", ADEType(KIND_D, 4), 5, reduced=True),
    RoundTrip("D5 p=3 non-reduced", ADEType(KIND_D, 5), 3),
    RoundTrip("E6 p=5", ADEType.exceptional("E6"), 5),
    RoundTrip("E7 p=5", ADEType.exceptional("E7"), 5),
    RoundTrip("E8 p=7", ADEType.exceptional("E8"), 7),
)


def _nonzero(F: FieldCtx, rng: random.Random) -> FieldElem:
    return F.from_code(rng.randrange(1, F.order))


def random_sl2(F: FieldCtx, rng: random.Random) -> Mat2:
    """Uniform a != 0 and b, c; d is forced by det = 1."""
    a = _nonzero(F, rng)
    b = F.from_code(rng.randrange(F.order))
    c = F.from_code(rng.randrange(F.order))
    return Mat2(a, b, c, (F.one + b * c) / a)


def random_torus_normalizer(F: FieldCtx, rng: random.Random) -> Mat2:
    t = _nonzero(F, rng)
    if rng.random() < 0.5:
        return Mat2.diag(t, t.inverse())
    return Mat2(F.zero, t, -t.inverse(), F.zero)


class SelftestService:
    @staticmethod
    def conjugators(G: SubgroupScheme, rng: random.Random) -> Callable[[], Mat2]:
        """Arbitrary SL2 elements, or torus normalizers when the scheme has r >= 3."""
        if G.r >= 3:
            return lambda: random_torus_normalizer(G.ctx, rng)
        return lambda: random_sl2(G.ctx, rng)

    @staticmethod
    def run_case(case: RoundTrip, trials: int, rng: random.Random) -> SelftestCase:
        G = case.scheme()
        draw = SelftestService.conjugators(G, rng)
        normalize = case.ade.kind in (KIND_A, KIND_D)
        recovered = normalized = 0
        for _ in range(trials):
            conjugated = G.conjugate(draw())
            try:
                if ClassificationService.classify(conjugated) == case.ade:
                    recovered += 1
                if normalize:
                    ClassificationService.normalize_conjugator(conjugated)
                    normalized += 1
            except AlgebraException as exc:
                logger.warning(f"{case.name}: round trip failed: {exc.detail}")
        logger.info(f"{case.name}: {recovered}/{trials} classified back")
        return SelftestCase(
            name=case.name,
            p=case.p,
            trials=trials,
            recovered=recovered,
            normalized=normalized if normalize else None,
        )

    @staticmethod
    def run(seed: int, trials: int, cases: Optional[List[RoundTrip]] = None) -> List[SelftestCase]:
        rng = random.Random(seed)
        return [SelftestService.run_case(case, trials, rng) for case in (cases or ROUND_TRIPS)]
