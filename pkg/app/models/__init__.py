from app.models.field import FieldCtx, FieldElem, build_field
from app.models.lattice import AbelianGroup, IntMat
from app.models.matrix import GroupClosure, Mat2
from app.models.polynomial import BivarPoly, WeightedPoly3
from app.models.scheme import ADEType, SubgroupScheme

__all__ = [
    "FieldCtx",
    "FieldElem",
    "build_field",
    "AbelianGroup",
    "IntMat",
    "GroupClosure",
    "Mat2",
    "BivarPoly",
    "WeightedPoly3",
    "ADEType",
    "SubgroupScheme",
]
