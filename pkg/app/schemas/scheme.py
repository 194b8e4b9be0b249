from typing import List, Optional

from pydantic import BaseModel

from app.models.field import FieldCtx


class FieldDescription(BaseModel):
    p: int
    k: int
    modulus: List[int]

    @classmethod
    def from_ctx(cls, ctx: FieldCtx) -> "FieldDescription":
        return cls(p=ctx.p, k=ctx.k, modulus=list(ctx.modulus))


class CatalogEntry(BaseModel):
    tag: str
    type: str
    p: int
    r: int
    order: int
    connected_order: int
    reduced_order: Optional[int] = None
    field_degree: int
    field: Optional[FieldDescription] = None
    generators: Optional[List[str]] = None
    degrees: List[int]
    relation: str


class ClassificationReport(BaseModel):
    tag: str
    type: str
    p: int
    order: int
    connected_order: int
    reduced_order: int
    abelian: bool
    small: bool
    field: FieldDescription
    conjugator: Optional[str] = None
    normalized: Optional[str] = None
    note: Optional[str] = None


class SelftestCase(BaseModel):
    name: str
    p: int
    trials: int
    recovered: int
    normalized: Optional[int] = None


class SelftestReport(BaseModel):
    seed: int
    cases: List[SelftestCase]
    passed: bool
