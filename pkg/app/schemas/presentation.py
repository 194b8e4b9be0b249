from typing import List, Optional

from pydantic import BaseModel

from app.schemas.scheme import FieldDescription


class GeneratorOut(BaseModel):
    name: str
    degree: int
    polynomial: str


class NormalizationOut(BaseModel):
    type: str
    permutation: List[int]
    shifts: List[str]
    scaling: List[str]
    factor: str
    normal_form: str
    field: FieldDescription


class PresentationReport(BaseModel):
    tag: str
    p: int
    field: FieldDescription
    generators: List[GeneratorOut]
    degrees: List[int]
    relation_degree: int
    relation: str
    normalization: NormalizationOut
    hilbert: List[int] = []
    expected_hilbert: List[int] = []
    hilbert_matches: Optional[bool] = None


class RelationCheck(BaseModel):
    relation: str
    status: str
    constant: Optional[str] = None


class VerifyReport(BaseModel):
    tag: str
    p: int
    field: FieldDescription
    generators: List[GeneratorOut]
    checks: List[RelationCheck]
    normal_form: Optional[str] = None
    passed: bool

