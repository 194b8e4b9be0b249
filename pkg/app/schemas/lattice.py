from typing import List

from pydantic import BaseModel


class SnfReport(BaseModel):
    input: List[List[int]]
    U: List[List[int]]
    D: List[List[int]]
    V: List[List[int]]
    invariant_factors: List[int]
    cokernel: str
