"""Exact linear algebra over a finite field on dense vectors of FieldElem."""
from typing import List, Sequence, Tuple

from app.exceptions.custom_exceptions import ValidationException
from app.models.field import FieldCtx, FieldElem

Vector = List[FieldElem]


class LinearAlgebra:
    @staticmethod
    def rref(rows: Sequence[Sequence[FieldElem]], ncols: int) -> Tuple[List[Vector], List[int]]:
        """Reduced row-echelon form; pivots on the first nonzero column, least row index."""
        M = [list(row) for row in rows]
        pivots: List[int] = []
        r = 0
        for col in range(ncols):
            if r == len(M):
                break
            piv = next((i for i in range(r, len(M)) if not M[i][col].is_zero()), None)
            if piv is None:
                continue
            M[r], M[piv] = M[piv], M[r]
            inv = M[r][col].inverse()
            M[r] = [x * inv for x in M[r]]
            pivot_row = M[r]
            for i in range(len(M)):
                if i != r and not M[i][col].is_zero():
                    f = M[i][col]
                    M[i] = [x - f * y for x, y in zip(M[i], pivot_row)]
            pivots.append(col)
            r += 1
        return M[:r], pivots

    @staticmethod
    def rank(rows: Sequence[Sequence[FieldElem]], ncols: int) -> int:
        """Rank of a matrix given by rows."""
        return len(LinearAlgebra.rref(rows, ncols)[1])

    @staticmethod
    def kernel(rows: Sequence[Sequence[FieldElem]], ncols: int, ctx: FieldCtx) -> List[Vector]:
        """Basis of {x : A x = 0}, one vector per free column, free coordinate set to 1."""
        R, pivots = LinearAlgebra.rref(rows, ncols)
        pivot_set = set(pivots)
        basis = []
        for free in range(ncols):
            if free in pivot_set:
                continue
            x = [ctx.zero] * ncols
            x[free] = ctx.one
            for row, col in zip(R, pivots):
                x[col] = -row[free]
            basis.append(x)
        return basis

    @staticmethod
    def reduce(vector: Sequence[FieldElem], rref_rows: Sequence[Sequence[FieldElem]], pivots: Sequence[int]) -> Vector:
        """Remainder of a vector modulo the row space of an RREF basis."""
        v = list(vector)
        for row, col in zip(rref_rows, pivots):
            c = v[col]
            if not c.is_zero():
                v = [x - c * y for x, y in zip(v, row)]
        return v

    @staticmethod
    def is_zero(vector: Sequence[FieldElem]) -> bool:
        return all(x.is_zero() for x in vector)

    @staticmethod
    def convolve(f: Sequence[FieldElem], g: Sequence[FieldElem], ctx: FieldCtx) -> Vector:
        """Coefficients of a product of homogeneous polynomials in dense form."""
        out = [ctx.zero] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            if x.is_zero():
                continue
            for j, y in enumerate(g):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return out

    @staticmethod
    def transpose(columns: Sequence[Sequence[FieldElem]]) -> List[Vector]:
        if not columns:
            raise ValidationException("cannot transpose an empty matrix")
        return [list(row) for row in zip(*columns)]
