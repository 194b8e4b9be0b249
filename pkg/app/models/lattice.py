"""
Integer matrices, Smith normal form and finitely generated abelian groups.

Entries are Python integers, so there is no silent wraparound; an optional
magnitude cap (``INT_MAGNITUDE_CAP``) turns runaway growth into an error.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from app.core.settings import settings
from app.exceptions.custom_exceptions import OverflowCapException, ValidationException

logger = logging.getLogger(__name__)


class IntMat:
    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValidationException("integer matrix must have at least one row and one column")
        if any(len(row) != len(rows[0]) for row in rows):
            raise ValidationException("integer matrix rows must have equal length")
        self.entries: Tuple[Tuple[int, ...], ...] = rows

    @classmethod
    def identity(cls, n: int) -> "IntMat":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def __matmul__(self, other: "IntMat") -> "IntMat":
        if self.cols != other.rows:
            raise ValidationException(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = list(zip(*other.entries))
        return IntMat([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMat):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMat({self.to_list()})"

    def to_list(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, row in enumerate(self.entries) for j, x in enumerate(row) if i != j)

    def diagonal(self) -> List[int]:
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def max_magnitude(self) -> int:
        return max(abs(x) for row in self.entries for x in row)

    def text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def determinant(A: IntMat) -> int:
    """Fraction-free (Bareiss) determinant of a square matrix."""
    if A.rows != A.cols:
        raise ValidationException("determinant needs a square matrix")
    M = A.to_list()
    n = A.rows
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _check_cap(M: List[List[int]], cap: Optional[int]) -> None:
    if cap is not None and any(abs(x) > cap for row in M for x in row):
        raise OverflowCapException(cap)


def smith_normal_form(A: IntMat, cap: Optional[int] = None) -> Tuple[IntMat, IntMat, IntMat]:
    """
    Return (U, D, V) with U·A·V = D.

    U and V are unimodular, D is diagonal with nonnegative entries
    d_1 | d_2 | ... Pivots are the least absolute nonzero entry of the
    remaining block, ties broken row-major.
    """
    cap = cap if cap is not None else settings.INT_MAGNITUDE_CAP
    m, n = A.rows, A.cols
    D = A.to_list()
    _check_cap(D, cap)
    U = IntMat.identity(m).to_list()
    V = IntMat.identity(n).to_list()

    def row_axpy(dst: int, src: int, factor: int) -> None:
        # row dst += factor * row src
        for M in (D, U):
            M[dst] = [x + factor * y for x, y in zip(M[dst], M[src])]

    def col_axpy(dst: int, src: int, factor: int) -> None:
        for M in (D, V):
            for row in M:
                row[dst] += factor * row[src]

    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        D[t], D[i] = D[i], D[t]
        U[t], U[i] = U[i], U[t]
        for M in (D, V):
            for row in M:
                row[t], row[j] = row[j], row[t]

        d = D[t][t]
        for i in range(t + 1, m):
            if D[i][t]:
                row_axpy(i, t, -(D[i][t] // d))
        for j in range(t + 1, n):
            if D[t][j]:
                col_axpy(j, t, -(D[t][j] // d))
        _check_cap(D, cap)

        if any(D[i][t] for i in range(t + 1, m)) or any(D[t][j] for j in range(t + 1, n)):
            continue

        offender = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % d),
            None,
        )
        if offender is not None:
            row_axpy(t, offender, 1)
            continue
        t += 1

    for i in range(min(m, n)):
        if D[i][i] < 0:
            D[i] = [-x for x in D[i]]
            U[i] = [-x for x in U[i]]

    logger.debug(f"SNF of {m}x{n} matrix: diagonal {[D[i][i] for i in range(min(m, n))]}")
    return IntMat(U), IntMat(D), IntMat(V)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank x Z/d_1 x ... x Z/d_s with d_1 | d_2 | ... and every d_i >= 2."""

    rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValidationException("free rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValidationException("invariant factors must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValidationException(f"invariant factors {list(self.torsion)} do not form a divisibility chain")

    @property
    def order(self) -> Optional[int]:
        """Group order, or None for an infinite group."""
        if self.rank:
            return None
        return math.prod(self.torsion)

    @property
    def is_cyclic(self) -> bool:
        return self.rank + len(self.torsion) <= 1

    def text(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def invariant_factors(A: IntMat) -> List[int]:
    _, D, _ = smith_normal_form(A)
    return [d for d in D.diagonal() if d != 0]


def cokernel(A: IntMat) -> AbelianGroup:
    """Z^rows / im(A) in invariant-factor form."""
    _, D, _ = smith_normal_form(A)
    diag = D.diagonal()
    nonzero = [d for d in diag if d != 0]
    return AbelianGroup(rank=A.rows - len(nonzero), torsion=tuple(d for d in nonzero if d > 1))


def p_part_split(m: int, p: int) -> Tuple[int, int]:
    """Split m = p^e * m' with p not dividing m'."""
    if m < 1:
        raise ValidationException(f"expected a positive integer, got {m}")
    pe = 1
    while m % p == 0:
        m //= p
        pe *= p
    return pe, m


def char_group_of_mu(r: int) -> AbelianGroup:
    """Character group of mu_r; r = 0 gives Z, the characters of G_m."""
    if r < 0:
        raise ValidationException(f"r must be nonnegative, got {r}")
    return cokernel(IntMat([[r]]))
