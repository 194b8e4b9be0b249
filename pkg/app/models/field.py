"""
Exact arithmetic in the finite fields F_{p^k}.

Every field is built from its canonical modulus: the monic irreducible
polynomial of degree k over F_p with the least coefficient code
c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Elements carry their context and
arithmetic between different contexts is refused.
"""
from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from sympy import factorint, isprime, primefactors
from sympy.ntheory import n_order
from sympy.ntheory.modular import crt

from app.exceptions.custom_exceptions import (
    EmbeddingException,
    FieldMismatchException,
    FieldTooSmallException,
    NotCoprimeException,
    NotPrimeException,
    ValidationException,
)
from app.middleware.metrics_middleware import FIELD_CONSTRUCTIONS_TOTAL

logger = logging.getLogger(__name__)

Coeffs = Tuple[int, ...]


# Polynomials over F_p are coefficient lists, constant term first.

def _trim(f: List[int]) -> List[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_sub(f: Sequence[int], g: Sequence[int], p: int) -> List[int]:
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mod(f: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    f = _trim([c % p for c in f])
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(f) - 1 >= dm and f:
        shift = len(f) - 1 - dm
        c = (f[-1] * inv_lead) % p
        for i, m in enumerate(mod):
            f[shift + i] = (f[shift + i] - c * m) % p
        _trim(f)
    return f


def _poly_mulmod(f: Sequence[int], g: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _poly_mod(out, mod, p)


def _poly_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> List[int]:
    result: List[int] = [1]
    base = _poly_mod(base, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(f: Sequence[int], g: Sequence[int], p: int) -> List[int]:
    a, b = _trim(list(f)), _trim(list(g))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    k = len(modulus) - 1
    if k <= 1:
        return k == 1
    x = [0, 1]
    frob = {0: x}
    h: List[int] = x
    for i in range(1, k + 1):
        h = _poly_powmod(h, p, modulus, p)
        frob[i] = h
    if _poly_sub(frob[k], x, p):
        return False
    for q in primefactors(k):
        g = _poly_gcd(_poly_sub(frob[k // q], x, p), modulus, p)
        if len(g) > 1:
            return False
    return True


def _digits(code: int, p: int, k: int) -> Coeffs:
    out = []
    for _ in range(k):
        code, c = divmod(code, p)
        out.append(c)
    return tuple(out)


def canonical_modulus(p: int, k: int) -> Coeffs:
    """Least-code monic irreducible polynomial of degree k, leading 1 included."""
    for code in range(p ** k):
        candidate = list(_digits(code, p, k)) + [1]
        if is_irreducible(candidate, p):
            return tuple(candidate)
    raise ValidationException(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldCtx:
    p: int
    k: int
    modulus: Coeffs
    factors: Tuple[Tuple[int, int], ...] = field(default=(), compare=False, repr=False)
    reduction: Tuple[Coeffs, ...] = field(default=(), compare=False, repr=False)
    generator_coeffs: Coeffs = field(default=(), compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.k)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, (1,) + (0,) * (self.k - 1))

    @property
    def generator(self) -> "FieldElem":
        return FieldElem(self, self.generator_coeffs)

    def element(self, value: Union[int, Sequence[int], "FieldElem"]) -> "FieldElem":
        """Integers denote prime-field elements; sequences are coefficient lists."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise FieldMismatchException()
            return value
        if isinstance(value, int):
            return FieldElem(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            raise ValidationException(
                f"coefficient list of length {len(coeffs)} does not fit F_{self.p}^{self.k}"
            )
        return FieldElem(self, tuple(coeffs) + (0,) * (self.k - len(coeffs)))

    def from_code(self, code: int) -> "FieldElem":
        return FieldElem(self, _digits(code, self.p, self.k))

    def elements(self) -> Iterator["FieldElem"]:
        for code in range(self.order):
            yield self.from_code(code)

    def describe(self) -> str:
        return f"F_{self.p}^{self.k} mod {list(self.modulus)}"

    # Raw coefficient arithmetic

    def _add(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a: Coeffs) -> Coeffs:
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        res = prod[:k]
        for j in range(k, 2 * k - 1):
            c = prod[j] % p
            if c:
                red = self.reduction[j - k]
                for i in range(k):
                    res[i] += c * red[i]
        return tuple(x % p for x in res)

    def _pow(self, a: Coeffs, e: int) -> Coeffs:
        if self.k == 1:
            return (pow(a[0], e, self.p),)
        result = (1,) + (0,) * (self.k - 1)
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result


class FieldElem:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other: Union[int, "FieldElem"]) -> "FieldElem":
        if isinstance(other, int):
            return self.ctx.element(other)
        if other.ctx != self.ctx:
            raise FieldMismatchException(
                f"cannot combine elements of {self.ctx.describe()} and {other.ctx.describe()}"
            )
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx._sub(other.coeffs, self.coeffs))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx._neg(self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElem(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FieldElem(self.ctx, self.ctx._pow(self.coeffs, e))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.k, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldElem({self.text()} in F_{self.ctx.p}^{self.ctx.k})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    @property
    def code(self) -> int:
        p = self.ctx.p
        return sum(c * p ** i for i, c in enumerate(self.coeffs))

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElem(self.ctx, self.ctx._pow(self.coeffs, self.ctx.order - 2))

    def frobenius(self) -> "FieldElem":
        return self ** self.ctx.p

    def order(self) -> int:
        """Multiplicative order."""
        if self.is_zero():
            raise ValidationException("zero has no multiplicative order")
        o = self.ctx.order - 1
        for prime, exp in self.ctx.factors:
            for _ in range(exp):
                if (self ** (o // prime)).is_one():
                    o //= prime
                else:
                    break
        return o

    def literal(self) -> Union[int, List[int]]:
        """Canonical encoding: an integer in a prime field, else the coefficient list."""
        if self.ctx.k == 1:
            return self.coeffs[0]
        return list(self.coeffs)

    def text(self) -> str:
        if self.ctx.k == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def _reduction_table(modulus: Coeffs, p: int) -> Tuple[Coeffs, ...]:
    k = len(modulus) - 1
    if k == 1:
        return ()
    table = []
    current = [(-c) % p for c in modulus[:k]]  # x^k
    table.append(tuple(current))
    for _ in range(k, 2 * k - 2):
        top = current[-1]
        shifted = [0] + current[:-1]
        current = [(shifted[i] - top * modulus[i]) % p for i in range(k)]
        table.append(tuple(current))
    return tuple(table)


def ext_degree_for_root(p: int, r: int) -> int:
    """Least k with the prime-to-p part of r dividing p^k - 1."""
    if r < 1:
        raise ValidationException(f"r must be positive, got {r}")
    while r % p == 0:
        r //= p
    if r == 1:
        return 1
    return int(n_order(p % r, r))


@lru_cache(maxsize=None)
def build_field(p: int, k: int) -> FieldCtx:
    if not isprime(p):
        raise NotPrimeException(p)
    if k < 1:
        raise ValidationException(f"extension degree must be >= 1, got {k}")

    modulus = canonical_modulus(p, k)
    q = p ** k
    factors = tuple(sorted(factorint(q - 1).items()))
    skeleton = FieldCtx(p, k, modulus, factors, _reduction_table(modulus, p))

    generator: Coeffs = ()
    for code in range(1, q):
        candidate = skeleton.from_code(code)
        if all(not (candidate ** ((q - 1) // prime)).is_one() for prime, _ in factors):
            generator = candidate.coeffs
            break

    FIELD_CONSTRUCTIONS_TOTAL.inc()
    logger.info(f"Built F_{p}^{k} with modulus {list(modulus)}")
    return FieldCtx(p, k, modulus, factors, skeleton.reduction, generator)


def common_field(*ctxs: FieldCtx) -> FieldCtx:
    """Least field containing all of the given ones."""
    primes = {ctx.p for ctx in ctxs}
    if len(primes) != 1:
        raise FieldMismatchException("fields of different characteristic have no common extension")
    k = math.lcm(*(ctx.k for ctx in ctxs))
    return build_field(primes.pop(), k)


def primitive_root_of_unity(F: FieldCtx, r: int) -> FieldElem:
    if r < 1:
        raise ValidationException(f"r must be positive, got {r}")
    if r % F.p == 0:
        raise NotCoprimeException(r, F.p)
    if (F.order - 1) % r != 0:
        raise FieldTooSmallException(r, F.p, F.k)
    return F.generator ** ((F.order - 1) // r)


def _baby_giant(gamma: FieldElem, h: FieldElem, n: int) -> int:
    """Solve gamma^t = h for gamma of order n."""
    m = math.isqrt(n) + 1
    table = {}
    acc = gamma.ctx.one
    for j in range(m):
        table.setdefault(acc.coeffs, j)
        acc = acc * gamma
    factor = gamma ** (-m)
    y = h
    for i in range(m + 1):
        j = table.get(y.coeffs)
        if j is not None:
            return (i * m + j) % n
        y = y * factor
    raise ValidationException("element is not in the cyclic subgroup")


def discrete_log(x: FieldElem) -> int:
    """Logarithm to the base of the canonical generator (Pohlig-Hellman)."""
    if x.is_zero():
        raise ValidationException("zero has no logarithm")
    F = x.ctx
    Q = F.order - 1
    if Q == 1:
        return 0
    g = F.generator
    residues, moduli = [], []
    for prime, exp in F.factors:
        pe = prime ** exp
        g_l = g ** (Q // pe)
        x_l = x ** (Q // pe)
        gamma = g_l ** (pe // prime)
        d = 0
        for i in range(exp):
            h = (g_l ** (-d) * x_l) ** (pe // prime ** (i + 1))
            d += _baby_giant(gamma, h, prime) * prime ** i
        residues.append(d)
        moduli.append(pe)
    return int(crt(moduli, residues)[0]) % Q


# Polynomials over an extension field: lists of raw coefficient tuples, constant term first.

def _xtrim(f: List[Coeffs]) -> List[Coeffs]:
    while f and not any(f[-1]):
        f.pop()
    return f


def _xrem(g: Sequence[Coeffs], f: Sequence[Coeffs], K: FieldCtx) -> List[Coeffs]:
    n = len(f) - 1
    g = _xtrim(list(g))
    inv_lead = f[-1] if f[-1] == K.one.coeffs else K._pow(f[-1], K.order - 2)
    while len(g) - 1 >= n and g:
        c = K._mul(g[-1], inv_lead)
        shift = len(g) - 1 - n
        for j in range(n + 1):
            g[shift + j] = K._sub(g[shift + j], K._mul(c, f[j]))
        _xtrim(g)
    return g


def _xmulmod(a: Sequence[Coeffs], b: Sequence[Coeffs], f: Sequence[Coeffs], K: FieldCtx) -> List[Coeffs]:
    if not a or not b:
        return []
    out = [K.zero.coeffs] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if any(x):
            for j, y in enumerate(b):
                out[i + j] = K._add(out[i + j], K._mul(x, y))
    return _xrem(out, f, K)


def _xpowmod(base: Sequence[Coeffs], e: int, f: Sequence[Coeffs], K: FieldCtx) -> List[Coeffs]:
    result: List[Coeffs] = [K.one.coeffs]
    base = _xrem(base, f, K)
    while e:
        if e & 1:
            result = _xmulmod(result, base, f, K)
        base = _xmulmod(base, base, f, K)
        e >>= 1
    return result


def _xmonic_gcd(a: Sequence[Coeffs], b: Sequence[Coeffs], K: FieldCtx) -> List[Coeffs]:
    a, b = _xtrim(list(a)), _xtrim(list(b))
    while b:
        a, b = b, _xrem(a, b, K)
    inv_lead = K._pow(a[-1], K.order - 2)
    return [K._mul(c, inv_lead) for c in a]


def _xadd(a: Sequence[Coeffs], b: Sequence[Coeffs], K: FieldCtx) -> List[Coeffs]:
    zero = K.zero.coeffs
    n = max(len(a), len(b))
    return _xtrim([K._add(a[i] if i < len(a) else zero, b[i] if i < len(b) else zero) for i in range(n)])


def _split_off_root(f: List[Coeffs], K: FieldCtx, sub_degree: int) -> FieldElem:
    """A root of f, monic, squarefree and split over the subfield of K of degree sub_degree.

    Equal-degree splitting with random shifts drawn from that subfield."""
    sub_order = K.p ** sub_degree
    rng = random.Random(sub_order)
    h = K._pow(K.generator.coeffs, (K.order - 1) // (sub_order - 1))
    one = K.one.coeffs
    while len(f) > 2:
        a = K._pow(h, rng.randrange(sub_order - 1))
        if K.p == 2:
            t = _xrem([K.zero.coeffs, a], f, K)
            split = t
            for _ in range(sub_degree - 1):
                t = _xmulmod(t, t, f, K)
                split = _xadd(split, t, K)
        else:
            split = _xadd(_xpowmod([a, one], (sub_order - 1) // 2, f, K), [K._neg(one)], K)
        if not split:
            continue
        d = _xmonic_gcd(f, split, K)
        if 1 < len(d) < len(f):
            f = d
    return FieldElem(K, K._neg(f[0]))


@lru_cache(maxsize=None)
def _embedding_image(src: FieldCtx, dst: FieldCtx) -> FieldElem:
    """Least-code root in dst of the modulus of src."""
    modulus = [dst.element(c).coeffs for c in src.modulus]
    theta = _split_off_root(modulus, dst, src.k)
    acc = dst.zero
    for c in reversed(src.modulus):
        acc = acc * theta + c
    if not acc.is_zero():
        raise EmbeddingException(f"{src.describe()} does not embed in {dst.describe()}")
    conjugates = [theta]
    for _ in range(src.k - 1):
        conjugates.append(conjugates[-1].frobenius())
    return min(conjugates, key=lambda e: e.code)


def embed(src: FieldElem, dst: FieldCtx) -> FieldElem:
    """Canonical embedding F_{p^k} -> F_{p^{km}}."""
    ctx = src.ctx
    if ctx == dst:
        return src
    if ctx.p != dst.p:
        raise EmbeddingException(f"characteristic {ctx.p} does not embed in characteristic {dst.p}")
    if dst.k % ctx.k != 0:
        raise EmbeddingException(f"{ctx.describe()} is not a subfield of {dst.describe()}")
    if ctx.k == 1:
        return dst.element(src.coeffs[0])
    theta = _embedding_image(ctx, dst)
    acc = dst.zero
    for c in reversed(src.coeffs):
        acc = acc * theta + c
    return acc


def nth_root(F: FieldCtx, a: FieldElem, n: int) -> Tuple[FieldCtx, FieldElem]:
    """Least-code n-th root of a in the least extension of F that has one."""
    a = F.element(a)
    if a.is_zero():
        raise ValidationException("nth_root requires a nonzero element")
    if n < 1:
        raise ValidationException(f"root index must be positive, got {n}")
    if n == 1:
        return F, a

    m = 1
    while True:
        Q = F.order ** m - 1
        if (a ** (Q // math.gcd(n, Q))).is_one():
            break
        m += 1

    K = build_field(F.p, F.k * m) if m > 1 else F
    target = embed(a, K)
    Q = K.order - 1
    g0 = math.gcd(n, Q)
    L = discrete_log(target)
    M = (L // g0) * pow(n // g0, -1, Q // g0) % (Q // g0) if Q // g0 > 1 else 0
    base = K.generator ** M
    zeta = K.generator ** (Q // g0)
    roots = []
    acc = base
    for _ in range(g0):
        roots.append(acc)
        acc = acc * zeta
    root = min(roots, key=lambda e: e.code)
    logger.debug(f"nth_root: {n}th root of {a.text()} found in {K.describe()}")
    return K, root
