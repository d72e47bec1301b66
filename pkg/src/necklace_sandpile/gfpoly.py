"""Polynomials over F_p and the finite fields F_{p^n} built from them.

Polynomials are immutable :class:`Poly` objects holding a prime ``p`` and a
tuple of residues, lowest degree first.  A :class:`FieldCtx` fixes a monic
irreducible modulus of degree ``n`` and represents F_{p^n} as the quotient
ring F_p[x]/(modulus); its elements are :class:`FieldElem` coordinate vectors
in the power basis 1, x, ..., x^{n-1}.

Besides scalar arithmetic, a context can produce whole-field numpy tables
(Frobenius orbit ids, multiplication matrices, discrete exponentials).  These
are what make group computations at n = 16 run in seconds.

Text format used everywhere: ``x^4+x+1``; for p > 2 coefficients other than
one are written in front, ``2x^2+x+2``.  Zero is ``0``.

>>> f = parse_poly("x^4+x+1", 2)
>>> is_irreducible(f), is_normal(f), is_primitive(f)
(True, False, True)
>>> ctx = FieldCtx(2, 4, f)
>>> [str(minimal_polynomial(ctx.gen ** k)) for k in (1, 3, 5, 7)]
['x^4+x+1', 'x^4+x^3+x^2+x+1', 'x^2+x+1', 'x^4+x^3+1']
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Sequence

import numpy as np

from ._numtheory import factorint, totient

# Whole-field numpy tables are refused above this many elements.
MAX_TABLE_SIZE = 1 << 22

# enumerate_irreducible scans all monic candidates up to this many; above it
# the elements of F_{p^n} are grouped by minimal polynomial instead.
EXHAUSTIVE_LIMIT = 1 << 12


class Poly:
    """Polynomial over F_p with coefficients stored lowest degree first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int] = ()):
        if p < 2:
            raise ValueError(f"modulus must be a prime, got {p}")
        c = [int(a) % p for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, p: int) -> Poly:
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p: int, c: int) -> Poly:
        return cls(p, (c,))

    @classmethod
    def from_int(cls, p: int, k: int) -> Poly:
        """Inverse of :meth:`to_int`: base-p digits of ``k`` are the coefficients."""
        c = []
        while k:
            k, r = divmod(k, p)
            c.append(r)
        return cls(p, c)

    def to_int(self) -> int:
        k = 0
        for a in reversed(self.coeffs):
            k = k * self.p + a
        return k

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = pow(self.lead, -1, self.p)
        return Poly(self.p, [a * inv for a in self.coeffs])

    def _check(self, other) -> Poly:
        if isinstance(other, int):
            return Poly(self.p, (other,))
        if not isinstance(other, Poly):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"mismatched moduli {self.p} and {other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.p, [x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        inv = pow(other.lead, -1, p)
        quot = [0] * max(len(rem) - db, 0)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] * inv % p
            if c:
                quot[k - db] = c
                for j in range(db + 1):
                    rem[k - db + j] = (rem[k - db + j] - c * b[j]) % p
        return Poly(p, quot), Poly(p, rem[:db] if db > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly(self.p, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == Poly(self.p, (other,)).coeffs
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __lt__(self, other: Poly):
        return (self.degree, self.to_int()) < (other.degree, other.to_int())

    def __call__(self, value):
        """Evaluate by Horner's rule at an integer or a :class:`FieldElem`."""
        if isinstance(value, FieldElem):
            acc = value.ctx.zero
            for c in reversed(self.coeffs):
                acc = acc * value + value.ctx.scalar(c)
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * value + c) % self.p
        return acc

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.p}, {format_poly(self)!r})"


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = "x" if k == 1 else f"x^{k}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def parse_poly(text: str, p: int) -> Poly:
    """Parse the ``x^4+x+1`` text format.  Whitespace is ignored."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    for term in s.split("+"):
        m = _TERM.match(term)
        if not term or m is None or (not m.group(1) and not m.group(2)):
            raise ValueError(f"bad polynomial term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        k = 0 if not m.group(2) else int(m.group(3) or 1)
        coeffs[k] = coeffs.get(k, 0) + c
    top = max(coeffs)
    return Poly(p, [coeffs.get(k, 0) for k in range(top + 1)])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_powmod(a: Poly, e: int, m: Poly) -> Poly:
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly(a.p, (1,)) % m
    base = a % m
    while e:
        if e & 1:
            result = (result * base) % m
        base = (base * base) % m
        e >>= 1
    return result


# GF(2) polynomials packed into ints: bit k is the coefficient of x^k.

def _gf2_mulmod(a: int, b: int, m: int, dm: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> dm) & 1:
            a ^= m
    return r


def _gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _gf2_mod(a, b)
    return a


def _is_irreducible_gf2(m: int) -> bool:
    d = m.bit_length() - 1
    h = 2
    for _ in range(d // 2):
        h = _gf2_mulmod(h, h, m, d)
        if _gf2_gcd(m, h ^ 2) != 1:
            return False
    return True


def is_irreducible(f: Poly) -> bool:
    """Rabin-style test: gcd(f, x^{p^k} - x) = 1 for every k <= deg f / 2."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no factorization")
    d = f.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    if f.p == 2:
        return _is_irreducible_gf2(f.to_int())
    f = f.monic()
    x = Poly.x(f.p)
    h = x
    for _ in range(d // 2):
        h = poly_powmod(h, f.p, f)
        if poly_gcd(f, h - x).degree > 0:
            return False
    return True


def _monic_of_degree(p: int, n: int) -> Iterator[Poly]:
    lead = p ** n
    for k in range(lead, 2 * lead):
        yield Poly.from_int(p, k)


def enumerate_irreducible(p: int, n: int) -> list[Poly]:
    """All monic irreducible polynomials of degree ``n`` over F_p, sorted."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if p ** n <= EXHAUSTIVE_LIMIT or p ** n > MAX_TABLE_SIZE:
        return [f for f in _monic_of_degree(p, n) if is_irreducible(f)]
    ctx = FieldCtx(p, n)
    return sorted(minimal_polynomial(ctx.from_index(i)) for i in ctx.full_orbit_reps())


def _small_irreducible(p: int, n: int) -> Poly:
    for f in _monic_of_degree(p, n):
        if is_irreducible(f):
            return f
    raise AssertionError("every degree has an irreducible polynomial")


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [a * inv % p for a in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                k = m[i][c]
                m[i] = [(a - k * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def batched_full_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Batched test that each (n, n) matrix is invertible over F_p."""
    m = mats % p
    count, n = m.shape[0], m.shape[1]
    ok = np.ones(count, dtype=bool)
    inv = np.array([0] + [pow(a, -1, p) for a in range(1, p)], dtype=np.int64)
    rows = np.arange(count)
    for c in range(n):
        nz = m[:, c:, c] != 0
        ok &= nz.any(axis=1)
        piv = nz.argmax(axis=1) + c
        top = m[rows, c].copy()
        m[rows, c] = m[rows, piv]
        m[rows, piv] = top
        m[:, c] = (m[:, c] * inv[m[:, c, c]][:, None]) % p
        f = m[:, c + 1:, c]
        m[:, c + 1:] = (m[:, c + 1:] - f[:, :, None] * m[:, c][:, None, :]) % p
    return ok


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """F_{p^n} as F_p[x]/(modulus).

    With no modulus given, the smallest monic irreducible polynomial of
    degree n (ordered by its base-p integer encoding) is used.
    """

    p: int
    n: int
    modulus: Poly | None = None
    check: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"extension degree must be positive, got {self.n}")
        if self.modulus is None:
            object.__setattr__(self, "modulus", _small_irreducible(self.p, self.n))
        f = self.modulus
        if f.p != self.p or f.degree != self.n or not f.is_monic():
            raise ValueError(f"modulus {f} is not monic of degree {self.n} over F_{self.p}")
        if self.check and not is_irreducible(f):
            raise ValueError(f"modulus {f} is reducible")

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={self.modulus})"

    @property
    def order(self) -> int:
        return self.p ** self.n

    # -- scalar arithmetic on coordinate tuples -------------------------------

    @cached_property
    def _high_powers(self) -> list[tuple[int, ...]]:
        """Coordinates of x^n, ..., x^{2n-2}."""
        p, n = self.p, self.n
        tail = [(-a) % p for a in self.modulus.coeffs[:n]]
        rows = []
        cur = tail
        for _ in range(max(n - 1, 1)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(a + top * b) % p for a, b in zip(cur, tail)]
        return rows

    def _mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        p, n = self.p, self.n
        prod_ = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod_[i + j] += x * y
        out = prod_[:n]
        for k in range(n, 2 * n - 1):
            c = prod_[k] % p
            if c:
                row = self._high_powers[k - n]
                for i in range(n):
                    out[i] += c * row[i]
        return tuple(v % p for v in out)

    def element(self, coords: Sequence[int]) -> FieldElem:
        c = tuple(int(v) % self.p for v in coords)
        if len(c) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(c)}")
        return FieldElem(self, c)

    def from_poly(self, f: Poly) -> FieldElem:
        r = f % self.modulus
        return FieldElem(self, r.coeffs + (0,) * (self.n - len(r.coeffs)))

    def from_index(self, k: int) -> FieldElem:
        c = []
        for _ in range(self.n):
            k, r = divmod(int(k), self.p)
            c.append(r)
        return FieldElem(self, tuple(c))

    def scalar(self, c: int) -> FieldElem:
        return FieldElem(self, (c % self.p,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, (0,) * self.n)

    @property
    def one(self) -> FieldElem:
        return self.scalar(1)

    @property
    def gen(self) -> FieldElem:
        """The class of x."""
        return self.from_poly(Poly.x(self.p))

    def elements(self) -> Iterator[FieldElem]:
        for c in product(range(self.p), repeat=self.n):
            yield FieldElem(self, c[::-1])

    # -- whole-field numpy tables ---------------------------------------------

    def _require_table(self):
        if self.order > MAX_TABLE_SIZE:
            raise MemoryError(f"F_{self.p}^{self.n} exceeds the table limit {MAX_TABLE_SIZE}")

    @cached_property
    def weights(self) -> np.ndarray:
        return self.p ** np.arange(self.n, dtype=np.int64)

    @cached_property
    def all_coords(self) -> np.ndarray:
        """(q, n) array; row k holds the coordinates of element index k."""
        self._require_table()
        idx = np.arange(self.order, dtype=np.int64)
        return (idx[:, None] // self.weights[None, :]) % self.p

    def linear_matrix(self, images: Sequence[FieldElem]) -> np.ndarray:
        """Matrix M with coords(v) @ M = coords of the linear map sending x^i to images[i]."""
        return np.array([e.coords for e in images], dtype=np.int64).reshape(self.n, self.n)

    @cached_property
    def frobenius_matrix(self) -> np.ndarray:
        x = self.gen
        return self.linear_matrix([(x ** i) ** self.p for i in range(self.n)])

    def mul_matrix(self, a: FieldElem) -> np.ndarray:
        x = self.gen
        return self.linear_matrix([a * x ** i for i in range(self.n)])

    @cached_property
    def orbit_table(self) -> tuple[np.ndarray, np.ndarray]:
        """(canon, length): smallest index in each element's Frobenius orbit and the orbit length."""
        cur = self.all_coords
        start = cur @ self.weights
        canon = start.copy()
        length = np.zeros(self.order, dtype=np.int64)
        for k in range(1, self.n + 1):
            cur = (cur @ self.frobenius_matrix) % self.p
            idx = cur @ self.weights
            np.minimum(canon, idx, out=canon)
            length[(length == 0) & (idx == start)] = k
        return canon, length

    def full_orbit_reps(self) -> np.ndarray:
        """Sorted indices of the minimal elements of all length-n Frobenius orbits."""
        canon, length = self.orbit_table
        reps = np.arange(self.order, dtype=np.int64)
        return reps[(canon == reps) & (length == self.n)]

    def exp_table(self, g: FieldElem) -> np.ndarray:
        """Indices of g^0, g^1, ..., g^{q-2}."""
        self._require_table()
        m = self.mul_matrix(g)
        out = np.empty(self.order - 1, dtype=np.int64)
        cur = np.array(self.one.coords, dtype=np.int64)
        w = self.weights
        for k in range(self.order - 1):
            out[k] = cur @ w
            cur = (cur @ m) % self.p
        return out


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    coords: tuple[int, ...]

    def _other(self, other) -> FieldElem:
        if isinstance(other, int):
            return self.ctx.scalar(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ValueError("elements of different field contexts")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((-a) % p for a in self.coords))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.ctx, self.ctx._mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero():
                raise ZeroDivisionError("zero has no inverse")
            e %= self.ctx.order - 1
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElem:
        return self ** -1

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def index(self) -> int:
        k = 0
        for a in reversed(self.coords):
            k = k * self.ctx.p + a
        return k

    def frobenius(self) -> FieldElem:
        return self ** self.ctx.p

    def as_poly(self) -> Poly:
        return Poly(self.ctx.p, self.coords)

    def __repr__(self):
        return f"FieldElem({format_poly(self.as_poly())} mod {self.ctx.modulus})"


def frobenius_orbit(a: FieldElem) -> list[FieldElem]:
    """[a, a^p, a^{p^2}, ...] up to the first repetition."""
    orbit = [a]
    b = a.frobenius()
    while b != a:
        orbit.append(b)
        b = b.frobenius()
    return orbit


def minimal_polynomial(a: FieldElem) -> Poly:
    """Product of (x - b) over the Frobenius orbit of ``a``."""
    ctx = a.ctx
    coeffs = [ctx.one]  # polynomial over F_{p^n}, lowest degree first
    for b in frobenius_orbit(a):
        nb = -b
        shifted = [ctx.zero] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] = shifted[i] + c * nb
        coeffs = shifted
    out = []
    for c in coeffs:
        if any(c.coords[1:]):
            raise AssertionError(f"minimal polynomial coefficient {c} outside F_{ctx.p}")
        out.append(c.coords[0])
    return Poly(ctx.p, out)


def multiplicative_order(a: FieldElem) -> int:
    if a.is_zero():
        raise ValueError("zero has no multiplicative order")
    order = a.ctx.order - 1
    for r, e in factorint(order).items():
        for _ in range(e):
            if (a ** (order // r)) == a.ctx.one:
                order //= r
            else:
                break
    return order


def _require_irreducible(f: Poly):
    if not is_irreducible(f):
        raise ValueError(f"{f} is not irreducible over F_{f.p}")


def roots_in(f: Poly, ctx: FieldCtx) -> list[FieldElem]:
    """Roots of an irreducible ``f`` with deg f | ctx.n, found by exhaustive search."""
    for a in ctx.elements():
        if f(a).is_zero():
            return frobenius_orbit(a)
    return []


def _root(f: Poly, ctx: FieldCtx | None) -> FieldElem:
    _require_irreducible(f)
    f = f.monic()
    if ctx is None:
        return FieldCtx(f.p, f.degree, f, check=False).gen
    if ctx.p != f.p or ctx.n != f.degree:
        raise ValueError(f"{f} does not have degree {ctx.n} over F_{ctx.p}")
    return roots_in(f, ctx)[0]


def is_normal(f: Poly, ctx: FieldCtx | None = None) -> bool:
    """Do the roots of ``f`` form a basis of F_{p^n} over F_p?

    The roots are taken in ``ctx`` when given, otherwise in F_p[x]/(f).
    """
    a = _root(f, ctx)
    return _rank_mod_p([b.coords for b in frobenius_orbit(a)], f.p) == f.degree


def is_primitive(f: Poly, ctx: FieldCtx | None = None) -> bool:
    a = _root(f, ctx)
    return not a.is_zero() and multiplicative_order(a) == a.ctx.order - 1


def cyclotomic_cosets(p: int, n: int) -> list[list[int]]:
    """Orbits of k -> p k on Z_n (requires gcd(p, n) = 1)."""
    seen = set()
    out = []
    for k in range(n):
        if k in seen:
            continue
        orb = [k]
        j = k * p % n
        while j != k:
            orb.append(j)
            j = j * p % n
        seen.update(orb)
        out.append(orb)
    return out


def unit_count_mod_xn1(p: int, n: int) -> int:
    """Number of units of F_p[x]/(x^n - 1).

    With n = p^s m, x^n - 1 = (x^m - 1)^(p^s) and x^m - 1 has one irreducible
    factor of degree d per p-cyclotomic coset of size d mod m.  A local factor
    F_p[x]/(f^e) with deg f = d has p^(de) - p^(d(e-1)) units.
    """
    s = 0
    m = n
    while m % p == 0:
        m //= p
        s += 1
    e = p ** s
    return prod(p ** (len(c) * e) - p ** (len(c) * (e - 1)) for c in cyclotomic_cosets(p, m))


def count_normal(p: int, n: int, method: str = "formula") -> int:
    """Number of normal polynomials of degree n.

    The normal elements are the a with gcd(a, x^n - 1) = 1 under the module
    structure given by Frobenius, so there are as many as units of
    F_p[x]/(x^n - 1), and each polynomial accounts for n of them.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if method == "formula":
        return unit_count_mod_xn1(p, n) // n
    if method == "enumerate":
        return sum(is_normal(f) for f in enumerate_irreducible(p, n))
    raise ValueError(f"unknown method {method!r}")


def count_primitive(p: int, n: int, method: str = "formula") -> int:
    """phi(p^n - 1) / n, or a direct count with ``method="enumerate"``."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    if method == "formula":
        return int(totient(p ** n - 1)) // n
    if method == "enumerate":
        return sum(is_primitive(f) for f in enumerate_irreducible(p, n))
    raise ValueError(f"unknown method {method!r}")
