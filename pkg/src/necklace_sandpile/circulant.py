"""Circulant matrices over F_p and the quotient of their unit group by shifts.

A circulant is stored by its first row; row i is the first row rotated i
places to the right, so the algebra is F_p[x]/(x^n - 1) and multiplication is
cyclic convolution.  Multiplying by the shift circulants rotates the first
row, so a coset of the shift subgroup is named by its smallest rotation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .abgroup import DEFAULT_MAX_ORDER, AbelianType, type_from_order_statistics
from .gfpoly import Poly, batched_full_rank, cyclotomic_cosets, poly_gcd, unit_count_mod_xn1  # noqa: F401


@dataclass(frozen=True)
class CirculantFp:
    p: int
    first_row: tuple[int, ...]

    def __post_init__(self):
        row = tuple(int(a) % self.p for a in self.first_row)
        if not row:
            raise ValueError("circulant of size zero")
        object.__setattr__(self, "first_row", row)

    @property
    def n(self) -> int:
        return len(self.first_row)

    @classmethod
    def identity(cls, p: int, n: int) -> CirculantFp:
        return cls.shift(p, n, 0)

    @classmethod
    def shift(cls, p: int, n: int, k: int = 1) -> CirculantFp:
        """Permutation circulant of the k-th power of (0, 1, ..., n-1)."""
        row = [0] * n
        row[k % n] = 1
        return cls(p, tuple(row))

    def matrix(self) -> list[list[int]]:
        r = self.first_row
        n = self.n
        return [[r[(j - i) % n] for j in range(n)] for i in range(n)]

    def __mul__(self, other: CirculantFp) -> CirculantFp:
        return circulant_multiply(self, other)

    def __pow__(self, e: int) -> CirculantFp:
        out = CirculantFp.identity(self.p, self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def rotations(self) -> list[tuple[int, ...]]:
        r = self.first_row
        return [r[-k:] + r[:-k] if k else r for k in range(self.n)]

    def coset_rep(self) -> tuple[int, ...]:
        return min(self.rotations())


def circulant_multiply(a: CirculantFp, b: CirculantFp) -> CirculantFp:
    if (a.p, a.n) != (b.p, b.n):
        raise ValueError("circulants of different size or characteristic")
    n = a.n
    out = [0] * n
    for i, x in enumerate(a.first_row):
        if x:
            for j, y in enumerate(b.first_row):
                out[(i + j) % n] += x * y
    return CirculantFp(a.p, tuple(out))


def _x_n_minus_1(p: int, n: int) -> Poly:
    return Poly(p, [-1] + [0] * (n - 1) + [1])


def is_unit(a: CirculantFp) -> bool:
    """Invertible iff the first row, as a polynomial, is prime to x^n - 1."""
    f = Poly(a.p, a.first_row)
    if f.is_zero():
        return False
    return poly_gcd(f, _x_n_minus_1(a.p, a.n)).degree == 0


def unit_group_order(p: int, n: int) -> int:
    """|C_n(F_p)^*|, from the factorization shape of x^n - 1."""
    return unit_count_mod_xn1(p, n)


def unit_rows(p: int, n: int) -> np.ndarray:
    """First rows of all non-degenerate circulants, by batched rank test."""
    q = p ** n
    idx = np.arange(q, dtype=np.int64)
    rows = (idx[:, None] // (p ** np.arange(n, dtype=np.int64))[None, :]) % p
    cols = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    ok = np.zeros(q, dtype=bool)
    for start in range(0, q, 1 << 14):
        chunk = rows[start:start + (1 << 14)]
        ok[start:start + len(chunk)] = batched_full_rank(chunk[:, cols], p)
    return rows[ok]


def count_units_brute_force(p: int, n: int) -> int:
    return len(unit_rows(p, n))


def quotient_group_type(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> AbelianType:
    """Type of C_n(F_p)^* modulo the cyclic shift subgroup, by coset enumeration."""
    if unit_group_order(p, n) // n > max_order:
        raise MemoryError(f"quotient of order {unit_group_order(p, n) // n} exceeds {max_order}")
    reps = sorted({CirculantFp(p, tuple(int(a) for a in r)).coset_rep() for r in unit_rows(p, n)})
    one = CirculantFp.identity(p, n).coset_rep()
    orders = []
    for r in reps:
        u = CirculantFp(p, r)
        w, k = u, 1
        while w.coset_rep() != one:
            w = w * u
            k += 1
        orders.append(k)
    return type_from_order_statistics(orders)
