"""Exact integer matrices and the Smith normal form.

Matrices are plain lists of rows of Python ints, so no entry can overflow.
:func:`smith_normal_form` pivots on the nonzero entry of smallest absolute
value in the remaining submatrix (ties go to the lowest row, then column),
which makes its output and optional transforms deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Sequence

from .abgroup import AbelianType

BigMatrix = list[list[int]]


def as_matrix(rows: Sequence[Sequence[int]]) -> BigMatrix:
    m = [[int(a) for a in r] for r in rows]
    if not m or not m[0]:
        raise ValueError("matrix dimensions must be positive")
    if any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> BigMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: BigMatrix, b: BigMatrix) -> BigMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: BigMatrix) -> BigMatrix:
    return [list(r) for r in zip(*a)]


def submatrix(a: BigMatrix, drop_row: int, drop_col: int) -> BigMatrix:
    return [[x for j, x in enumerate(r) if j != drop_col]
            for i, r in enumerate(a) if i != drop_row]


def det(a: BigMatrix) -> int:
    """Bareiss fraction-free determinant."""
    m = [list(r) for r in a]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if n else 1


def format_matrix(a: BigMatrix) -> str:
    width = max(len(str(x)) for r in a for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in a) + "\n"


def parse_matrix(text: str) -> BigMatrix:
    return as_matrix([[int(t) for t in line.split()] for line in text.splitlines() if line.strip()])


@dataclass(frozen=True)
class SmithForm:
    """Diagonal d_1 | d_2 | ... padded with zeros to min(rows, cols).

    When transforms were requested, ``U @ A @ V`` is the diagonal matrix.
    """

    diagonal: tuple[int, ...]
    U: BigMatrix | None = None
    V: BigMatrix | None = None

    def diagonal_matrix(self, rows: int, cols: int) -> BigMatrix:
        d = [[0] * cols for _ in range(rows)]
        for i, x in enumerate(self.diagonal):
            d[i][i] = x
        return d


def _pivot(a: BigMatrix, t: int):
    best = None
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(m: Sequence[Sequence[int]], keep_transforms: bool = False) -> SmithForm:
    a = as_matrix(m)
    rows, cols = len(a), len(a[0])
    U = identity(rows) if keep_transforms else None
    V = identity(cols) if keep_transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row dst += k * row src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        if U is not None:
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        if V is not None:
            for r in V:
                r[dst] += k * r[src]

    for t in range(min(rows, cols)):
        while True:
            piv = _pivot(a, t)
            if piv is None:
                break
            _, i, j = piv
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            d = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // d))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // d))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows)
                        if any(a[i][j] % d for j in range(t + 1, cols))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        if _pivot(a, t + 1) is None:
            break
    diag = tuple(a[i][i] for i in range(min(rows, cols)))
    return SmithForm(diag, U, V)


def cokernel_type(m: Sequence[Sequence[int]]) -> tuple[AbelianType, int]:
    """Z^cols / (row lattice of m): torsion type and free rank."""
    a = as_matrix(m)
    diag = smith_normal_form(a).diagonal
    free = len(a[0]) - sum(1 for d in diag if d)
    return AbelianType.from_cyclic([d for d in diag if d > 1]), free


def shift_basis_matrix(n: int) -> BigMatrix:
    """Unimodular C with 1 on the diagonal and -1 directly above it.

    Its rows are e_0 - e_1, ..., e_{n-2} - e_{n-1}, e_{n-1}.
    """
    return [[1 if j == i else (-1 if j == i + 1 else 0) for j in range(n)] for i in range(n)]


def conjugate_by_shift_basis(m: Sequence[Sequence[int]]) -> BigMatrix:
    """C^{-1} m C for the matrix C of :func:`shift_basis_matrix`."""
    a = as_matrix(m)
    n = len(a)
    if len(a[0]) != n:
        raise ValueError("conjugation needs a square matrix")
    # C^{-1} is upper triangular with all ones: suffix sums of rows.
    suffix = [row[:] for row in a]
    for i in range(n - 2, -1, -1):
        suffix[i] = [x + y for x, y in zip(a[i], suffix[i + 1])]
    # Right multiplication by C: column j minus column j-1.
    return [[r[j] - (r[j - 1] if j else 0) for j in range(n)] for r in suffix]


def minor_gcd(m: Sequence[Sequence[int]], k: int) -> int:
    """gcd of all k x k minors (brute force; small matrices only)."""
    a = as_matrix(m)
    g = 0
    for rs in combinations(range(len(a)), k):
        for cs in combinations(range(len(a[0])), k):
            g = gcd(g, det([[a[i][j] for j in cs] for i in rs]))
    return g
