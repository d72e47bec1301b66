"""Generalized de Bruijn graphs and their sandpile groups.

The graph on Z_n with one edge from i to each of pi, pi+1, ..., pi+p-1 is
built by :func:`build_gamma`; for n = 2^k and p = 2 it is the classical de
Bruijn graph.  :func:`sandpile_group` reads the group off a Smith normal
form, and :func:`closed_form_odd` / :func:`closed_form_doubling` evaluate the
closed formulas for p = 2 so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from ._numtheory import factorint
from .abgroup import AbelianType, direct_sum, multiple_subgroup
from .zlinalg import (
    BigMatrix,
    cokernel_type,
    conjugate_by_shift_basis,
    smith_normal_form,
    submatrix,
)


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class MultiDigraph:
    """Vertices 0..n-1; ``edge_mult[(i, j)]`` arrows from i to j (loops allowed)."""

    n: int
    edge_mult: dict[tuple[int, int], int] = field(default_factory=dict)

    def outdeg(self, v: int) -> int:
        return sum(m for (i, j), m in self.edge_mult.items() if i == v and j != v)

    def indeg(self, v: int) -> int:
        return sum(m for (i, j), m in self.edge_mult.items() if j == v and i != v)

    def is_eulerian(self) -> bool:
        out = [0] * self.n
        inn = [0] * self.n
        for (i, j), m in self.edge_mult.items():
            if i != j:
                out[i] += m
                inn[j] += m
        return out == inn

    def is_strongly_connected(self) -> bool:
        if self.n <= 1:
            return True
        succ = [set() for _ in range(self.n)]
        pred = [set() for _ in range(self.n)]
        for (i, j), m in self.edge_mult.items():
            if m:
                succ[i].add(j)
                pred[j].add(i)
        return all(len(_reach(adj, 0)) == self.n for adj in (succ, pred))


def _reach(adj, start):
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def build_gamma(p: int, n: int) -> MultiDigraph:
    if p < 2 or n < 1:
        raise ValueError(f"need p >= 2 and n >= 1, got p={p}, n={n}")
    edges: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(p):
            key = (i, (p * i + j) % n)
            edges[key] = edges.get(key, 0) + 1
    g = MultiDigraph(n, edges)
    if not (g.is_eulerian() and g.is_strongly_connected()):
        raise AssertionError(f"Gamma_{n}^{p} must be Eulerian and strongly connected")
    return g


def laplacian(g: MultiDigraph) -> BigMatrix:
    """l_ii = -indeg(v_i) and l_ij = e(v_i, v_j); loops do not enter."""
    if not g.is_eulerian():
        raise GraphError("Laplacian of a non-Eulerian graph")
    L = [[0] * g.n for _ in range(g.n)]
    for (i, j), m in g.edge_mult.items():
        if i != j:
            L[i][j] += m
            L[j][j] -= m
    return L


def sandpile_group(g: MultiDigraph, method: str = "full") -> AbelianType:
    """Torsion of Z_0^n / (rows of L) ("full") or of Z^{n-1} / L' ("minor")."""
    if not g.is_strongly_connected():
        raise GraphError("sandpile group of a graph that is not strongly connected")
    L = laplacian(g)
    if g.n == 1:
        return AbelianType.trivial()
    if method == "full":
        torsion, free = cokernel_type(L)
        if free != 1:
            raise AssertionError(f"connected Laplacian has corank {free}")
        return torsion
    if method == "minor":
        torsion, free = cokernel_type(submatrix(L, 0, 0))
        if free:
            raise AssertionError("reduced Laplacian is singular")
        return torsion
    raise ValueError(f"unknown method {method!r}")


def gamma_sandpile(p: int, n: int, method: str = "full") -> AbelianType:
    return sandpile_group(build_gamma(p, n), method)


def a_matrix(n: int) -> BigMatrix:
    """Laplacian of Gamma_n^2 (the matrix A_n)."""
    return laplacian(build_gamma(2, n))


@dataclass(frozen=True)
class DoublingOrbits:
    p: int
    n: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def reps(self) -> tuple[int, ...]:
        return tuple(min(o) for o in self.orbits)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def length_of(self, v: int) -> int:
        v %= self.n
        return next(len(o) for o in self.orbits if v in o)


def doubling_orbits(p: int, n: int) -> DoublingOrbits:
    """Orbits of x -> p x on Z_n minus 0, listed in order of their minimal element."""
    if gcd(p, n) != 1:
        raise ValueError(f"x -> {p}x does not permute Z_{n} when gcd({p}, {n}) > 1")
    seen = set()
    orbits = []
    for v in range(1, n):
        if v in seen:
            continue
        orb = [v]
        w = p * v % n
        while w != v:
            orb.append(w)
            w = p * w % n
        seen.update(orb)
        orbits.append(tuple(orb))
    return DoublingOrbits(p, n, tuple(orbits))


def closed_form_odd(n: int) -> AbelianType:
    """S(Gamma_n^2) for odd n from the doubling orbits of Z_n.

    Sum over primes q | n of q' Z_{2^l(q'')-1}, plus Z_{2^l(v)-1} for every
    minimal orbit representative v outside V_n = {q''}; q' is the largest
    power of q dividing n and q'' = n / q'.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    if n == 1:
        return AbelianType.trivial()
    orbs = doubling_orbits(2, n)
    parts = []
    v_n = set()
    for q, e in factorint(n).items():
        q1 = q ** e
        q2 = n // q1
        v_n.add(q2)
        parts.append(multiple_subgroup(q1, AbelianType.from_cyclic([2 ** orbs.length_of(q2) - 1])))
    rest = [2 ** orbs.length_of(v) - 1 for v in orbs.reps if v not in v_n]
    return direct_sum(*parts, AbelianType.from_cyclic(rest))


def closed_form_doubling(n: int) -> AbelianType:
    """S(Gamma_n^2) for n = 2^k m, m odd, reduced to S(Gamma_m^2)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    k = (n & -n).bit_length() - 1
    m = n >> k
    orders = [2 ** k] * (m - 1) if k else []
    for i in range(2, k + 1):
        orders += [2 ** (k + 1 - i)] * (2 ** (i - 2) * m)
    return direct_sum(closed_form_odd(m), AbelianType.from_cyclic(orders))


def closed_form(n: int) -> AbelianType:
    return closed_form_odd(n) if n % 2 else closed_form_doubling(n)


def orbit_minor(n: int) -> BigMatrix:
    """Lower-right codimension-1 minor of C^{-1} A_n C (odd n)."""
    a = conjugate_by_shift_basis(a_matrix(n))
    return [row[1:] for row in a[1:]]


def snf_diagonal(n: int) -> tuple[int, ...]:
    return smith_normal_form(a_matrix(n)).diagonal
