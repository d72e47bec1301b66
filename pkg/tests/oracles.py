"""Slow, straight-from-the-definition reference implementations.

Nothing here imports the package's arithmetic; polynomials are plain
lists of ints (lowest degree first) and field elements are such lists
reduced modulo a fixed monic polynomial.
"""

from __future__ import annotations

from itertools import combinations, product
from math import gcd, lcm

import sympy
from sympy.matrices.normalforms import invariant_factors


# -- polynomials over F_p as lists ---------------------------------------------

def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, p):
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return trim([(x + y) % p for x, y in zip(a, b)])


def pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def pmod(a, f, p):
    a = trim([x % p for x in a])
    inv = pow(f[-1], -1, p)
    while len(a) >= len(f):
        c = a[-1] * inv % p
        shift = len(a) - len(f)
        for i, y in enumerate(f):
            a[shift + i] = (a[shift + i] - c * y) % p
        a = trim(a)
    return a


def monic_polys(p, d):
    for tail in product(range(p), repeat=d):
        yield list(tail) + [1]


def is_irreducible_naive(f, p):
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for g in monic_polys(p, k):
            if not pmod(f, g, p):
                return False
    return True


def irreducibles_naive(p, n):
    return [f for f in monic_polys(p, n) if is_irreducible_naive(f, p)]


def evaluate(g, a, f, p):
    """g(a) in F_p[x]/(f), Horner."""
    acc = []
    for c in reversed(g):
        acc = padd(pmod(pmul(acc, a, p), f, p), [c], p)
    return acc


def fpow(a, e, f, p):
    out = [1]
    base = pmod(a, f, p)
    while e:
        if e & 1:
            out = pmod(pmul(out, base, p), f, p)
        base = pmod(pmul(base, base, p), f, p)
        e >>= 1
    return out


def minpoly_naive(a, f, p, candidates):
    """The unique candidate (monic irreducible) with a as a root."""
    hits = [g for g in candidates if not evaluate(g, a, f, p)]
    assert len(hits) == 1, hits
    return hits[0]


def poly_str(g):
    """Same text format as the package, for p = 2 only."""
    terms = []
    for k in range(len(g) - 1, -1, -1):
        if g[k]:
            terms.append("1" if k == 0 else "x" if k == 1 else f"x^{k}")
    return "+".join(terms) or "0"


def naive_reutenauer(p, n, f, alpha, digits, candidates):
    """Minimal polynomial of sum nu_i alpha^(p^i), evaluated from scratch."""
    acc = []
    for i, nu in enumerate(digits):
        acc = padd(acc, [nu * c for c in fpow(alpha, p ** i, f, p)], p)
    return minpoly_naive(acc, f, p, candidates)


def naive_golomb(p, n, f, alpha, digits, candidates):
    e = sum(nu * p ** i for i, nu in enumerate(digits))
    return minpoly_naive(fpow(alpha, e, f, p), f, p, candidates)


# -- necklaces -----------------------------------------------------------------

def lyndon_naive(p, n):
    out = set()
    for w in product(range(p), repeat=n):
        rots = {w[i:] + w[:i] for i in range(n)}
        if len(rots) == n:
            out.add(min(rots))
    return sorted(out)


# -- groups --------------------------------------------------------------------

def closure_naive(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [tuple(int(x) for x in g) for g in gens]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = tuple(g[i] for i in h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return seen


def perm_order(g):
    n = len(g)
    seen = [False] * n
    o = 1
    for i in range(n):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = g[j]
                c += 1
            o = lcm(o, c)
    return o


def element_orders_of_type(factors):
    """Orders of all elements of Z_{d_1} + ... + Z_{d_k}, by enumeration."""
    out = []
    for xs in product(*[range(d) for d in factors]):
        o = 1
        for x, d in zip(xs, factors):
            o = lcm(o, d // gcd(x, d))
        out.append(o)
    return out


# -- integer matrices -----------------------------------------------------------

def snf_sympy(m):
    """Nonzero invariant factors via sympy, as positive ints."""
    M = sympy.Matrix(m)
    return [abs(int(d)) for d in invariant_factors(M, domain=sympy.ZZ) if d != 0]


def determinantal_divisor(m, k):
    """gcd of all k x k minors, straight from the definition."""
    rows, cols = len(m), len(m[0])
    g = 0
    for r in combinations(range(rows), k):
        for c in combinations(range(cols), k):
            g = gcd(g, int(sympy.Matrix([[m[i][j] for j in c] for i in r]).det()))
    return g


def laplacian_naive(p, n):
    """Laplacian of i -> p i + j mod n with l_ii = -indeg, loops ignored."""
    L = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(p):
            t = (p * i + j) % n
            if t != i:
                L[i][t] += 1
                L[t][t] -= 1
    return L
