"""The Reutenauer and Golomb bijections between necklaces and irreducibles.

Reutenauer: a normal element a of F_{p^n} sends the necklace (v_0, ..., v_{n-1})
to the minimal polynomial of v_0 a + v_1 a^p + ... + v_{n-1} a^{p^{n-1}}.

Golomb: a primitive element a sends it to the minimal polynomial of
a^(v_0 + v_1 p + ... + v_{n-1} p^{n-1}).

Scalar versions (:func:`reutenauer_map`, :func:`golomb_map`) return a
:class:`~necklace_sandpile.gfpoly.Poly`.  For group computations a
:class:`BijectionFamily` materializes every map of one kind as an integer
table over the necklace indices.  Irreducible polynomials are the points
``0 .. N-1`` of the family, in the order of the smallest field index among
their roots; :meth:`BijectionFamily.polynomial` names them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Sequence

import numpy as np

from .abgroup import DEFAULT_MAX_ORDER, PermGroup, generate_group, inverse
from .gfpoly import (
    FieldCtx,
    FieldElem,
    Poly,
    batched_full_rank,
    frobenius_orbit,
    minimal_polynomial,
    multiplicative_order,
)
from .necklace import Necklace, canonicalize, digit_matrix, enumerate_necklaces, PERIODIC

KINDS = ("reutenauer", "golomb")


class InvariantViolation(RuntimeError):
    """A map lost bijectivity or full degree; always an implementation bug."""


@dataclass(frozen=True)
class NormalBasisParam:
    ctx: FieldCtx
    generator: FieldElem

    @cached_property
    def basis(self) -> list[FieldElem]:
        return frobenius_orbit(self.generator)

    @cached_property
    def basis_matrix(self) -> np.ndarray:
        """Row i holds the coordinates of generator^(p^i)."""
        m = np.array([b.coords for b in self.basis], dtype=np.int64)
        if m.shape != (self.ctx.n, self.ctx.n) or not batched_full_rank(m[None], self.ctx.p)[0]:
            raise ValueError(f"{self.generator} does not generate a normal basis")
        return m

    @cached_property
    def inverse_matrix(self) -> np.ndarray:
        return _inverse_mod_p(self.basis_matrix, self.ctx.p)

    @cached_property
    def normal_poly(self) -> Poly:
        return minimal_polynomial(self.generator)

    def coordinates(self, a: FieldElem) -> tuple[int, ...]:
        """Digits v with a = sum v_i generator^(p^i)."""
        v = (np.array(a.coords, dtype=np.int64) @ self.inverse_matrix) % self.ctx.p
        return tuple(int(x) for x in v)


@dataclass(frozen=True)
class PrimitiveParam:
    ctx: FieldCtx
    generator: FieldElem

    def __post_init__(self):
        if multiplicative_order(self.generator) != self.ctx.order - 1:
            raise ValueError(f"{self.generator} is not primitive")

    @cached_property
    def primitive_poly(self) -> Poly:
        return minimal_polynomial(self.generator)


def _digits(v, p: int, n: int) -> tuple[int, ...]:
    d = tuple(v.digits) if isinstance(v, Necklace) else tuple(int(x) for x in v)
    if len(d) != n or (isinstance(v, Necklace) and v.p != p):
        raise ValueError(f"necklace {d} does not match p={p}, n={n}")
    if canonicalize(d, p) is PERIODIC:
        raise ValueError(f"{d} is periodic")
    return d


def _full_degree(f: Poly, n: int) -> Poly:
    if f.degree != n:
        raise InvariantViolation(f"image {f} has degree {f.degree}, expected {n}")
    return f


def reutenauer_map(param: NormalBasisParam, v) -> Poly:
    ctx = param.ctx
    d = _digits(v, ctx.p, ctx.n)
    acc = ctx.zero
    for nu, b in zip(d, param.basis):
        acc = acc + b * nu
    return _full_degree(minimal_polynomial(acc), ctx.n)


def golomb_map(param: PrimitiveParam, v) -> Poly:
    ctx = param.ctx
    d = _digits(v, ctx.p, ctx.n)
    e = sum(nu * ctx.p ** i for i, nu in enumerate(d))
    return _full_degree(minimal_polynomial(param.generator ** e), ctx.n)


def invert_map(param, necklaces: Sequence[Necklace] | None = None) -> dict[Poly, Necklace]:
    """Inverse table I_n^p -> N_n^p of either map, by direct evaluation."""
    ctx = param.ctx
    if necklaces is None:
        necklaces = enumerate_necklaces(ctx.p, ctx.n)
    fwd = reutenauer_map if isinstance(param, NormalBasisParam) else golomb_map
    inv: dict[Poly, Necklace] = {}
    for v in necklaces:
        f = fwd(param, v)
        if f in inv:
            raise InvariantViolation(f"{inv[f]} and {v} both map to {f}")
        inv[f] = v
    return inv


def _inverse_mod_p(m: np.ndarray, p: int) -> np.ndarray:
    n = len(m)
    a = np.concatenate([m % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = c + int(np.flatnonzero(a[c:, c])[0])
        a[[c, piv]] = a[[piv, c]]
        a[c] = (a[c] * pow(int(a[c, c]), -1, p)) % p
        f = a[:, c].copy()
        f[c] = 0
        a = (a - f[:, None] * a[c][None, :]) % p
    return a[:, n:]


class BijectionFamily:
    """All maps of one kind for fixed (p, n), as integer lookup tables.

    ``table(param)[i]`` is the point (irreducible polynomial) hit by the
    i-th necklace of :attr:`necklaces`.
    """

    def __init__(self, kind: str, p: int, n: int, ctx: FieldCtx | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown bijection kind {kind!r}")
        if kind == "golomb" and n < 2:
            raise ValueError("the Golomb map needs n >= 2 (zero is never a power)")
        self.kind, self.p, self.n = kind, p, n
        self.ctx = ctx if ctx is not None else FieldCtx(p, n)
        if (self.ctx.p, self.ctx.n) != (p, n):
            raise ValueError("field context does not match (p, n)")

    def __repr__(self):
        return f"BijectionFamily({self.kind!r}, p={self.p}, n={self.n})"

    @cached_property
    def necklaces(self) -> list[Necklace]:
        return enumerate_necklaces(self.p, self.n)

    @cached_property
    def digits(self) -> np.ndarray:
        return digit_matrix(self.necklaces).reshape(-1, self.n)

    @cached_property
    def points(self) -> np.ndarray:
        """Field index of the canonical root of each irreducible polynomial."""
        return self.ctx.full_orbit_reps()

    @cached_property
    def _point_of(self) -> np.ndarray:
        out = np.full(self.ctx.order, -1, dtype=np.int64)
        out[self.points] = np.arange(len(self.points))
        return out

    def point_of(self, a: FieldElem) -> int:
        """Point index of the minimal polynomial of ``a`` (-1 if deg < n)."""
        canon, _ = self.ctx.orbit_table
        return int(self._point_of[canon[a.index]])

    @lru_cache(maxsize=None)
    def polynomial(self, point: int) -> Poly:
        return minimal_polynomial(self.ctx.from_index(int(self.points[point])))

    def polynomials(self) -> list[Poly]:
        return [self.polynomial(i) for i in range(len(self.points))]

    # -- Golomb bookkeeping ---------------------------------------------------

    @cached_property
    def _reference_primitive(self) -> FieldElem:
        q = self.ctx.order
        for k in range(1, q):
            a = self.ctx.from_index(k)
            if multiplicative_order(a) == q - 1:
                return a
        raise AssertionError("a finite field has a primitive element")

    @cached_property
    def _exp(self) -> np.ndarray:
        return self.ctx.exp_table(self._reference_primitive)

    @cached_property
    def _log(self) -> np.ndarray:
        log = np.full(self.ctx.order, -1, dtype=np.int64)
        log[self._exp] = np.arange(self.ctx.order - 1)
        return log

    # -- parameters and tables ------------------------------------------------

    @cached_property
    def params(self) -> list:
        """One parameter per normal (resp. primitive) polynomial."""
        ctx = self.ctx
        if self.kind == "reutenauer":
            reps = self.points
            mats = np.empty((len(reps), self.n, self.n), dtype=np.int64)
            cur = ctx.all_coords[reps]
            for i in range(self.n):
                mats[:, i, :] = cur
                cur = (cur @ ctx.frobenius_matrix) % self.p
            good = reps[batched_full_rank(mats, self.p)]
            return [NormalBasisParam(ctx, ctx.from_index(int(k))) for k in good]
        q1 = ctx.order - 1
        seen = set()
        out = []
        for t in range(1, q1):
            if gcd(t, q1) != 1 or t in seen:
                continue
            conj = {t * self.p ** k % q1 for k in range(self.n)}
            seen |= conj
            out.append(PrimitiveParam(ctx, ctx.from_index(int(self._exp[t]))))
        return out

    def table(self, param) -> np.ndarray:
        if param.ctx != self.ctx:
            raise ValueError("parameter belongs to another field context")
        canon, _ = self.ctx.orbit_table
        if self.kind == "reutenauer":
            coords = (self.digits @ param.basis_matrix) % self.p
            idx = coords @ self.ctx.weights
        else:
            t = int(self._log[param.generator.index])
            e = self.digits @ self.ctx.weights
            idx = self._exp[(t * e) % (self.ctx.order - 1)]
        img = self._point_of[canon[idx]]
        if (img < 0).any():
            bad = self.necklaces[int(np.flatnonzero(img < 0)[0])]
            raise InvariantViolation(f"necklace {bad} maps below degree {self.n}")
        if len(np.unique(img)) != len(img):
            raise InvariantViolation(f"{self.kind} map is not injective for {param.generator}")
        return img

    @cached_property
    def tables(self) -> list[np.ndarray]:
        return [self.table(a) for a in self.params]

    def necklace_group(self, max_order: int = DEFAULT_MAX_ORDER, all_pairs: bool = False) -> PermGroup:
        """Group on necklaces generated by phi_i^{-1} o phi_j.

        By default only the pairs with i = 0 are used; they generate the same
        group since phi_i^{-1} phi_j = (phi_0^{-1} phi_i)^{-1} (phi_0^{-1} phi_j).
        """
        t = self.tables
        if all_pairs:
            gens = [inverse(a)[b] for a in t for b in t]
        else:
            inv0 = inverse(t[0])
            gens = [inv0[b] for b in t]
        return generate_group(gens, degree=len(self.necklaces), max_order=max_order)

    def polynomial_group(self, max_order: int = DEFAULT_MAX_ORDER, all_pairs: bool = False) -> PermGroup:
        """Group on irreducible polynomials generated by phi_i o phi_j^{-1}."""
        t = self.tables
        if all_pairs:
            gens = [a[inverse(b)] for a in t for b in t]
        else:
            gens = [b[inverse(t[0])] for b in t]
        return generate_group(gens, degree=len(self.points), max_order=max_order)


@lru_cache(maxsize=64)
def family(kind: str, p: int, n: int) -> BijectionFamily:
    """Cached :class:`BijectionFamily` over the default field context."""
    return BijectionFamily(kind, p, n)


def enumerate_params(kind: str, p: int, n: int) -> list:
    kind = {"normal": "reutenauer", "primitive": "golomb"}.get(kind, kind)
    return family(kind, p, n).params


@lru_cache(maxsize=64)
def reutenauer_group(p: int, n: int) -> PermGroup:
    return family("reutenauer", p, n).necklace_group()


@lru_cache(maxsize=64)
def golomb_group(p: int, n: int) -> PermGroup:
    return family("golomb", p, n).necklace_group()
