"""Finite abelian groups: isomorphism types and permutation-group closure.

An :class:`AbelianType` is the canonical invariant-factor list
d_1 | d_2 | ... | d_k (every d_i >= 2, the empty list is the trivial group).

Groups of permutations are built from lists of permutation tables (1-d
integer numpy arrays; ``g[i]`` is the image of point ``i``) by
:func:`generate_group`.  Composition follows function notation, so the table
of ``a o b`` is ``a[b]``.

>>> AbelianType.from_cyclic([63, 63, 7])
AbelianType(Z_7⊕Z_63⊕Z_63)
>>> multiple_subgroup(3, AbelianType.from_cyclic([63, 3]))
AbelianType(Z_21)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Mapping, Sequence

import numpy as np

from ._numtheory import divisors, factorint, mobius

DEFAULT_MAX_ORDER = 10 ** 7


@dataclass(frozen=True)
class AbelianType:
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", d)
        if any(x < 2 for x in d):
            raise ValueError(f"invariant factors must be >= 2: {d}")
        if any(b % a for a, b in zip(d, d[1:])):
            raise ValueError(f"invariant factors do not form a divisibility chain: {d}")

    @classmethod
    def trivial(cls) -> AbelianType:
        return cls(())

    @classmethod
    def from_primary(cls, primary: Mapping[int, Sequence[int]]) -> AbelianType:
        """Build from {prime: exponent partition}."""
        rank = max((len(v) for v in primary.values()), default=0)
        factors = [1] * rank
        for q, part in primary.items():
            for i, e in enumerate(sorted(part, reverse=True)):
                factors[rank - 1 - i] *= q ** e
        return cls(tuple(f for f in factors if f > 1))

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> AbelianType:
        """Canonical type of a direct sum of cyclic groups Z_m."""
        primary: dict[int, list[int]] = {}
        for m in orders:
            m = int(m)
            if m < 1:
                raise ValueError(f"cyclic order must be positive, got {m}")
            for q, e in factorint(m).items():
                primary.setdefault(q, []).append(e)
        return cls.from_primary(primary)

    @classmethod
    def parse(cls, text: str) -> AbelianType:
        """Read ``Z_2⊕Z_4``, ``Z_2+Z_4``, ``Z_3^2⊕Z_9`` or ``Z_1``."""
        s = re.sub(r"\s+", "", text)
        if s in ("", "0", "Z_1", "trivial"):
            return cls.trivial()
        orders = []
        for part in re.split(r"⊕|\+", s):
            m = re.fullmatch(r"Z_\{?(\d+)\}?(?:\^(\d+))?", part)
            if m is None:
                raise ValueError(f"cannot parse group {text!r}")
            orders += [int(m.group(1))] * int(m.group(2) or 1)
        return cls.from_cyclic(orders)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def primary(self) -> dict[int, tuple[int, ...]]:
        """{prime: exponents in decreasing order}."""
        out: dict[int, list[int]] = {}
        for d in self.invariant_factors:
            for q, e in factorint(d).items():
                out.setdefault(q, []).append(e)
        return {q: tuple(sorted(v, reverse=True)) for q, v in sorted(out.items())}

    def __add__(self, other: AbelianType) -> AbelianType:
        return direct_sum(self, other)

    def __str__(self):
        if not self.invariant_factors:
            return "Z_1"
        return "⊕".join(f"Z_{d}" for d in self.invariant_factors)

    def __repr__(self):
        return f"AbelianType({self})"

    def to_json(self) -> dict:
        return {
            "order": str(self.order),
            "invariant_factors": list(self.invariant_factors),
            "primary": {str(q): list(v) for q, v in self.primary().items()},
        }


def direct_sum(*types: AbelianType) -> AbelianType:
    return AbelianType.from_cyclic(d for t in types for d in t.invariant_factors)


def multiple_subgroup(k: int, g: AbelianType) -> AbelianType:
    """Type of kG = {kx : x in G}: each Z_m becomes Z_{m / gcd(k, m)}."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return AbelianType.from_cyclic(m // gcd(k, m) for m in g.invariant_factors)


def is_isomorphic(a: AbelianType, b: AbelianType) -> bool:
    return a.invariant_factors == b.invariant_factors


def order_counts(t: AbelianType) -> Counter:
    """{m: number of elements of order exactly m}."""
    def dividing(m):
        return prod(gcd(m, d) for d in t.invariant_factors)

    counts = Counter()
    for m in divisors(t.exponent):
        c = sum(int(mobius(m // d)) * dividing(d) for d in divisors(m))
        if c:
            counts[m] = c
    return counts


def _ilog(n: int, q: int) -> int | None:
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    return k if n == 1 else None


def type_from_order_statistics(orders: Iterable[int] | Mapping[int, int]) -> AbelianType:
    """Recover the type from the multiset of element orders.

    For each prime q the counts N_k = #{g : g^(q^k) = e} = q^(sum_j min(k, l_j))
    determine the partition l of the q-primary part.  ``orders`` may be the
    multiset itself or a {order: multiplicity} mapping.
    """
    counts = Counter(orders) if not isinstance(orders, Mapping) else Counter(dict(orders))
    total = sum(counts.values())
    if total < 1 or counts.get(1, 0) != 1:
        raise ValueError("order statistics need exactly one identity element")
    primary = {}
    for q in factorint(total):
        exps = []
        prev = 0
        k = 1
        while True:
            n_k = sum(c for o, c in counts.items() if (q ** k) % o == 0)
            s_k = _ilog(n_k, q)
            if s_k is None:
                raise ValueError(f"{n_k} elements with order dividing {q}^{k} is not a power of {q}")
            if s_k == prev:
                break
            exps.append(s_k - prev)
            prev = s_k
            k += 1
        if any(b > a for a, b in zip(exps, exps[1:])):
            raise ValueError(f"inconsistent {q}-primary statistics {exps}")
        primary[q] = [sum(1 for c in exps if c >= j) for j in range(1, exps[0] + 1)] if exps else []
    t = AbelianType.from_primary(primary)
    if order_counts(t) != +counts:
        raise ValueError("order statistics do not come from a finite abelian group")
    return t


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Table of a o b (apply b first)."""
    return a[b]


def inverse(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(len(a), dtype=a.dtype)
    return inv


def conjugate(g: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """phi o g o phi^{-1}: transport g along the bijection phi."""
    return phi[g[inverse(phi)]]


def permutation_order(g: np.ndarray) -> int:
    """lcm of the cycle lengths."""
    n = len(g)
    ident = np.arange(n)
    length = np.zeros(n, dtype=np.int64)
    cur = g
    k = 1
    while True:
        hit = (cur == ident) & (length == 0)
        length[hit] = k
        if length.all():
            break
        cur = g[cur]
        k += 1
    return int(np.lcm.reduce(np.unique(length))) if n else 1


class NotAbelianError(ValueError):
    pass


@dataclass
class PermGroup:
    """A finite abelian permutation group with a polycyclic presentation.

    ``generators`` are the generators that enlarged the group while closing;
    ``exponents[i]`` writes ``elements[i]`` as a word in them and
    ``relations`` generate all relations among them.
    """

    degree: int
    elements: list[np.ndarray]
    generators: list[np.ndarray] = field(default_factory=list)
    exponents: list[tuple[int, ...]] = field(default_factory=list)
    relations: list[list[int]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[bytes, int]:
        return {g.tobytes(): i for i, g in enumerate(self.elements)}

    def __contains__(self, g: np.ndarray) -> bool:
        return np.asarray(g, dtype=np.int64).tobytes() in self.index

    def element_orders(self) -> list[int]:
        return [permutation_order(g) for g in self.elements]

    @cached_property
    def type(self) -> AbelianType:
        return type_from_order_statistics(self.element_orders())

    def type_from_relations(self) -> AbelianType:
        """Independent route: Smith normal form of the relation matrix."""
        from .zlinalg import cokernel_type

        if not self.relations:
            return AbelianType.trivial()
        torsion, free = cokernel_type(self.relations)
        if free:
            raise AssertionError("relation lattice of a finite group has full rank")
        return torsion

    def orbits(self) -> list[list[int]]:
        return orbits(self.elements, self.degree)


def _as_table(g, degree: int | None) -> np.ndarray:
    a = np.asarray(g, dtype=np.int64)
    if a.ndim != 1 or (degree is not None and len(a) != degree):
        raise ValueError("permutation tables must be 1-d and of equal size")
    if not np.array_equal(np.bincount(a, minlength=len(a)), np.ones(len(a), dtype=np.int64)):
        raise ValueError("table is not a permutation")
    return a


def generate_group(tables: Sequence, degree: int | None = None,
                   max_order: int = DEFAULT_MAX_ORDER) -> PermGroup:
    """Closure of pairwise commuting permutation tables.

    Raises :class:`NotAbelianError` if a new generator fails to commute with
    the group built so far, and :class:`MemoryError` past ``max_order``.
    """
    if degree is None:
        degree = len(tables[0]) if len(tables) else 0
    ident = np.arange(degree, dtype=np.int64)
    elements = [ident]
    exps: list[tuple[int, ...]] = [()]
    index = {ident.tobytes(): 0}
    gens: list[np.ndarray] = []
    relations: list[list[int]] = []
    for raw in tables:
        g = _as_table(raw, degree)
        if g.tobytes() in index:
            continue
        for h in gens:
            if not np.array_equal(g[h], h[g]):
                raise NotAbelianError("generators do not commute: the group is not abelian")
        base = list(zip(elements, exps))
        r = len(gens)
        pw, k = g, 1
        while pw.tobytes() not in index:
            for e, ex in base:
                ne = pw[e]
                index[ne.tobytes()] = len(elements)
                elements.append(ne)
                exps.append(ex + (0,) * (r - len(ex)) + (k,))
            if len(elements) > max_order:
                raise MemoryError(f"group closure exceeds {max_order} elements")
            pw = g[pw]
            k += 1
        back = exps[index[pw.tobytes()]]
        back = back + (0,) * (r - len(back))
        relations.append([-c for c in back[:r]] + [k])
        gens.append(g)
    width = len(gens)
    for rel in relations:
        rel.extend([0] * (width - len(rel)))
    exps = [ex + (0,) * (width - len(ex)) for ex in exps]
    group = PermGroup(degree, elements, gens, exps, relations)
    group.__dict__["index"] = index
    return group


def orbits(elements: Sequence[np.ndarray], degree: int | None = None) -> list[list[int]]:
    """Orbit partition of a closed set of permutations, sorted by minimal point."""
    if degree is None:
        degree = len(elements[0])
    label = np.arange(degree, dtype=np.int64)
    for g in elements:
        np.minimum(label, g, out=label)
    # label[i] is now the least point of i's orbit because the set is closed.
    groups: dict[int, list[int]] = {}
    for i, m in enumerate(label.tolist()):
        groups.setdefault(m, []).append(i)
    return [groups[m] for m in sorted(groups)]
