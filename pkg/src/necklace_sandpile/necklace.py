"""Aperiodic p-coloured necklaces, stored as Lyndon words.

A :class:`Necklace` always holds the lexicographically smallest rotation of
an aperiodic digit string.  Operations whose result may be periodic (the
averaging operator, :func:`canonicalize` itself) return the :data:`PERIODIC`
sentinel instead of raising, because "became periodic" is an ordinary
outcome there.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from ._numtheory import divisors, mobius

# enumerate_necklaces filters all p^n words up to this size, and runs Duval's
# generator above it.
EXHAUSTIVE_LIMIT = 1 << 16


class _Periodic:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "PERIODIC"

    def __str__(self):
        return "periodic"

    def __reduce__(self):
        return (_Periodic, ())


PERIODIC = _Periodic()


@dataclass(frozen=True, order=True)
class Necklace:
    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if min_rotation(self.digits) != self.digits or is_periodic(self.digits):
            raise ValueError(f"{self.digits} is not a Lyndon word")

    @property
    def n(self) -> int:
        return len(self.digits)

    def __str__(self):
        return format_digits(self.digits, self.p)

    def rotations(self) -> list[tuple[int, ...]]:
        d = self.digits
        return [d[i:] + d[:i] for i in range(len(d))]


def format_digits(digits: Sequence[int], p: int) -> str:
    if p > 10:
        return ",".join(str(d) for d in digits)
    return "".join(str(d) for d in digits)


def parse_necklace(text: str, p: int) -> Necklace:
    s = text.strip()
    digits = [int(t) for t in s.split(",")] if "," in s else [int(ch) for ch in s]
    result = canonicalize(digits, p)
    if result is PERIODIC:
        raise ValueError(f"{text!r} is periodic")
    return result


def min_rotation(digits: Sequence[int]) -> tuple[int, ...]:
    d = tuple(digits)
    return min(d[i:] + d[:i] for i in range(len(d))) if d else d


def is_periodic(digits: Sequence[int]) -> bool:
    d = tuple(digits)
    n = len(d)
    return any(n % k == 0 and d[k:] + d[:k] == d for k in range(1, n))


def canonicalize(digits: Sequence[int], p: int):
    """Minimal rotation as a :class:`Necklace`, or :data:`PERIODIC`."""
    d = tuple(int(v) for v in digits)
    if not d:
        raise ValueError("empty digit sequence")
    bad = [v for v in d if not 0 <= v < p]
    if bad:
        raise ValueError(f"digits {bad} out of range for {p} colours")
    if is_periodic(d):
        return PERIODIC
    return Necklace(p, min_rotation(d))


def lyndon_words(p: int, n: int) -> Iterator[tuple[int, ...]]:
    """Lyndon words of length exactly ``n`` in lexicographic order (Duval)."""
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            yield tuple(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == p - 1:
            w.pop()


def _exhaustive(p: int, n: int) -> Iterator[tuple[int, ...]]:
    for d in product(range(p), repeat=n):
        if min_rotation(d) == d and not is_periodic(d):
            yield d


def enumerate_necklaces(p: int, n: int, method: str = "auto") -> list[Necklace]:
    """All aperiodic necklaces of length ``n`` over ``p`` colours, sorted."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if method == "auto":
        method = "exhaustive" if p ** n <= EXHAUSTIVE_LIMIT else "duval"
    if method == "exhaustive":
        words = _exhaustive(p, n)
    elif method == "duval":
        words = lyndon_words(p, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    # Words are generated already canonical; skip re-validation.
    out = []
    for d in words:
        nk = object.__new__(Necklace)
        object.__setattr__(nk, "p", p)
        object.__setattr__(nk, "digits", d)
        out.append(nk)
    return out


def count_aperiodic(p: int, n: int) -> int:
    """(1/n) * sum over d | n of mu(d) p^(n/d)."""
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    return sum(int(mobius(d)) * p ** (n // d) for d in divisors(n)) // n


def averaging(v: Necklace):
    """{v_i} -> {v_i + v_{i+1}} with cyclic indices; may return PERIODIC."""
    d = v.digits
    n = len(d)
    return canonicalize([(d[i] + d[(i + 1) % n]) % v.p for i in range(n)], v.p)


def flip(v: Necklace) -> Necklace:
    """Swap the two colours."""
    if v.p != 2:
        raise ValueError("flip is defined for two colours only")
    return canonicalize([1 - a for a in v.digits], 2)


def digit_matrix(necklaces: Sequence[Necklace]) -> np.ndarray:
    """(N, n) int64 array of the canonical digit strings."""
    return np.array([v.digits for v in necklaces], dtype=np.int64)


def necklace_index(necklaces: Sequence[Necklace]) -> dict[tuple[int, ...], int]:
    """Map every rotation of every necklace to the necklace's position."""
    idx = {}
    for i, v in enumerate(necklaces):
        for r in v.rotations():
            idx[r] = i
    return idx
