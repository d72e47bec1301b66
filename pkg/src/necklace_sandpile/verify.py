"""Cross-module checks: group tables, sandpile isomorphisms, closed forms.

Every check returns a list of :class:`VerificationResult`, one per parameter
value, in a fixed order.  A failing comparison is a result, not an
exception; a check that runs out of budget is reported as ``skip``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .abgroup import DEFAULT_MAX_ORDER, AbelianType, direct_sum
from .bijection import family, golomb_group, reutenauer_group
from .circulant import count_units_brute_force, quotient_group_type, unit_group_order
from .debruijn import closed_form_doubling, closed_form_odd, gamma_sandpile
from .gfpoly import count_normal
from .golden import TABLES, TableRow
from .necklace import count_aperiodic

CHECKS = ("chan", "chp", "circulant", "lemma-odd", "lemma-doubling")

DEFAULT_RANGES = {
    "chan": [(2, n) for n in range(2, 17)],
    "chp": [(3, n) for n in range(2, 6)] + [(5, n) for n in range(2, 4)],
    "circulant": [(2, n) for n in range(2, 13)],
    "lemma-odd": [(2, n) for n in range(1, 36, 2)],
    "lemma-doubling": [(2, n) for n in range(2, 65, 2) if (n >> ((n & -n).bit_length() - 1)) <= 35],
}


@dataclass
class VerificationResult:
    check_name: str
    params: dict
    status: str  # "pass", "fail" or "skip"
    left: object = None
    right: object = None
    elapsed: float = 0.0
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, AbelianType):
                return x.to_json()
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            return x

        out = {
            "check": self.check_name,
            "params": self.params,
            "status": self.status,
            "left": enc(self.left),
            "right": enc(self.right),
            "elapsed": round(self.elapsed, 3),
        }
        if self.note:
            out["note"] = self.note
        return out

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        text = f"{self.status.upper():4}  {self.check_name}  {ps}  {self.left}  vs  {self.right}"
        return text + (f"  ({self.note})" if self.note else "")


def _timed(name: str, params: dict, fn: Callable[[], tuple]) -> VerificationResult:
    t0 = time.perf_counter()
    try:
        left, right = fn()
    except MemoryError as exc:
        return VerificationResult(name, params, "skip", elapsed=time.perf_counter() - t0, note=str(exc))
    status = "pass" if left == right else "fail"
    return VerificationResult(name, params, status, left, right, time.perf_counter() - t0)


def _reutenauer_type(p: int, n: int, max_order: int) -> AbelianType:
    if count_normal(p, n) > max_order:
        raise MemoryError(f"group order {count_normal(p, n)} exceeds {max_order}")
    return reutenauer_group(p, n).type


def check_chan(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> VerificationResult:
    """RG_n^2 against the sandpile group of its graph."""
    return _timed("chan", {"p": p, "n": n},
                  lambda: (_reutenauer_type(p, n, max_order), gamma_sandpile(p, n)))


def check_chp(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> VerificationResult:
    """RG_n^p against S(Gamma_n^p) + Z_{p-1}."""
    def run():
        s = direct_sum(gamma_sandpile(p, n), AbelianType.from_cyclic([p - 1]))
        return _reutenauer_type(p, n, max_order), s
    return _timed("chp", {"p": p, "n": n}, run)


def check_circulant(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> VerificationResult:
    """Circulant units modulo shifts against RG_n^p."""
    return _timed("circulant", {"p": p, "n": n},
                  lambda: (quotient_group_type(p, n, max_order), _reutenauer_type(p, n, max_order)))


def check_unit_count(p: int, n: int) -> VerificationResult:
    return _timed("unit-count", {"p": p, "n": n},
                  lambda: (unit_group_order(p, n), count_units_brute_force(p, n)))


def check_lemma_odd(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> VerificationResult:
    return _timed("lemma-odd", {"n": n}, lambda: (closed_form_odd(n), gamma_sandpile(2, n)))


def check_lemma_doubling(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> VerificationResult:
    return _timed("lemma-doubling", {"n": n}, lambda: (closed_form_doubling(n), gamma_sandpile(2, n)))


_DISPATCH = {
    "chan": check_chan,
    "chp": check_chp,
    "circulant": check_circulant,
    "lemma-odd": check_lemma_odd,
    "lemma-doubling": check_lemma_doubling,
}


def _run_one(job):
    name, p, n, max_order = job
    return _DISPATCH[name](p, n, max_order)


def run_checks(names=None, ranges: dict | None = None, max_order: int = DEFAULT_MAX_ORDER,
               jobs: int = 1) -> list[VerificationResult]:
    """Run the named checks over their ranges; results come back in (check, n) order."""
    names = list(CHECKS) if names in (None, "all") else ([names] if isinstance(names, str) else list(names))
    for name in names:
        if name not in _DISPATCH:
            raise ValueError(f"unknown check {name!r}")
    ranges = {**DEFAULT_RANGES, **(ranges or {})}
    work = [(name, p, n, max_order) for name in names for p, n in ranges[name]]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]


# -- table rows -----------------------------------------------------------------

def compute_row(kind: str, n: int, max_order: int = DEFAULT_MAX_ORDER) -> TableRow:
    """One row of the group table: |N_n^2|, |G|, type and orbit sizes."""
    if kind == "sandpile":
        t = gamma_sandpile(2, n)
        return TableRow(n, count_aperiodic(2, n), t.order, t, ())
    if kind == "reutenauer":
        _reutenauer_type(2, n, max_order)
        g = reutenauer_group(2, n)
    elif kind == "golomb":
        g = golomb_group(2, n)
    else:
        raise ValueError(f"unknown table {kind!r}")
    sizes = tuple(sorted((len(o) for o in g.orbits()), reverse=True))
    return TableRow(n, len(family(kind, 2, n).necklaces), g.order, g.type, sizes)


def compare_row(kind: str, row: TableRow) -> VerificationResult | None:
    """Compare a computed row with the reference table, if it has that n."""
    ref_kind = "reutenauer" if kind == "sandpile" else kind
    ref = TABLES[ref_kind].get(row.n)
    if ref is None:
        return None
    if kind == "sandpile":
        left, right = (row.necklaces, row.order, row.group), (ref.necklaces, ref.order, ref.group)
    else:
        left, right = row, ref
    status = "pass" if left == right else "fail"
    return VerificationResult(f"table-{kind}", {"n": row.n}, status,
                              str(left if kind == "sandpile" else row.to_json()),
                              str(right if kind == "sandpile" else ref.to_json()))


def format_row(row: TableRow) -> str:
    sizes = "+".join(str(s) for s in row.orbits) if row.orbits else "-"
    return f"{row.n}\t{row.necklaces}\t{row.order}\t{row.group}\t{sizes}"
