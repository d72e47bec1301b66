"""Orbits of the necklace groups and what the averaging operator does to them.

Orbits are numbered by their smallest necklace, so orbit 0 is the one that
contains 00...01.  Whether averaging sends whole orbits to whole orbits is
an empirical statement, so a mixed image is recorded as data
(:class:`MixedImage`) rather than being ruled out by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .abgroup import AbelianType, PermGroup
from .bijection import family, golomb_group, reutenauer_group
from .necklace import PERIODIC, Necklace, averaging, flip


@dataclass(frozen=True)
class MixedImage:
    """Averaging sent one orbit into several orbits (and/or to periodic)."""

    targets: frozenset


@dataclass
class OrbitReport:
    n: int
    p: int
    kind: str
    group_type: AbelianType
    group_order: int
    orbits: list[list[Necklace]]
    main_orbit: int | None = None
    main_orbit_count: int = 0
    averaging_graph: dict = field(default_factory=dict)
    flip_extended: list[list[Necklace]] | None = None
    flip_violations: list[list[int]] = field(default_factory=list)
    group: PermGroup | None = field(default=None, repr=False, compare=False)
    necklaces: list[Necklace] | None = field(default=None, repr=False, compare=False)

    @property
    def flip_extended_sizes(self) -> list[int] | None:
        if self.flip_extended is None:
            return None
        return sorted((len(o) for o in self.flip_extended), reverse=True)

    @property
    def orbit_sizes(self) -> list[int]:
        return sorted((len(o) for o in self.orbits), reverse=True)

    @property
    def violations(self) -> dict:
        return {i: t for i, t in self.averaging_graph.items() if isinstance(t, MixedImage)}

    def orbit_of(self) -> dict[Necklace, int]:
        return {v: i for i, orb in enumerate(self.orbits) for v in orb}

    def to_json(self) -> dict:
        def target(t):
            if t is PERIODIC:
                return None
            if isinstance(t, MixedImage):
                return {"mixed": sorted(str(x) for x in t.targets)}
            return t

        out = {
            "n": self.n,
            "p": self.p,
            "group": self.kind,
            "type": str(self.group_type),
            "order": str(self.group_order),
            "orbit_sizes": self.orbit_sizes,
            "orbits": [[str(v) for v in orb] for orb in self.orbits],
            "main_orbit": self.main_orbit,
            "main_orbit_count": self.main_orbit_count,
        }
        if self.averaging_graph:
            out["averaging"] = {str(i): target(t) for i, t in self.averaging_graph.items()}
            out["averaging_chains"] = format_chains(self)
        if self.flip_extended is not None:
            out["flip_extended_sizes"] = self.flip_extended_sizes
            out["flip_extended"] = [[str(v) for v in orb] for orb in self.flip_extended]
            out["flip_violations"] = self.flip_violations
        return out


def orbit_report(group: PermGroup, necklaces: list[Necklace], kind: str = "reutenauer") -> OrbitReport:
    v0 = necklaces[0]
    orbits = [[necklaces[i] for i in orb] for orb in group.orbits()]
    rep = OrbitReport(v0.n, v0.p, kind, group.type, group.order, orbits,
                      group=group, necklaces=list(necklaces))
    rep.main_orbit, rep.main_orbit_count = find_main_orbit(rep)
    return rep


def group_report(kind: str, p: int, n: int, with_averaging: bool = True,
                 with_flip: bool = False) -> OrbitReport:
    fam = family(kind, p, n)
    group = reutenauer_group(p, n) if kind == "reutenauer" else golomb_group(p, n)
    rep = orbit_report(group, fam.necklaces, kind)
    if with_averaging:
        rep.averaging_graph = averaging_on_orbits(rep)
    if with_flip:
        extend_by_flip(rep)
    return rep


def averaging_on_orbits(report: OrbitReport) -> dict:
    """orbit index -> target orbit index, PERIODIC, or :class:`MixedImage`."""
    where = report.orbit_of()
    graph = {}
    for i, orb in enumerate(report.orbits):
        targets = set()
        for v in orb:
            w = averaging(v)
            targets.add(PERIODIC if w is PERIODIC else where[w])
        if len(targets) == 1:
            graph[i] = targets.pop()
        else:
            graph[i] = MixedImage(frozenset(targets))
    return graph


def format_chains(report: OrbitReport) -> str:
    """Averaging chains such as ``O_1 → O_2 → O_3 → O_3, O_4 → ∅``.

    A chain starts at every orbit that is not itself an image and stops at
    the first repeated orbit or at ∅ (periodic).
    """
    graph = report.averaging_graph
    if report.violations:
        raise ValueError("averaging does not act on orbits here")
    hit = {t for t in graph.values() if isinstance(t, int)}
    starts = [i for i in graph if i not in hit]
    chains = []
    for s in starts:
        seen = [s]
        while True:
            t = graph[seen[-1]]
            if t is PERIODIC:
                seen.append(None)
                break
            seen.append(t)
            if t in seen[:-1]:
                break
        chains.append(" → ".join("∅" if i is None else f"O_{i + 1}" for i in seen))
    return ", ".join(chains)


def find_main_orbit(report: OrbitReport) -> tuple[int | None, int]:
    """First orbit on which the group acts simply transitively, and how many do."""
    group = report.group
    pos = {v: i for i, v in enumerate(report.necklaces)}
    stacked = np.stack(group.elements)
    found = []
    for k, orb in enumerate(report.orbits):
        if len(orb) != group.order:
            continue
        images = stacked[:, pos[orb[0]]]
        if len(np.unique(images)) == group.order:
            found.append(k)
    return (found[0] if found else None), len(found)


def _components(degree: int, perms: list[np.ndarray]) -> list[list[int]]:
    parent = list(range(degree))

    def root(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in perms:
        for a, b in enumerate(g.tolist()):
            ra, rb = root(a), root(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    comps: dict[int, list[int]] = {}
    for a in range(degree):
        comps.setdefault(root(a), []).append(a)
    return [comps[r] for r in sorted(comps)]


def extend_by_flip(report: OrbitReport) -> OrbitReport:
    """Fill in the orbits of the report's group extended by the colour flip.

    Extended orbits that are not a union of one or two plain orbits are
    listed in ``report.flip_violations`` (as plain orbit indices).
    """
    group, necklaces = report.group, report.necklaces
    if report.p != 2:
        raise ValueError("the flip extension is defined for two colours only")
    pos = {v: i for i, v in enumerate(necklaces)}
    f = np.array([pos[flip(v)] for v in necklaces], dtype=np.int64)
    comps = _components(len(necklaces), list(group.generators) + [f])
    where = report.orbit_of()
    report.flip_violations = []
    for comp in comps:
        plain = {where[necklaces[i]] for i in comp}
        if len(plain) not in (1, 2):
            report.flip_violations.append(sorted(plain))
    report.flip_extended = [[necklaces[i] for i in comp] for comp in comps]
    return report


def flip_extended_orbits(n: int, p: int = 2) -> OrbitReport:
    """Reutenauer orbit report for two colours, with the flip extension."""
    if p != 2:
        raise ValueError("the flip extension is defined for two colours only")
    return group_report("reutenauer", 2, n, with_averaging=False, with_flip=True)


def averaging_coverage(report: OrbitReport) -> tuple[int, int]:
    """(orbits reached by iterated averaging from the main orbit, total orbits)."""
    if report.main_orbit is None:
        return 0, len(report.orbits)
    graph = report.averaging_graph or averaging_on_orbits(report)
    seen = set()
    cur = report.main_orbit
    while isinstance(cur, int) and cur not in seen:
        seen.add(cur)
        cur = graph[cur]
    return len(seen), len(report.orbits)
