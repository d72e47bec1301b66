import numpy as np
import pytest

from necklace_sandpile.abgroup import generate_group
from necklace_sandpile.golden import AVERAGING_CHAINS, ORBITS, REUTENAUER_TABLE
from necklace_sandpile.necklace import PERIODIC, enumerate_necklaces, flip
from necklace_sandpile.orbitlab import (
    MixedImage,
    OrbitReport,
    averaging_coverage,
    averaging_on_orbits,
    find_main_orbit,
    flip_extended_orbits,
    format_chains,
    group_report,
    orbit_report,
)


def as_sets(report):
    return [sorted(str(v) for v in o) for o in report.orbits]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_listed_orbits_and_chains(n):
    rep = group_report("reutenauer", 2, n)
    assert as_sets(rep) == [sorted(o) for o in ORBITS[n]]
    assert format_chains(rep) == AVERAGING_CHAINS[n]


def test_n6_graph_values():
    rep = group_report("reutenauer", 2, 6)
    assert rep.averaging_graph == {0: 1, 1: 2, 2: 2, 3: PERIODIC}


def test_orbit_sizes_n14():
    rep = group_report("reutenauer", 2, 14, with_averaging=False)
    assert tuple(rep.orbit_sizes) == REUTENAUER_TABLE[14].orbits


def test_trivial_group():
    neck = enumerate_necklaces(2, 4)
    g = generate_group([], degree=len(neck))
    rep = orbit_report(g, neck)
    assert rep.orbit_sizes == [1, 1, 1]
    assert find_main_orbit(rep) == (0, 3)


def test_main_orbit_examples():
    rep11 = group_report("reutenauer", 2, 11, with_averaging=False)
    assert (rep11.main_orbit, rep11.main_orbit_count) == (0, 2)
    assert len(rep11.orbits[0]) == 93
    rep12 = group_report("reutenauer", 2, 12, with_averaging=False)
    assert len(rep12.orbits[rep12.main_orbit]) == 128


def test_main_orbit_rejects_non_free_action():
    # Z_2 acting on three points with a fixed point: orbit {0, 1} is free,
    # the fixed point is not of full size
    neck = enumerate_necklaces(2, 4)
    g = generate_group([np.array([2, 1, 0])])
    rep = orbit_report(g, neck)
    assert find_main_orbit(rep) == (0, 1)


def test_mixed_images_are_recorded():
    # put 0001 and 0011 in one "orbit": averaging sends them to 0011 and periodic
    neck = enumerate_necklaces(2, 4)
    rep = OrbitReport(4, 2, "test", None, 2, [[neck[0], neck[1]], [neck[2]]])
    graph = averaging_on_orbits(rep)
    assert isinstance(graph[0], MixedImage)
    assert graph[0].targets == frozenset({0, PERIODIC})
    rep.averaging_graph = graph
    assert 0 in rep.violations
    with pytest.raises(ValueError):
        format_chains(rep)


def test_flip_extension():
    rep4 = flip_extended_orbits(4)
    assert sorted(sorted(str(v) for v in o) for o in rep4.flip_extended) == [["0001", "0111"], ["0011"]]
    rep5 = flip_extended_orbits(5)
    assert rep5.flip_extended_sizes == [6]
    with pytest.raises(ValueError):
        flip_extended_orbits(4, p=3)


@pytest.mark.parametrize("n", range(2, 13))
def test_flip_extended_orbits_are_unions_of_one_or_two(n):
    rep = flip_extended_orbits(n)
    assert rep.flip_violations == []
    plain = rep.orbit_of()
    for ext in rep.flip_extended:
        sizes = {len(rep.orbits[plain[v]]) for v in ext}
        assert len(ext) in {s for s in sizes} | {2 * s for s in sizes}
        assert {flip(v) for v in ext} == set(ext)


@pytest.mark.parametrize("n", range(2, 16))
def test_no_mixed_averaging_and_main_orbit_exists(n):
    rep = group_report("reutenauer", 2, n)
    assert rep.violations == {}
    assert rep.main_orbit is not None
    reached, total = averaging_coverage(rep)
    assert 1 <= reached <= total


def test_json_shape():
    js = group_report("reutenauer", 2, 6, with_flip=True).to_json()
    assert js["averaging_chains"] == AVERAGING_CHAINS[6]
    assert js["averaging"]["3"] is None
    assert js["orbit_sizes"] == [4, 2, 2, 1]
    assert js["flip_extended_sizes"] == [4, 4, 1]


def test_golomb_report():
    rep = group_report("golomb", 2, 10, with_averaging=False)
    assert rep.orbit_sizes == [60, 30, 6, 2, 1]
