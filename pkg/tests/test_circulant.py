import random

import pytest
import sympy

from necklace_sandpile.abgroup import AbelianType, direct_sum
from necklace_sandpile.bijection import reutenauer_group
from necklace_sandpile.circulant import (
    CirculantFp,
    count_units_brute_force,
    cyclotomic_cosets,
    is_unit,
    quotient_group_type,
    unit_group_order,
)
from necklace_sandpile.debruijn import gamma_sandpile


def test_matrix_layout_and_shifts():
    c = CirculantFp(5, (1, 2, 3))
    assert c.matrix() == [[1, 2, 3], [3, 1, 2], [2, 3, 1]]
    s = CirculantFp.shift(2, 5)
    assert s * s == CirculantFp.shift(2, 5, 2)
    assert s ** 5 == CirculantFp.identity(2, 5)


def test_product_is_matrix_product(seed):
    rng = random.Random(seed)
    for _ in range(50):
        p, n = rng.choice([2, 3, 5]), rng.randint(1, 7)
        a = CirculantFp(p, [rng.randrange(p) for _ in range(n)])
        b = CirculantFp(p, [rng.randrange(p) for _ in range(n)])
        prod = (sympy.Matrix(a.matrix()) * sympy.Matrix(b.matrix())).applyfunc(lambda x: x % p)
        assert prod.tolist() == (a * b).matrix()


def test_is_unit_against_determinant(seed):
    rng = random.Random(seed)
    for _ in range(100):
        p, n = rng.choice([2, 3, 5]), rng.randint(1, 6)
        a = CirculantFp(p, [rng.randrange(p) for _ in range(n)])
        assert is_unit(a) == (sympy.Matrix(a.matrix()).det() % p != 0)


def test_coset_rep_is_shift_invariant():
    a = CirculantFp(3, (1, 2, 0, 1))
    reps = {(a * CirculantFp.shift(3, 4, k)).coset_rep() for k in range(4)}
    assert reps == {a.coset_rep()}


def test_cyclotomic_cosets():
    assert cyclotomic_cosets(2, 7) == [[0], [1, 2, 4], [3, 6, 5]]


@pytest.mark.parametrize("p,n", [(2, n) for n in range(1, 17)] + [(3, n) for n in range(1, 10)] + [(5, n) for n in range(1, 7)] + [(7, 5)])
def test_unit_count_formula_against_brute_force(p, n):
    if p ** n > 1 << 16:
        pytest.skip("brute force limited to 2^16 rows")
    assert unit_group_order(p, n) == count_units_brute_force(p, n)


@pytest.mark.parametrize("n", range(1, 13))
def test_quotient_matches_reutenauer_group(n):
    assert quotient_group_type(2, n) == reutenauer_group(2, n).type


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3)])
def test_quotient_matches_sandpile_plus_cyclic(p, n):
    q = quotient_group_type(p, n)
    assert q == direct_sum(gamma_sandpile(p, n), AbelianType.from_cyclic([p - 1]))


def test_cap():
    with pytest.raises(MemoryError):
        quotient_group_type(2, 12, max_order=10)
    with pytest.raises(ValueError):
        CirculantFp(2, ())
    with pytest.raises(ValueError):
        CirculantFp(2, (1, 0)) * CirculantFp(2, (1, 0, 0))
