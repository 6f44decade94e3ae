from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from symgenera.errors import InputError
from symgenera.symgroup import (
    ClassFunction,
    centralizer_order,
    character_table,
    class_size,
    cycle_type,
    functional,
    mn_character,
    partitions,
    permutation_of_type,
    sign,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_counts():
    for n, count in enumerate(PARTITION_COUNTS):
        assert len(partitions(n)) == count
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_by_enumeration(n):
    # independent oracle: count permutations by cycle type
    counts = Counter(cycle_type(p) for p in permutations(range(n)))
    for mu in partitions(n):
        assert class_size(mu) == counts[mu]
        assert centralizer_order(mu) * counts[mu] == factorial(n)


def test_sign_and_type():
    assert sign((2, 1)) == -1 and sign((3,)) == 1 and sign((2, 2)) == 1
    for mu in partitions(5):
        assert cycle_type(permutation_of_type(mu)) == mu


def test_s3_table():
    rows, cols, table = character_table(3)
    assert rows == ((3,), (2, 1), (1, 1, 1))
    assert cols == ((1, 1, 1), (2, 1), (3,))
    assert table == ((1, 1, 1), (2, 0, -1), (1, -1, 1))


def test_s4_values():
    assert mn_character((2, 2), (1, 1, 1, 1)) == 2
    assert mn_character((3, 1), (2, 2)) == -1
    assert mn_character((2, 1, 1), (4,)) == 1
    assert mn_character((2, 2), (3, 1)) == -1


def test_bad_partition():
    with pytest.raises(InputError):
        mn_character((2, 1), (2, 2))


@pytest.mark.parametrize("n", range(1, 8))
def test_orthogonality(n):
    rows, cols, table = character_table(n)
    chars = [ClassFunction.irreducible(lam) for lam in rows]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert a.inner(b) == (1 if i == j else 0)
    for c1 in cols:
        for c2 in cols:
            s = sum(mn_character(lam, c1) * mn_character(lam, c2) for lam in rows)
            assert s == (centralizer_order(c1) if c1 == c2 else 0)
    assert sum(mn_character(lam, (1,) * n) ** 2 for lam in rows) == factorial(n)


@given(st.integers(1, 7))
def test_functionals_on_trivial_and_sign(n):
    triv = ClassFunction.from_function(n, lambda mu: 1)
    sgn = ClassFunction.from_function(n, sign)
    assert functional("sigma", n)(triv) == 1
    assert functional("sigma", n)(sgn) == (1 if n == 1 else 0)
    assert functional("lambda", n)(sgn) == 1
    assert functional("psi", n)(triv) == 1
