from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graded_dims
from symgenera.errors import ConsistencyError, InputError
from symgenera.graded import (
    GradedDims,
    VirtualGradedDims,
    alt_power_brute,
    cycle_supertrace,
    cycle_traces,
    koszul_sign,
    phi_power,
    schur_multiplicity,
    sym_power_brute,
    tensor_power,
)
from symgenera.parse import parse_poly
from symgenera.prelambda import lambda_series, sigma_series
from symgenera.symgroup import functional, partitions


def naive_sym(V, n, alternating=False):
    """Independent count: graded symmetric power from monomial bases.

    Even basis vectors behave as polynomial variables, odd ones as exterior
    variables (swapped for the alternating power).
    """
    basis = [d for d, m in V.items() for _ in range(m)]
    out = {}
    for combo in combinations_with_replacement(range(len(basis)), n):
        odd_repeat = False
        for i in set(combo):
            odd = basis[i][2] % 2 == 1
            if combo.count(i) > 1 and (odd != alternating):
                odd_repeat = True
        if odd_repeat:
            continue
        deg = tuple(sum(basis[i][c] for i in combo) for c in range(3))
        out[deg] = out.get(deg, 0) + 1
    return GradedDims(out)


def test_koszul_sign():
    assert koszul_sign((1, 0), (1, 1)) == -1
    assert koszul_sign((1, 0), (1, 0)) == 1
    assert koszul_sign((2, 0, 1), (1, 1, 1)) == 1
    assert koszul_sign((1, 0, 2), (1, 1, 1)) == -1


def test_hodge_poly_round_trip():
    V = GradedDims({(0, 0, 0): 1, (1, 0, 1): 2, (0, 1, 1): 2, (1, 1, 2): 1})
    h = V.hodge_poly()
    assert h == parse_poly("1 - 2*y*z - 2*x*z + y*x*z^2")
    assert GradedDims.from_hodge_poly(h) == V


def test_negative_dims_rejected():
    with pytest.raises(InputError):
        GradedDims({(0, 0, 0): -1})
    assert VirtualGradedDims({(0, 0, 0): -1}).total_dim() == -1


def test_tensor_power():
    V = GradedDims({(0, 0, 0): 1, (1, 1, 2): 1})
    assert tensor_power(V, 3).hodge_poly() == V.hodge_poly() ** 3


def test_p1_powers(P1_dims):
    for n in range(1, 5):
        expected = parse_poly(" + ".join(f"y^{i}*x^{i}*z^{2*i}" for i in range(n + 1)))
        assert sym_power_brute(P1_dims, n).hodge_poly() == expected
    assert alt_power_brute(P1_dims, 2).hodge_poly() == parse_poly("y*x*z^2")
    assert alt_power_brute(P1_dims, 3) == GradedDims({})


def test_odd_line(odd_line):
    assert sym_power_brute(odd_line, 2) == GradedDims({})
    assert alt_power_brute(odd_line, 3) == GradedDims({(0, 3, 3): 1})


def test_supertraces(P1_dims, odd_line):
    assert cycle_supertrace(P1_dims, (2, 1)) == parse_poly("(1 + y^2*x^2*z^4)*(1 + y*x*z^2)")
    assert cycle_supertrace(odd_line, (2,)) == parse_poly("-x^2*z^2")


def test_elliptic_sym2():
    E = GradedDims.from_hodge_poly(parse_poly("1 - y*z - x*z + y*x*z^2"))
    expected = parse_poly("1 - x*z - y*z + 2*y*x*z^2 - y*x^2*z^3 - y^2*x*z^3 + y^2*x^2*z^4")
    assert sym_power_brute(E, 2).hodge_poly() == expected
    assert phi_power(E, functional("sigma", 2)).hodge_poly() == expected


def test_brute_force_guard():
    V = GradedDims({(0, 0, 0): 40})
    with pytest.raises(InputError, match="character"):
        sym_power_brute(V, 4)


def test_schur_for_p1(P1_dims):
    assert schur_multiplicity(P1_dims, 3, (3,)) == sym_power_brute(P1_dims, 3)
    assert schur_multiplicity(P1_dims, 3, (1, 1, 1)) == GradedDims({})
    assert schur_multiplicity(P1_dims, 3, (2, 1)).hodge_poly() == parse_poly("y*x*z^2 + y^2*x^2*z^4")


def test_non_integral_functional_detected():
    from fractions import Fraction
    from symgenera.symgroup import Functional

    half = Functional(2, {(1, 1): Fraction(1, 2)}, "half")
    with pytest.raises(ConsistencyError):
        phi_power(GradedDims({(0, 0, 0): 1}), half)


@settings(max_examples=40)
@given(graded_dims(max_dim=3), st.integers(1, 3))
def test_brute_matches_monomial_count(V, n):
    assert sym_power_brute(V, n) == naive_sym(V, n)
    assert alt_power_brute(V, n) == naive_sym(V, n, alternating=True)


@settings(max_examples=40)
@given(graded_dims(max_dim=3), st.integers(1, 3))
def test_trace_routes_agree(V, n):
    for mu in partitions(n):
        assert cycle_traces(V, mu, "adams") == cycle_traces(V, mu, "brute")


@settings(max_examples=40)
@given(graded_dims(max_dim=3), st.integers(1, 4))
def test_series_route(V, n):
    h = V.hodge_poly()
    assert sym_power_brute(V, n).hodge_poly() == sigma_series(h, n)[n]
    assert alt_power_brute(V, n).hodge_poly() == lambda_series(h, n)[n]


@settings(max_examples=30)
@given(graded_dims(max_dim=3), st.integers(1, 4))
def test_schur_decomposition_is_complete(V, n):
    from symgenera.symgroup import mn_character

    total = VirtualGradedDims({})
    for lam in partitions(n):
        S = schur_multiplicity(V, n, lam)
        dim = mn_character(lam, (1,) * n)
        total = total + VirtualGradedDims({d: m * dim for d, m in S.items()})
    assert total == tensor_power(V, n)
