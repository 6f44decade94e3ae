import pytest
from hypothesis import given, settings, strategies as st

from conftest import graded_dims, laurent_polys
from symgenera.errors import ConsistencyError, InputError
from symgenera.genera import (
    GenusProfile,
    configuration_series,
    invariant_of_configuration_space,
    invariant_of_symmetric_product,
    signature_series,
    specialization_bridge,
    symmetric_series,
)
from symgenera.graded import GradedDims, alt_power_brute, sym_power_brute
from symgenera.laurent import YXZ, LaurentPoly
from symgenera.parse import parse_poly
from symgenera.series import TruncatedSeries

P1 = GenusProfile("P1", "hodge", parse_poly("1 + y*x*z^2"))
P2 = GenusProfile("P2", "hodge", parse_poly("1 + y*x*z^2 + y^2*x^2*z^4"))
E = GenusProfile("E", "hodge", parse_poly("1 - y*z - x*z + y*x*z^2"))


def test_p1_symmetric_products_are_projective_spaces():
    s = symmetric_series(P1, 6)
    L = parse_poly("y*x*z^2")
    for n in range(7):
        assert s[n] == sum((L**i for i in range(n + 1)), LaurentPoly.zero(YXZ))


def test_sym2_elliptic():
    h = invariant_of_symmetric_product(E, 2)
    assert h == parse_poly("1 - x*z - y*z + 2*y*x*z^2 - y*x^2*z^3 - y^2*x*z^3 + y^2*x^2*z^4")
    betti = h.specialize(y=1, x=1)
    # (-z)^k convention: coefficients of (-z)^k are the Betti numbers
    assert [betti.coefficient((k,)) * (-1) ** k for k in range(5)] == [1, 2, 2, 2, 1]


def test_euler_series():
    s = symmetric_series(GenusProfile("S2", "euler", 2), 8)
    assert s.coeffs == tuple(n + 1 for n in range(9))
    assert symmetric_series(GenusProfile("pt", "euler", 1), 4).coeffs == (1,) * 5


def test_chi_y_p2_sym2_matches_brute_force():
    V = GradedDims.from_hodge_poly(P2.data)
    chi_y = GenusProfile("P2", "chi_y", parse_poly("1 + y + y^2", "y"))
    brute = sym_power_brute(V, 2).hodge_poly().specialize(x=1, z=1)
    assert invariant_of_symmetric_product(chi_y, 2) == brute


def test_signature_values():
    assert signature_series(1, 3, 6).coeffs == (1, 1, 2, 2, 3, 3, 4)
    assert signature_series(0, 2, 5).coeffs == (1, 0, 1, 0, 1, 0)
    with pytest.raises(InputError, match="parity"):
        signature_series(0, 1)


def test_signature_cross_check():
    chi_y = GenusProfile("P2", "chi_y", parse_poly("1 + y + y^2", "y"))
    assert signature_series(1, 3, 8, chi_y=chi_y)[5] == 3
    with pytest.raises(InputError):
        signature_series(1, 5, 4, chi_y=chi_y)


def test_configuration_series_p1():
    s = configuration_series(P1, 4)
    assert s.coeffs[2] == parse_poly("y*x*z^2")
    assert s.coeffs[3] == 0


def test_configuration_matches_alternating_brute_force():
    V = GradedDims.from_hodge_poly(E.data)
    for n in range(1, 4):
        assert invariant_of_configuration_space(E, n) == alt_power_brute(V, n).hodge_poly()


def test_configuration_kinds():
    with pytest.raises(InputError):
        configuration_series(GenusProfile("pt", "euler", 1), 3)


def test_profile_validation():
    with pytest.raises(InputError):
        GenusProfile("bad", "hodge", parse_poly("1/2*y"))
    with pytest.raises(InputError):
        GenusProfile("bad", "hodge", parse_poly("y*z"))  # negative dimension in degree k=1
    with pytest.raises(InputError):
        GenusProfile("bad", "volume", 3)
    with pytest.raises(InputError):
        GenusProfile("bad", "euler", 1.5)
    assert GenusProfile("c", "betti", 3).data == LaurentPoly.constant("z", 3)


def test_disjoint_union():
    assert (P1 + P2).data == parse_poly("2 + 2*y*x*z^2 + y^2*x^2*z^4")


def test_specialization_bridge():
    sp = specialization_bridge(P1)
    assert sp.e.data == parse_poly("1 + y*x", "yx")
    assert sp.chi_y.data == parse_poly("1 + y", "y")
    assert (sp.euler, sp.arithmetic_genus, sp.signature) == (2, 1, (0, 2))
    sp = specialization_bridge(E)
    assert (sp.euler, sp.arithmetic_genus, sp.signature) == (0, 0, (0, 0))
    with pytest.raises(InputError):
        specialization_bridge(GenusProfile("pt", "euler", 1))


def test_disagreement_is_reported(monkeypatch):
    import symgenera.genera as genera

    monkeypatch.setattr(genera, "sigma_series", lambda a, order: TruncatedSeries.one(order, a.variables))
    with pytest.raises(ConsistencyError):
        genera.symmetric_series(P1, 3)


@settings(max_examples=40)
@given(laurent_polys(), laurent_polys())
def test_multiplicativity(a, b):
    A = GenusProfile("A", "hodge", a) if _is_hodge(a) else None
    B = GenusProfile("B", "hodge", b) if _is_hodge(b) else None
    if A is None or B is None:
        A = GenusProfile("A", "e", a.specialize(z=1))
        B = GenusProfile("B", "e", b.specialize(z=1))
    assert symmetric_series(A + B, 6) == symmetric_series(A, 6) * symmetric_series(B, 6)
    assert configuration_series(A + B, 6) == configuration_series(A, 6) * configuration_series(B, 6)


def _is_hodge(p):
    try:
        GradedDims.from_hodge_poly(p)
    except InputError:
        return False
    return True


@settings(max_examples=30)
@given(graded_dims(max_dim=3, k_range=(0, 3)))
def test_signature_closed_form_matches_chi_y(V):
    chi_y = V.hodge_poly().specialize(x=1, z=1)
    sigma, chi = chi_y.evaluate(y=-1), chi_y.evaluate(y=1)
    if (sigma - chi) % 2:
        return
    profile = GenusProfile("V", "chi_y", chi_y)
    assert signature_series(int(sigma), int(chi), 8, chi_y=profile) == symmetric_series(profile, 8).specialize(y=-1)


@given(st.integers(-4, 4))
def test_euler_specialization_commutes(chi):
    # Euler series of a point-like virtual space = chi_y series at y = 1
    profile = GenusProfile("c", "chi_y", LaurentPoly.constant("y", chi))
    assert symmetric_series(profile, 6).specialize(y=1) == symmetric_series(GenusProfile("c", "euler", chi), 6)
