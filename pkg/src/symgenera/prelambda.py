"""Pre-lambda structures on the integers and on Laurent polynomial rings.

Elements are plain ``int`` (the ring Z, with sigma_t(a) = (1-t)^(-a)) or
:class:`LaurentPoly` with integer coefficients, where

    sigma_t(sum a_k x^k) = prod_k (1 - x^k t)^(-a_k).

``lambda_t(a) = sigma_{-t}(a)^(-1)`` is the opposite structure.  Adams
operations are read off the logarithmic derivative; on Z they are the
identity and on Laurent polynomials they are ``x -> x^r``.
"""

from __future__ import annotations

from typing import Sequence, Union

from .errors import InputError
from .laurent import LaurentPoly
from .series import TruncatedSeries, binomial_series, geometric_factor, sum_over_r

Element = Union[int, LaurentPoly]


def _check_element(a):
    if isinstance(a, bool) or not isinstance(a, (int, LaurentPoly)):
        raise InputError(f"pre-lambda element must be int or LaurentPoly, got {type(a).__name__}")
    if isinstance(a, LaurentPoly) and not a.is_integral():
        raise InputError(f"sigma_t of {a} needs integer coefficients")


def sigma_series(a: Element, order: int) -> TruncatedSeries:
    """sigma_t(a) truncated at t^order (product form)."""
    _check_element(a)
    if isinstance(a, int):
        return binomial_series(a, order)
    result = TruncatedSeries.one(order, a.variables)
    for exps, c in a.terms():
        m = LaurentPoly.monomial(a.variables, exps)
        result = result * geometric_factor(m, c, order)
    return result


def lambda_series(a: Element, order: int) -> TruncatedSeries:
    """lambda_t(a) = sigma_{-t}(a)^(-1)."""
    return sigma_series(a, order).negate_t().inverse()


def _check_unit_constant(s: TruncatedSeries):
    if not isinstance(s, TruncatedSeries):
        raise InputError(f"expected TruncatedSeries, got {type(s).__name__}")
    if s[0] != 1:
        raise InputError(f"series must have constant term 1, got {s[0]}")


def _order(s: TruncatedSeries, order):
    if order is None:
        return s.order
    if order > s.order:
        raise InputError(f"requested {order} Adams operations from a series of order {s.order}")
    return order


def adams_from_sigma(s: TruncatedSeries, order: int | None = None) -> list:
    """Psi_1..Psi_N such that s = exp(sum Psi_r t^r / r), via log."""
    _check_unit_constant(s)
    N = _order(s, order)
    logs = s.log()
    return [logs[r] * r for r in range(1, N + 1)]


def adams_newton(s: TruncatedSeries, order: int | None = None) -> list:
    """Same as :func:`adams_from_sigma`, via the Newton recurrence
    r s_r = sum_{i=1..r} Psi_i s_{r-i}."""
    _check_unit_constant(s)
    N = _order(s, order)
    psi = []
    for r in range(1, N + 1):
        acc = s[r] * r
        for i in range(1, r):
            acc = acc - psi[i - 1] * s[r - i]
        psi.append(acc)
    return psi


def adams_from_lambda(lam: TruncatedSeries, order: int | None = None) -> list:
    """Adams operations from lambda_t, using
    d/dt log lambda_t = sum (-1)^(r-1) Psi_r t^(r-1)."""
    _check_unit_constant(lam)
    N = _order(lam, order)
    dlog = (lam.derivative() * lam.truncate(max(lam.order - 1, 0)).inverse()) if lam.order else None
    psi = []
    for r in range(1, N + 1):
        c = dlog[r - 1]
        psi.append(c if r % 2 else -c)
    return psi


def _ring_of(psi: Sequence):
    for p in psi:
        if isinstance(p, LaurentPoly):
            return p.variables
    return None


def sigma_from_adams(psi: Sequence, order: int, ring=None) -> TruncatedSeries:
    """exp(sum_{r=1..N} Psi_r t^r / r)."""
    if len(psi) < order:
        raise InputError(f"need {order} Adams values, got {len(psi)}")
    ring = ring if ring is not None else _ring_of(psi)
    return sum_over_r(psi, order, ring).exp()


def lambda_from_adams(psi: Sequence, order: int, ring=None) -> TruncatedSeries:
    """exp(sum_{r=1..N} (-1)^(r-1) Psi_r t^r / r)."""
    if len(psi) < order:
        raise InputError(f"need {order} Adams values, got {len(psi)}")
    ring = ring if ring is not None else _ring_of(psi)
    return sum_over_r(psi, order, ring, sign_alternating=True).exp()


def adams(a: Element, r: int) -> Element:
    """Psi_r on the ring itself: identity on Z, exponent scaling on Laurent polynomials."""
    if isinstance(a, bool) or not isinstance(a, (int, LaurentPoly)):
        raise InputError(f"pre-lambda element must be int or LaurentPoly, got {type(a).__name__}")
    if not isinstance(r, int) or r < 1:
        raise InputError(f"Adams operation needs r >= 1, got {r!r}")
    return a if isinstance(a, int) else a.adams(r)


__all__ = [
    "Element",
    "adams",
    "adams_from_lambda",
    "adams_from_sigma",
    "adams_newton",
    "lambda_from_adams",
    "lambda_series",
    "sigma_from_adams",
    "sigma_series",
]
