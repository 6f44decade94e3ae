"""Generating series for genera of symmetric products and configuration spaces.

Every series is computed twice, once as a product of binomial factors and once
as ``exp(sum_r Psi_r(data) t^r / r)``, and the two must agree exactly;
disagreement raises :class:`ConsistencyError`.

>>> from symgenera.parse import parse_poly
>>> p1 = GenusProfile("P1", "hodge", parse_poly("1 + y*x*z^2"))
>>> print(invariant_of_symmetric_product(p1, 3))
1 + y*x*z^2 + y^2*x^2*z^4 + y^3*x^3*z^6
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import ConsistencyError, InputError
from .graded import GradedDims, VirtualGradedDims
from .laurent import YX, YXZ, Y, Z, LaurentPoly, VariableSet
from .prelambda import lambda_from_adams, sigma_from_adams, sigma_series
from .series import DEFAULT_ORDER, TruncatedSeries, binomial_series, geometric_factor

POLY_KINDS = {"hodge": YXZ, "e": YX, "chi_y": Y, "betti": Z}
KINDS = ("hodge", "e", "chi_y", "betti", "euler", "signature")
CONFIG_KINDS = ("hodge", "e", "chi_y")

Data = Union[LaurentPoly, int, tuple]


@dataclass(frozen=True)
class GenusProfile:
    """Invariant of a space X fed into the series formulas.

    ``data`` is a LaurentPoly for hodge (y,x,z), e (y,x), chi_y (y) and betti (z);
    an int for euler; a ``(sigma, chi)`` pair for signature.  ``compact_support``
    and ``label`` are descriptive only.
    """

    name: str
    kind: str
    data: Data
    compact_support: bool = False
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown profile kind {self.kind!r} (expected one of {', '.join(KINDS)})")
        if self.kind in POLY_KINDS:
            data = self.data
            if not isinstance(data, LaurentPoly):
                if isinstance(data, int) and not isinstance(data, bool):
                    data = LaurentPoly.constant(POLY_KINDS[self.kind], data)
                else:
                    raise InputError(f"{self.kind} profile {self.name!r} needs a LaurentPoly")
            want = POLY_KINDS[self.kind]
            if data.variables != want:
                data = data.change_variables(want)
            if not data.is_integral():
                raise InputError(f"{self.kind} data of {self.name!r} has non-integer coefficients: {data}")
            if self.kind == "hodge":
                try:
                    GradedDims.from_hodge_poly(data)
                except InputError as exc:
                    raise InputError(
                        f"hodge data of {self.name!r} is not the (-z)^k-signed polynomial "
                        f"of a graded space: {exc}"
                    ) from None
            object.__setattr__(self, "data", data)
        elif self.kind == "euler":
            if isinstance(self.data, bool) or not isinstance(self.data, int):
                raise InputError(f"euler profile {self.name!r} needs an integer")
        else:
            try:
                sigma, chi = self.data
            except (TypeError, ValueError):
                raise InputError(f"signature profile {self.name!r} needs a (sigma, chi) pair") from None
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in (sigma, chi)):
                raise InputError(f"signature profile {self.name!r} needs integer sigma and chi")
            object.__setattr__(self, "data", (sigma, chi))

    @classmethod
    def from_graded(cls, name: str, V: VirtualGradedDims, **kwargs) -> GenusProfile:
        return cls(name, "hodge", V.hodge_poly(), **kwargs)

    @property
    def variables(self) -> VariableSet | None:
        return POLY_KINDS.get(self.kind)

    def __add__(self, other: GenusProfile) -> GenusProfile:
        """Disjoint union: invariants add."""
        if not isinstance(other, GenusProfile):
            return NotImplemented
        if other.kind != self.kind:
            raise InputError(f"cannot add {self.kind} and {other.kind} profiles")
        if self.kind == "signature":
            data = (self.data[0] + other.data[0], self.data[1] + other.data[1])
        else:
            data = self.data + other.data
        return GenusProfile(
            f"{self.name} + {other.name}", self.kind, data, self.compact_support and other.compact_support
        )


def _check_order(order):
    if isinstance(order, bool) or not isinstance(order, int) or order < 0:
        raise InputError(f"order must be a nonnegative integer, got {order!r}")


def _agree(name: str, product: TruncatedSeries, exp_form: TruncatedSeries) -> TruncatedSeries:
    if product != exp_form:
        raise ConsistencyError(f"product form and exp form disagree for {name!r}:\n  {product}\n  {exp_form}")
    if not product.is_integral():
        raise ConsistencyError(f"series for {name!r} has non-integer coefficients: {product}")
    return product


def symmetric_series(profile: GenusProfile, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_n I(X^(n)) t^n for the invariant described by ``profile``."""
    _check_order(order)
    if profile.kind == "signature":
        return signature_series(*profile.data, order)
    if profile.kind == "euler":
        chi = profile.data
        product = binomial_series(chi, order)
        exp_form = sigma_from_adams([chi] * order, order)
        return _agree(profile.name, product, exp_form)
    data = profile.data
    product = sigma_series(data, order)
    exp_form = sigma_from_adams([data.adams(r) for r in range(1, order + 1)], order, data.variables)
    return _agree(profile.name, product, exp_form)


def configuration_series(profile: GenusProfile, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_n I(X^{n}) t^n for unordered configuration spaces (alternating powers)."""
    _check_order(order)
    if profile.kind not in CONFIG_KINDS:
        raise InputError(f"configuration series need a hodge, e or chi_y profile, got {profile.kind!r}")
    data = profile.data
    product = TruncatedSeries.one(order, data.variables)
    for exps, c in data.terms():
        m = LaurentPoly.monomial(data.variables, exps)
        # (1 + m t)^c
        product = product * geometric_factor(m, -c, order).negate_t()
    exp_form = lambda_from_adams([data.adams(r) for r in range(1, order + 1)], order, data.variables)
    return _agree(profile.name, product, exp_form)


def _check_parity(sigma: int, chi: int):
    if (sigma - chi) % 2:
        raise InputError(
            f"signature {sigma} and Euler characteristic {chi} must have the same parity "
            "(Poincare duality forces this for the spaces the formula applies to)"
        )


def signature_series(
    sigma: int, chi: int, order: int = DEFAULT_ORDER, chi_y: GenusProfile | None = None
) -> TruncatedSeries:
    """(1+t)^((sigma-chi)/2) / (1-t)^((sigma+chi)/2).

    With ``chi_y`` given, also checks the result against the chi_y series at y = -1.
    """
    _check_order(order)
    for v in (sigma, chi):
        if isinstance(v, bool) or not isinstance(v, int):
            raise InputError(f"sigma and chi must be integers, got {v!r}")
    _check_parity(sigma, chi)
    closed = binomial_series(-(sigma - chi) // 2, order).negate_t() * binomial_series((sigma + chi) // 2, order)
    if chi_y is not None:
        if chi_y.kind != "chi_y":
            raise InputError(f"cross-check needs a chi_y profile, got {chi_y.kind!r}")
        s2, c2 = chi_y.data.evaluate(y=-1), chi_y.data.evaluate(y=1)
        if (s2, c2) != (sigma, chi):
            raise InputError(f"chi_y profile {chi_y.name!r} has (sigma, chi) = ({s2}, {c2}), not ({sigma}, {chi})")
        other = symmetric_series(chi_y, order).specialize(y=-1)
        if other != closed:
            raise ConsistencyError(f"signature series disagrees with chi_y series at y=-1:\n  {closed}\n  {other}")
    return closed


def invariant_of_symmetric_product(profile: GenusProfile, n: int):
    """The invariant of X^(n): coefficient of t^n."""
    _check_order(n)
    return symmetric_series(profile, n)[n]


def invariant_of_configuration_space(profile: GenusProfile, n: int):
    _check_order(n)
    return configuration_series(profile, n)[n]


@dataclass(frozen=True)
class Specializations:
    e: GenusProfile | None
    chi_y: GenusProfile
    betti: GenusProfile | None
    euler: int
    arithmetic_genus: int | None
    signature: tuple[int, int] | None

    def profiles(self) -> list[GenusProfile]:
        out = [p for p in (self.e, self.chi_y, self.betti) if p is not None]
        out.append(GenusProfile(self.chi_y.name, "euler", self.euler))
        if self.arithmetic_genus is not None:
            out.append(GenusProfile(self.chi_y.name, "euler", self.arithmetic_genus, label="arithmetic genus"))
        if self.signature is not None:
            out.append(GenusProfile(self.chi_y.name, "signature", self.signature))
        return out


def _int(value) -> int:
    if getattr(value, "denominator", 1) != 1:
        raise ConsistencyError(f"specialization produced non-integer {value}")
    return int(value)


def specialization_bridge(profile: GenusProfile) -> Specializations:
    """Derive e, chi_y, Betti, Euler, arithmetic genus and (sigma, chi) from finer data.

    Accepts hodge, e or chi_y profiles; coarser inputs leave finer slots empty.
    """
    name, cs = profile.name, profile.compact_support
    e = betti = None
    if profile.kind == "hodge":
        h = profile.data
        e = GenusProfile(name, "e", h.specialize(z=1), cs)
        betti = GenusProfile(name, "betti", h.specialize(y=1, x=1), cs)
        chi_poly = e.data.specialize(x=1)
    elif profile.kind == "e":
        e = profile
        chi_poly = profile.data.specialize(x=1)
    elif profile.kind == "chi_y":
        chi_poly = profile.data
    else:
        raise InputError(f"specialization needs a hodge, e or chi_y profile, got {profile.kind!r}")
    chi_y = GenusProfile(name, "chi_y", chi_poly, cs)
    euler = _int(chi_poly.evaluate(y=1))
    try:
        arithmetic = _int(chi_poly.evaluate(y=0))
    except InputError:
        arithmetic = None  # negative powers of y
    sigma = _int(chi_poly.evaluate(y=-1))
    signature = (sigma, euler) if (sigma - euler) % 2 == 0 else None
    if betti is not None and _int(betti.data.evaluate(z=1)) != euler:
        raise ConsistencyError(f"Betti and chi_y routes disagree on the Euler characteristic of {name!r}")
    return Specializations(e, chi_y, betti, euler, arithmetic, signature)
