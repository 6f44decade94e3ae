"""Truncated power series in ``t`` with exact coefficients.

Coefficients are rationals (``ring=None``) or :class:`LaurentPoly` values over
one fixed variable set (``ring=<VariableSet>``).  The truncation order ``N``
travels with the value: ``a * b`` requires both operands to have the same
order and ring, and the result is exact modulo ``t^(N+1)``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Sequence

from .errors import InputError
from .laurent import LaurentPoly, VariableSet, _norm, format_scalar

DEFAULT_ORDER = 10


def _zero(ring):
    return 0 if ring is None else LaurentPoly.zero(ring)


def _one(ring):
    return 1 if ring is None else LaurentPoly.one(ring)


def _div_int(c, n: int):
    if isinstance(c, LaurentPoly):
        return c / n
    return _norm(Fraction(c) / n)


def _coerce_coeff(c, ring):
    if ring is None:
        if isinstance(c, LaurentPoly):
            raise InputError("LaurentPoly coefficient in a rational series")
        if not isinstance(c, (int, Rational)):
            raise InputError(f"coefficient {c!r} is not an exact rational")
        return _norm(c)
    if isinstance(c, LaurentPoly):
        if c.variables != ring:
            raise InputError(f"coefficient over {c.variables}, series over {ring}")
        return c
    if isinstance(c, (int, Rational)):
        return LaurentPoly.constant(ring, c)
    raise InputError(f"coefficient {c!r} is not an exact rational or LaurentPoly")


def _infer_ring(coeffs) -> VariableSet | None:
    rings = {c.variables for c in coeffs if isinstance(c, LaurentPoly)}
    if len(rings) > 1:
        raise InputError(f"coefficients over different variable sets: {sorted(map(str, rings))}")
    return rings.pop() if rings else None


class TruncatedSeries:
    """Power series c_0 + c_1 t + ... + c_N t^N, exact modulo t^(N+1)."""

    __slots__ = ("order", "ring", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None, ring: VariableSet | str | None = None):
        coeffs = list(coeffs)
        if ring is None:
            ring = _infer_ring(coeffs)
        else:
            ring = VariableSet.parse(ring)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if not isinstance(order, int) or order < 0:
            raise InputError(f"truncation order must be a nonnegative integer, got {order!r}")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.order = order
        self.ring = ring
        self.coeffs = tuple(_coerce_coeff(c, ring) for c in coeffs)

    @classmethod
    def one(cls, order: int, ring=None) -> TruncatedSeries:
        return cls([1], order, ring)

    @classmethod
    def zero(cls, order: int, ring=None) -> TruncatedSeries:
        return cls([], order, ring)

    def _check(self, other: TruncatedSeries):
        if not isinstance(other, TruncatedSeries):
            raise InputError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise InputError(f"truncation orders differ: {self.order} vs {other.order}")
        if other.ring != self.ring:
            raise InputError(f"coefficient rings differ: {_ring_name(self.ring)} vs {_ring_name(other.ring)}")

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def coefficient(self, n: int):
        if not 0 <= n <= self.order:
            raise InputError(f"coefficient t^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.ring, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.ring)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational, LaurentPoly)):
            c = _coerce_coeff(other, self.ring)
            return TruncatedSeries([a * c for a in self.coeffs], self.order, self.ring)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(N + 1):
            acc = _zero(self.ring)
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    acc = acc + a[i] * b[n - i]
            out.append(acc)
        return TruncatedSeries(out, N, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse; the constant term must be a unit."""
        c0 = self.coeffs[0]
        if self.ring is None:
            if c0 == 0:
                raise InputError("constant term 0 is not invertible")
            inv0 = _norm(Fraction(1) / Fraction(c0))
        else:
            if not c0.is_unit():
                raise InputError(f"constant term {c0} is not a unit")
            inv0 = c0.inverse()
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = _zero(self.ring)
            for i in range(1, n + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[n - i]
            out.append(-acc * inv0)
        return TruncatedSeries(out, self.order, self.ring)

    def derivative(self) -> TruncatedSeries:
        """d/dt, exact modulo t^N (so the result has order N-1, or 0 when N = 0)."""
        if self.order == 0:
            return TruncatedSeries.zero(0, self.ring)
        return TruncatedSeries(
            [n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1, self.ring
        )

    def exp(self) -> TruncatedSeries:
        """exp of a series with zero constant term."""
        if self.coeffs[0]:
            raise InputError("exp needs a zero constant term")
        g = self.coeffs
        f = [_one(self.ring)]
        for n in range(1, self.order + 1):
            acc = _zero(self.ring)
            for k in range(1, n + 1):
                if g[k]:
                    acc = acc + g[k] * k * f[n - k]
            f.append(_div_int(acc, n))
        return TruncatedSeries(f, self.order, self.ring)

    def log(self) -> TruncatedSeries:
        """log of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise InputError(f"log needs constant term 1, got {self.coeffs[0]}")
        f = self.coeffs
        g = [_zero(self.ring)]
        for n in range(1, self.order + 1):
            acc = f[n] * n
            for k in range(1, n):
                if g[k] and f[n - k]:
                    acc = acc - g[k] * k * f[n - k]
            g.append(_div_int(acc, n))
        return TruncatedSeries(g, self.order, self.ring)

    def scale_t(self, c) -> TruncatedSeries:
        """Substitute t -> c*t (c a rational)."""
        c = _norm(c)
        return TruncatedSeries([a * c**n for n, a in enumerate(self.coeffs)], self.order, self.ring)

    def negate_t(self) -> TruncatedSeries:
        return self.scale_t(-1)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise InputError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order, self.ring)

    def map_coefficients(self, fn: Callable, ring=None) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order, ring)

    def specialize(self, assignment=None, **kwargs) -> TruncatedSeries:
        """Specialize variables in every coefficient; drops to rationals when none remain."""
        if self.ring is None:
            raise InputError("cannot specialize a series with rational coefficients")
        specialized = [c.specialize(assignment, **kwargs) for c in self.coeffs]
        ring = specialized[0].variables
        if len(ring) == 0:
            return TruncatedSeries([c.constant_term() for c in specialized], self.order, None)
        return TruncatedSeries(specialized, self.order, ring)

    def is_integral(self) -> bool:
        if self.ring is None:
            return all(isinstance(c, int) for c in self.coeffs)
        return all(c.is_integral() for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            body = str(c) if isinstance(c, LaurentPoly) else format_scalar(c)
            if n == 0:
                parts.append(body)
                continue
            tpow = "t" if n == 1 else f"t^{n}"
            parts.append(tpow if body == "1" else f"({body})*{tpow}")
        text = " + ".join(parts) if parts else "0"
        return f"{text} + O(t^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, ring={_ring_name(self.ring)}, {self.coeffs!r})"


def _ring_name(ring) -> str:
    return "QQ" if ring is None else f"QQ[{ring}^+-1]"


def generalized_binomial(a: int, n: int) -> int:
    """Coefficient of t^n in (1 - t)^(-a), i.e. binom(a+n-1, n) for any integer a."""
    num = 1
    for i in range(n):
        num *= a + i
    den = 1
    for i in range(2, n + 1):
        den *= i
    return num // den


def binomial_series(a: int, order: int) -> TruncatedSeries:
    """(1 - t)^(-a) with rational (in fact integer) coefficients."""
    if not isinstance(a, int):
        raise InputError(f"exponent must be an integer, got {a!r}")
    return TruncatedSeries([generalized_binomial(a, n) for n in range(order + 1)], order)


def geometric_factor(m: LaurentPoly, a: int, order: int) -> TruncatedSeries:
    """(1 - m t)^(-a) for a monomial ``m`` with coefficient 1 and an integer ``a``."""
    if not isinstance(m, LaurentPoly) or not m.is_unit_monomial():
        raise InputError(f"geometric factor needs a monomial with coefficient 1, got {m}")
    if not isinstance(a, int):
        raise InputError(f"exponent must be an integer, got {a!r}")
    coeffs = []
    power = LaurentPoly.one(m.variables)
    for n in range(order + 1):
        b = generalized_binomial(a, n)
        if b == 0 and a <= 0 and n > -a:
            coeffs.extend([0] * (order + 1 - n))
            break
        coeffs.append(power * b)
        power = power * m
    return TruncatedSeries(coeffs, order, m.variables)


def series_from_function(coeff_fn: Callable[[int], object], order: int, ring=None) -> TruncatedSeries:
    return TruncatedSeries([coeff_fn(n) for n in range(order + 1)], order, ring)


def sum_over_r(terms: Sequence, order: int, ring=None, sign_alternating: bool = False) -> TruncatedSeries:
    """Series  sum_{r=1..N} terms[r-1] * t^r / r  (optionally with (-1)^(r-1))."""
    coeffs = [_zero(ring)]
    for r in range(1, order + 1):
        c = _div_int(terms[r - 1], r)
        if sign_alternating and r % 2 == 0:
            c = -c
        coeffs.append(c)
    return TruncatedSeries(coeffs, order, ring)
