"""Sparse Laurent polynomials with exact rational coefficients.

A :class:`LaurentPoly` lives over a fixed, ordered :class:`VariableSet` and maps
exponent tuples (negative entries allowed) to nonzero rationals.  Values are
immutable; every operation returns a new polynomial in canonical form, so
``==`` is structural.

>>> V = VariableSet.parse("yxz")
>>> y, x, z = V.gens()
>>> p = 1 + y * x * z**2
>>> print(p * p)
1 + 2*y*x*z^2 + y^2*x^2*z^4
>>> print(p.adams(3))
1 + y^3*x^3*z^6
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

from .errors import InputError

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]


def _norm(c) -> Scalar:
    """Store integral rationals as ``int`` (much faster arithmetic)."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def format_scalar(c: Scalar) -> str:
    c = _norm(c)
    return str(c)


@dataclass(frozen=True)
class VariableSet:
    """Ordered tuple of distinct variable names."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not isinstance(name, str) or not name:
                raise InputError(f"invalid variable name {name!r}")
            if not (name[0].isalpha() or name[0] == "_") or not all(
                ch.isalnum() or ch == "_" for ch in name
            ):
                raise InputError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")

    @classmethod
    def parse(cls, value: str | Iterable[str] | VariableSet) -> VariableSet:
        """``"yxz"`` -> (y, x, z); ``"a,b"`` -> (a, b); iterables pass through."""
        if isinstance(value, VariableSet):
            return value
        if isinstance(value, str):
            if "," in value:
                return cls(tuple(s.strip() for s in value.split(",") if s.strip()))
            return cls(tuple(value))
        return cls(tuple(value))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r} (have {self})") from None

    def gens(self) -> tuple[LaurentPoly, ...]:
        return tuple(LaurentPoly.variable(self, v) for v in self.names)

    def without(self, names: Iterable[str]) -> VariableSet:
        drop = set(names)
        return VariableSet(tuple(v for v in self.names if v not in drop))

    def __str__(self) -> str:
        if all(len(v) == 1 for v in self.names):
            return "".join(self.names)
        return ",".join(self.names)


YXZ = VariableSet(("y", "x", "z"))
YX = VariableSet(("y", "x"))
Y = VariableSet(("y",))
Z = VariableSet(("z",))
NOVARS = VariableSet(())


class LaurentPoly:
    """Immutable sparse Laurent polynomial over ``variables``.

    ``terms`` maps exponent tuples (one entry per variable) to coefficients.
    Zero coefficients are dropped at construction.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: VariableSet | str, terms: Mapping[Exponents, Scalar] | None = None):
        variables = VariableSet.parse(variables)
        nvars = len(variables)
        clean: dict[Exponents, Scalar] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise InputError(f"exponent tuple {exps} does not match variables {variables}")
            if not isinstance(c, (int, Rational)):
                raise InputError(f"coefficient {c!r} is not an exact rational")
            c = _norm(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.variables = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, variables: VariableSet, terms: dict[Exponents, Scalar]) -> LaurentPoly:
        # terms already canonical
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, variables) -> LaurentPoly:
        return cls._raw(VariableSet.parse(variables), {})

    @classmethod
    def constant(cls, variables, c: Scalar) -> LaurentPoly:
        variables = VariableSet.parse(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def one(cls, variables) -> LaurentPoly:
        return cls.constant(variables, 1)

    @classmethod
    def monomial(cls, variables, exponents: Mapping[str, int] | Exponents, coeff: Scalar = 1) -> LaurentPoly:
        variables = VariableSet.parse(variables)
        return cls(variables, {_as_exponents(variables, exponents): coeff})

    @classmethod
    def variable(cls, variables, name: str) -> LaurentPoly:
        variables = VariableSet.parse(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls._raw(variables, {tuple(exps): 1})

    # inspection

    def terms(self) -> list[tuple[Exponents, Scalar]]:
        """Terms in printing order (ascending lexicographic on exponents)."""
        return sorted(self._terms.items())

    def monomials(self) -> list[Exponents]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, monomial: Mapping[str, int] | Exponents | LaurentPoly) -> Scalar:
        if isinstance(monomial, LaurentPoly):
            if not monomial.is_monomial():
                raise InputError("coefficient() needs a single monomial")
            (exps,) = monomial._terms
        else:
            exps = _as_exponents(self.variables, monomial)
        return self._terms.get(exps, 0)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_term(self) -> Scalar:
        return self._terms.get((0,) * len(self.variables), 0)

    def to_scalar(self) -> Scalar:
        if not self.is_constant():
            raise InputError(f"{self} is not a constant")
        return self.constant_term()

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit_monomial(self) -> bool:
        """Single monomial with coefficient exactly 1."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) == 1

    def is_unit(self) -> bool:
        """Units of Q[x^{+-1}] are the nonzero monomial multiples."""
        return len(self._terms) == 1

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # ring structure

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise InputError(
                    f"variable sets differ: {self.variables} vs {other.variables}"
                )
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly.constant(self.variables, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly._raw(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c0 = _norm(other)
            if not c0:
                return LaurentPoly._raw(self.variables, {})
            return LaurentPoly._raw(self.variables, {e: _norm(c * c0) for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[Exponents, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly._raw(
            self.variables, {e: _norm(c) for e, c in terms.items() if c}
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational or by a unit (monomial multiple)."""
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division of LaurentPoly by zero")
            inv = Fraction(1) / Fraction(other)
            return self * inv
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise InputError(f"{self} is not a unit (must be a single monomial term)")
        ((e, c),) = self._terms.items()
        return LaurentPoly._raw(self.variables, {tuple(-a for a in e): _norm(Fraction(1) / Fraction(c))})

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # operations

    def adams(self, r: int) -> LaurentPoly:
        """r-th Adams operation: every exponent multiplied by ``r``."""
        if not isinstance(r, int) or r < 1:
            raise InputError(f"Adams operation needs an integer r >= 1, got {r!r}")
        if r == 1:
            return self
        return LaurentPoly._raw(
            self.variables, {tuple(r * a for a in e): c for e, c in self._terms.items()}
        )

    def specialize(self, assignment: Mapping[str, Scalar | LaurentPoly] | None = None, **kwargs) -> LaurentPoly:
        """Substitute values for some variables.

        Values are rationals or Laurent polynomials over the *remaining*
        variables.  The result lives over the remaining variables (possibly
        none; use :meth:`to_scalar` then).
        """
        assignment = dict(assignment or {}, **kwargs)
        if not assignment:
            return self
        for name in assignment:
            self.variables.index(name)
        rest = self.variables.without(assignment)
        keep = [i for i, v in enumerate(self.variables) if v not in assignment]
        subs = [(i, assignment[v]) for i, v in enumerate(self.variables) if v in assignment]
        for name, value in assignment.items():
            if isinstance(value, LaurentPoly):
                if value.variables != rest:
                    raise InputError(
                        f"value for {name} must be over the remaining variables {rest}, got {value.variables}"
                    )
            elif not isinstance(value, (int, Rational)):
                raise InputError(f"value for {name} must be rational or LaurentPoly, got {value!r}")

        result = LaurentPoly.zero(rest)
        scalar_terms: dict[Exponents, Scalar] = {}
        for e, c in self._terms.items():
            factor = None
            coeff = Fraction(c)
            for i, value in subs:
                k = e[i]
                if k == 0:
                    continue
                if isinstance(value, LaurentPoly):
                    if k < 0 and not value.is_unit():
                        raise InputError(
                            f"cannot substitute non-unit {value} for {self.variables.names[i]} "
                            f"occurring with exponent {k}"
                        )
                    powered = value**k
                    factor = powered if factor is None else factor * powered
                else:
                    if value == 0 and k < 0:
                        raise InputError(
                            f"cannot substitute 0 for {self.variables.names[i]} occurring with exponent {k}"
                        )
                    coeff *= Fraction(value) ** k
            rest_exps = tuple(e[i] for i in keep)
            if factor is None:
                scalar_terms[rest_exps] = scalar_terms.get(rest_exps, 0) + coeff
            else:
                mono = LaurentPoly._raw(rest, {rest_exps: _norm(coeff)}) if coeff else LaurentPoly.zero(rest)
                result = result + mono * factor
        return result + LaurentPoly(rest, scalar_terms)

    def evaluate(self, assignment: Mapping[str, Scalar] | None = None, **kwargs) -> Scalar:
        """Full substitution, returning a rational."""
        out = self.specialize(assignment, **kwargs)
        if len(out.variables):
            raise InputError(f"variables {out.variables} left unassigned")
        return out.constant_term()

    def change_variables(self, variables) -> LaurentPoly:
        """Re-embed into a variable set that contains every variable actually used."""
        variables = VariableSet.parse(variables)
        used = {v for e in self._terms for v, a in zip(self.variables, e) if a}
        missing = used - set(variables)
        if missing:
            raise InputError(f"variables {sorted(missing)} not in {variables}")
        pos = {v: i for i, v in enumerate(self.variables)}
        terms = {}
        for e, c in self._terms.items():
            terms[tuple(e[pos[v]] if v in pos else 0 for v in variables)] = c
        return LaurentPoly._raw(variables, terms)

    # printing

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.terms():
            mono = "*".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.variables, e) if a
            )
            mag = abs(c)
            if not mono:
                body = format_scalar(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_scalar(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            if not pieces:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variables}, {str(self)!r})"


def _as_exponents(variables: VariableSet, exponents) -> Exponents:
    if isinstance(exponents, Mapping):
        exps = [0] * len(variables)
        for name, a in exponents.items():
            exps[variables.index(name)] = int(a)
        return tuple(exps)
    exps = tuple(int(a) for a in exponents)
    if len(exps) != len(variables):
        raise InputError(f"exponent tuple {exps} does not match variables {variables}")
    return exps
