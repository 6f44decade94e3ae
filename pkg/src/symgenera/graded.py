"""Tri-graded vector spaces with the Koszul sign rule, by dimension bookkeeping.

A space is a finitely supported table ``(p, q, k) -> dim`` where (p, q) is the
Hodge bigrading and k the cohomological degree.  Swapping two tensor factors of
degrees i and j costs the sign (-1)^(i*j).

Two independent routes to symmetric and alternating powers live here:

* the brute-force oracle (:func:`sym_power_brute`, :func:`alt_power_brute`)
  builds the averaging projector on V^(x)n orbit by orbit and takes exact ranks;
* the character route (:func:`phi_power`, :func:`schur_multiplicity`) only
  needs traces of one permutation per cycle type, which are products of
  Adams operations of the Hodge polynomial.

Traces per multidegree are *unsigned* (honest linear algebra); the Hodge
polynomial attaches (-z)^k.  Conversions between the two happen only in
:meth:`VirtualGradedDims.hodge_poly` and :meth:`VirtualGradedDims.from_hodge_poly`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial
from typing import Iterable, Iterator, Mapping

from .errors import ConsistencyError, InputError
from .laurent import YXZ, LaurentPoly
from .symgroup import (
    Functional,
    as_partition,
    class_size,
    mn_character,
    partitions,
    permutation_of_type,
)

Degree = tuple[int, int, int]

BRUTE_FORCE_LIMIT = 10**6


class VirtualGradedDims:
    """Finitely supported ``(p, q, k) -> int``; zero entries are dropped."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[Degree, int] | Iterable[tuple[Degree, int]] = ()):
        items = dims.items() if isinstance(dims, Mapping) else dims
        clean: dict[Degree, int] = {}
        for deg, d in items:
            deg = tuple(int(a) for a in deg)
            if len(deg) != 3:
                raise InputError(f"degree {deg} must be a (p, q, k) triple")
            if isinstance(d, Fraction):
                if d.denominator != 1:
                    raise InputError(f"dimension {d} at {deg} is not an integer")
                d = d.numerator
            if isinstance(d, bool) or not isinstance(d, int):
                raise InputError(f"dimension {d!r} at {deg} is not an integer")
            if d:
                clean[deg] = clean.get(deg, 0) + d
                if not clean[deg]:
                    del clean[deg]
        self._check(clean)
        self._dims = clean

    def _check(self, dims):
        pass

    def __getitem__(self, deg) -> int:
        return self._dims.get(tuple(deg), 0)

    def items(self) -> list[tuple[Degree, int]]:
        return sorted(self._dims.items())

    def degrees(self) -> list[Degree]:
        return sorted(self._dims)

    def __len__(self) -> int:
        return len(self._dims)

    def __bool__(self) -> bool:
        return bool(self._dims)

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def __eq__(self, other):
        if not isinstance(other, VirtualGradedDims):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self):
        return hash(frozenset(self._dims.items()))

    def __add__(self, other):
        """Direct sum (pointwise sum of dimensions)."""
        if not isinstance(other, VirtualGradedDims):
            return NotImplemented
        merged = dict(self._dims)
        for deg, d in other._dims.items():
            merged[deg] = merged.get(deg, 0) + d
        cls = GradedDims if isinstance(self, GradedDims) and isinstance(other, GradedDims) else VirtualGradedDims
        return cls(merged)

    def tensor(self, other: VirtualGradedDims) -> VirtualGradedDims:
        """Tensor product: convolution of multidegrees."""
        out: dict[Degree, int] = {}
        for d1, a in self._dims.items():
            for d2, b in other._dims.items():
                deg = (d1[0] + d2[0], d1[1] + d2[1], d1[2] + d2[2])
                out[deg] = out.get(deg, 0) + a * b
        cls = GradedDims if isinstance(self, GradedDims) and isinstance(other, GradedDims) else VirtualGradedDims
        return cls(out)

    def hodge_poly(self) -> LaurentPoly:
        """sum dim * y^p x^q (-z)^k over YXZ."""
        return LaurentPoly(YXZ, {deg: (-d if deg[2] % 2 else d) for deg, d in self._dims.items()})

    @classmethod
    def from_hodge_poly(cls, poly: LaurentPoly):
        """Inverse of :meth:`hodge_poly` (poly must be over YXZ with integer coefficients)."""
        if poly.variables != YXZ:
            raise InputError(f"Hodge polynomial must be over yxz, got {poly.variables}")
        if not poly.is_integral():
            raise InputError(f"Hodge polynomial {poly} has non-integer coefficients")
        return cls({e: (-c if e[2] % 2 else c) for e, c in poly.terms()})

    def to_records(self) -> list[dict]:
        return [{"p": p, "q": q, "k": k, "dim": d} for (p, q, k), d in self.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]):
        out = []
        for rec in records:
            try:
                out.append(((rec["p"], rec["q"], rec["k"]), rec["dim"]))
            except (KeyError, TypeError) as exc:
                raise InputError(f"graded-dims record {rec!r} needs p, q, k, dim") from exc
        return cls(out)

    def __repr__(self) -> str:
        body = ", ".join(f"{deg}: {d}" for deg, d in self.items())
        return f"{type(self).__name__}({{{body}}})"


class GradedDims(VirtualGradedDims):
    """An actual graded space: all dimensions nonnegative."""

    __slots__ = ()

    def _check(self, dims):
        for deg, d in dims.items():
            if d < 0:
                raise InputError(f"negative dimension {d} at {deg}")


def hodge_poly(V: VirtualGradedDims) -> LaurentPoly:
    return V.hodge_poly()


def tensor_power(V: VirtualGradedDims, n: int) -> VirtualGradedDims:
    result = GradedDims({(0, 0, 0): 1}) if isinstance(V, GradedDims) else VirtualGradedDims({(0, 0, 0): 1})
    for _ in range(n):
        result = result.tensor(V)
    return result


def _basis(V: GradedDims) -> list[Degree]:
    basis = []
    for deg, d in V.items():
        basis.extend([deg] * d)
    return basis


def _guard(V: GradedDims, n: int):
    if not isinstance(V, GradedDims):
        raise InputError("brute-force powers need a GradedDims (nonnegative dimensions)")
    if not isinstance(n, int) or n < 0:
        raise InputError(f"n must be a nonnegative integer, got {n!r}")
    if V.total_dim() ** n > BRUTE_FORCE_LIMIT:
        raise InputError(
            f"dim(V)^n = {V.total_dim()}^{n} exceeds {BRUTE_FORCE_LIMIT}; "
            "use the character path (phi_power / schur_multiplicity) instead"
        )


def koszul_sign(perm: tuple[int, ...], parities: tuple[int, ...]) -> int:
    """Sign picked up when the factor at position a moves to position perm[a]."""
    return _koszul(tuple(perm), tuple(p & 1 for p in parities))


@lru_cache(maxsize=None)
def _koszul(perm, odd):
    flips = 0
    n = len(perm)
    for a in range(n):
        if not odd[a]:
            continue
        for b in range(a + 1, n):
            if odd[b] and perm[a] > perm[b]:
                flips += 1
    return -1 if flips & 1 else 1


@lru_cache(maxsize=None)
def _perms_with_sign(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        out.append((perm, -1 if inversions & 1 else 1))
    return tuple(out)


def act(perm: tuple[int, ...], tensor: tuple[int, ...], basis: list[Degree]) -> tuple[int, tuple[int, ...]]:
    """psi_perm on a basis tensor (indices into ``basis``): returns (sign, image tensor)."""
    image = [0] * len(tensor)
    for a, i in enumerate(tensor):
        image[perm[a]] = i
    sign = koszul_sign(perm, tuple(basis[i][2] for i in tensor))
    return sign, tuple(image)


def _rank(rows: list[list[int]]) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _projector_power(V: GradedDims, n: int, alternating: bool) -> GradedDims:
    _guard(V, n)
    if n == 0:
        return GradedDims({(0, 0, 0): 1})
    basis = _basis(V)
    perms = _perms_with_sign(n)
    out: dict[Degree, int] = {}
    for multiset in combinations_with_replacement(range(len(basis)), n):
        orbit = sorted(set(permutations(multiset)))
        index = {t: j for j, t in enumerate(orbit)}
        # n! times the projector, restricted to the span of this orbit
        matrix = [[0] * len(orbit) for _ in orbit]
        for col, tensor in enumerate(orbit):
            for perm, perm_sign in perms:
                s, image = act(perm, tensor, basis)
                if alternating:
                    s *= perm_sign
                matrix[index[image]][col] += s
        r = _rank(matrix)
        if r:
            deg = tuple(sum(basis[i][c] for i in multiset) for c in range(3))
            out[deg] = out.get(deg, 0) + r
    return GradedDims(out)


def sym_power_brute(V: GradedDims, n: int) -> GradedDims:
    """Graded rank of (1/n!) sum_g psi_g on V^(x)n, by exact linear algebra."""
    return _projector_power(V, n, alternating=False)


def alt_power_brute(V: GradedDims, n: int) -> GradedDims:
    """Graded rank of (1/n!) sum_g sign(g) psi_g on V^(x)n."""
    return _projector_power(V, n, alternating=True)


def cycle_traces(V: VirtualGradedDims, mu, method: str = "adams") -> VirtualGradedDims:
    """Unsigned per-multidegree trace of a permutation of cycle type ``mu`` on V^(x)n.

    ``method="brute"`` sums Koszul signs over fixed basis tensors;
    ``method="adams"`` reads them off prod_i Psi_{mu_i}(h(V)).
    """
    mu = as_partition(mu)
    if method == "adams":
        poly = LaurentPoly.one(YXZ)
        h = V.hodge_poly()
        for part in mu:
            poly = poly * h.adams(part)
        return VirtualGradedDims.from_hodge_poly(poly)
    if method != "brute":
        raise InputError(f"unknown trace method {method!r}")
    n = sum(mu)
    _guard(V, n)
    basis = _basis(V)
    perm = permutation_of_type(mu)
    out: dict[Degree, int] = {}
    for tensor in product(range(len(basis)), repeat=n):
        if any(tensor[perm[a]] != tensor[a] for a in range(n)):
            continue
        sign, image = act(perm, tensor, basis)
        assert image == tensor
        deg = tuple(sum(basis[i][c] for i in tensor) for c in range(3))
        out[deg] = out.get(deg, 0) + sign
    return VirtualGradedDims(out)


def cycle_supertrace(V: VirtualGradedDims, mu, method: str = "brute") -> LaurentPoly:
    """Signed trace polynomial sum_d trace_d(mu) y^p x^q (-z)^k."""
    return cycle_traces(V, mu, method).hodge_poly()


def _check_functional_size(phi: Functional, n):
    if n is None:
        return phi.n
    if n != phi.n:
        raise InputError(f"functional on S_{phi.n} used with n = {n}")
    return n


def phi_power(V: VirtualGradedDims, phi: Functional, n: int | None = None, method: str = "adams") -> VirtualGradedDims:
    """The power operation attached to a functional: per degree, sum_mu w_mu trace_d(mu)."""
    n = _check_functional_size(phi, n)
    acc: dict[Degree, Fraction] = {}
    for mu in partitions(n):
        w = phi.weight(mu)
        if not w:
            continue
        for deg, tr in cycle_traces(V, mu, method).items():
            acc[deg] = acc.get(deg, 0) + w * tr
    for deg, val in acc.items():
        if Fraction(val).denominator != 1:
            raise ConsistencyError(f"{phi.name or 'functional'} gave non-integer {val} at {deg}")
    return VirtualGradedDims({deg: int(val) for deg, val in acc.items()})


def schur_multiplicity(V: GradedDims, n: int, lam, method: str = "adams") -> GradedDims:
    """Graded dimension of S_lam(V), the lam-isotypic multiplicity space in V^(x)n."""
    lam = as_partition(lam)
    if sum(lam) != n:
        raise InputError(f"{lam} is not a partition of {n}")
    acc: dict[Degree, Fraction] = {}
    for mu in partitions(n):
        coeff = class_size(mu) * mn_character(lam, mu)
        if not coeff:
            continue
        for deg, tr in cycle_traces(V, mu, method).items():
            acc[deg] = acc.get(deg, 0) + Fraction(coeff * tr, factorial(n))
    out = {}
    for deg, val in acc.items():
        if val.denominator != 1 or val < 0:
            raise ConsistencyError(f"multiplicity of {lam} at {deg} came out as {val}")
        out[deg] = int(val)
    return GradedDims(out)


def iter_small_spaces(max_dim: int, degrees: Iterable[Degree]) -> Iterator[GradedDims]:
    """Every GradedDims of total dimension 1..max_dim supported on ``degrees``."""
    degrees = sorted(set(tuple(d) for d in degrees))
    for total in range(1, max_dim + 1):
        for combo in combinations_with_replacement(degrees, total):
            dims: dict[Degree, int] = {}
            for d in combo:
                dims[d] = dims.get(d, 0) + 1
            yield GradedDims(dims)
