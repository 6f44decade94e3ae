"""Partitions, conjugacy classes and irreducible characters of the symmetric groups.

Characters come from the Murnaghan-Nakayama rule on beta-sets (abacus
positions): removing a border strip of length r is moving one bead r steps
down into an empty slot, with sign (-1)^(beads jumped over).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterator, Mapping

from .errors import InputError

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Normalize any iterable of positive integers to a weakly decreasing tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise InputError(f"partition parts must be positive, got {parts}")
    return tuple(sorted(parts, reverse=True))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order: (n), (n-1,1), ..., (1^n)."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"partitions(n) needs n >= 0, got {n!r}")
    return tuple(_partitions(n, n))


def multiplicities(mu: Partition) -> dict[int, int]:
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    return counts


def centralizer_order(mu) -> int:
    """z_mu = prod_i i^(m_i) m_i!"""
    mu = as_partition(mu)
    z = 1
    for part, m in multiplicities(mu).items():
        z *= part**m * factorial(m)
    return z


def class_size(mu) -> int:
    """Number of permutations of cycle type ``mu``: n!/z_mu."""
    mu = as_partition(mu)
    return factorial(sum(mu)) // centralizer_order(mu)


def sign(mu) -> int:
    """Sign character on the class ``mu``: (-1)^(n - number of cycles)."""
    mu = as_partition(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def permutation_of_type(mu) -> tuple[int, ...]:
    """A representative permutation (as an image tuple on 0..n-1) with cycle type ``mu``."""
    mu = as_partition(mu)
    perm = []
    start = 0
    for part in mu:
        perm.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(perm)


def cycle_type(perm) -> Partition:
    perm = tuple(perm)
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return as_partition(lengths)


def _beta_set(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    ell = len(beta)
    return tuple(p for p in (beta[i] - (ell - 1 - i) for i in range(ell)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        new_beta = [c for c in beta if c != b] + [target]
        total += (-1) ** height * _mn(_from_beta(new_beta), rest)
    return total


def mn_character(lam, mu) -> int:
    """Irreducible character chi_lam evaluated on the class of cycle type ``mu``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if sum(lam) != sum(mu):
        raise InputError(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def character_table(n: int) -> tuple[tuple[Partition, ...], tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """(rows, columns, values): rows are irreducibles in :func:`partitions` order,
    columns are classes starting from the identity (reverse order)."""
    rows = partitions(n)
    cols = tuple(reversed(rows))
    table = tuple(tuple(mn_character(lam, mu) for mu in cols) for lam in rows)
    return rows, cols, table


@dataclass(frozen=True)
class ClassFunction:
    """Integer-valued function on the conjugacy classes of S_n."""

    n: int
    values: Mapping[Partition, int] = field(default_factory=dict)

    def __call__(self, mu) -> int:
        mu = as_partition(mu)
        if sum(mu) != self.n:
            raise InputError(f"class {mu} is not a partition of {self.n}")
        return self.values.get(mu, 0)

    @classmethod
    def irreducible(cls, lam) -> ClassFunction:
        lam = as_partition(lam)
        n = sum(lam)
        return cls(n, {mu: mn_character(lam, mu) for mu in partitions(n)})

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Partition], int]) -> ClassFunction:
        return cls(n, {mu: fn(mu) for mu in partitions(n)})

    def inner(self, other: ClassFunction) -> Fraction:
        """<f, g> = (1/n!) sum_g f(g) g(g); characters are real so no conjugation."""
        if other.n != self.n:
            raise InputError(f"class functions on S_{self.n} and S_{other.n}")
        total = sum(class_size(mu) * self(mu) * other(mu) for mu in partitions(self.n))
        return Fraction(total, factorial(self.n))


@dataclass(frozen=True)
class Functional:
    """Q-linear functional on Rep(S_n): phi(V) = sum_mu w_mu chi_V(mu)."""

    n: int
    weights: Mapping[Partition, Fraction]
    name: str = ""

    def weight(self, mu) -> Fraction:
        return Fraction(self.weights.get(as_partition(mu), 0))

    def __call__(self, chi: ClassFunction | Callable[[Partition], object]):
        if isinstance(chi, ClassFunction) and chi.n != self.n:
            raise InputError(f"functional on S_{self.n} applied to a class function on S_{chi.n}")
        total = 0
        for mu, w in self.weights.items():
            if w:
                total = total + chi(mu) * w
        return total


def functional(kind: str, n: int) -> Functional:
    """The symmetric power (``sigma``), alternating power (``lambda``) or
    n-cycle trace (``psi``) functional on S_n."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"functional needs n >= 1, got {n!r}")
    nf = factorial(n)
    if kind == "sigma":
        weights = {mu: Fraction(class_size(mu), nf) for mu in partitions(n)}
    elif kind == "lambda":
        weights = {mu: Fraction(sign(mu) * class_size(mu), nf) for mu in partitions(n)}
    elif kind == "psi":
        weights = {mu: Fraction(1 if mu == (n,) else 0) for mu in partitions(n)}
    else:
        raise InputError(f"unknown functional kind {kind!r} (expected sigma, lambda or psi)")
    return Functional(n, weights, f"{kind}_{n}")
