"""
Exact number theory and partition combinatorics.

Rationals are ``fractions.Fraction`` values throughout; every function here is pure
and the memo tables behave as caches only.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterator, Sequence, Tuple

from utils.exceptions import DomainException

__all__ = [
    "Partition",
    "enumerate_partitions",
    "partition_count",
    "lagrange_number",
    "bernoulli",
    "lambda_g_constant",
    "zeta_at_negative",
    "multinomial",
    "harmonic_number",
    "binomial",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Non-increasing tuple of positive integers; ``Partition(())`` is the empty partition."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise DomainException(f"partition parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainException(f"partition parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition"""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, i: int) -> int:
        return self.parts.count(i)

    @property
    def multiplicities(self) -> Dict[int, int]:
        return dict(Counter(self.parts))

    @property
    def multiplicity_factorial(self) -> int:
        """m(mu)! = prod_i m_i(mu)!"""
        return prod(factorial(m) for m in Counter(self.parts).values())

    def shifted(self) -> Tuple[int, ...]:
        """The parts of mu+1"""
        return tuple(p + 1 for p in self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _partitions_bounded(k: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions_bounded(k - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(k: int) -> Tuple[Partition, ...]:
    """
    All partitions of weight k in reverse-lexicographic order,
    e.g. 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if k < 0:
        raise DomainException(f"partition weight must be >= 0, got {k}")
    return tuple(Partition(parts) for parts in _partitions_bounded(k, k))


@lru_cache(maxsize=None)
def partition_count(k: int) -> int:
    """p(k) by Euler's pentagonal-number recurrence"""
    if k < 0:
        return 0
    if k == 0:
        return 1
    total = 0
    j = 1
    while True:
        pentagonal = j * (3 * j - 1) // 2
        if pentagonal > k:
            break
        sign = 1 if j % 2 else -1
        total += sign * partition_count(k - pentagonal)
        pentagonal_conj = j * (3 * j + 1) // 2
        if pentagonal_conj <= k:
            total += sign * partition_count(k - pentagonal_conj)
        j += 1
    return total


@lru_cache(maxsize=None)
def lagrange_number(mu: Partition) -> Fraction:
    """L(mu) = (|mu|+l(mu))! (-1)^l(mu) / (m(mu)! prod_j (j+1)!^m_j(mu))"""
    numerator = factorial(mu.weight + mu.length) * (-1) ** mu.length
    denominator = mu.multiplicity_factorial * prod(
        factorial(j + 1) ** m for j, m in mu.multiplicities.items()
    )
    return Fraction(numerator, denominator)


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> Tuple[Fraction, ...]:
    # Akiyama-Tanigawa; yields B_1 = +1/2, flipped below
    table = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        table[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            table[j - 1] = j * (table[j - 1] - table[j])
        out.append(table[0])
    if n >= 1:
        out[1] = -out[1]
    return tuple(out)


def bernoulli(n: int) -> Fraction:
    """
    Exact Bernoulli number B_n with the convention B_1 = -1/2.

    Only even indices enter the Hodge formulas, so the B_1 sign is inert.
    """
    if n < 0:
        raise DomainException(f"Bernoulli index must be >= 0, got {n}")
    return _bernoulli_table(n)[n]


@lru_cache(maxsize=None)
def lambda_g_constant(g: int) -> Fraction:
    """b_g = (2^(2g-1) - 1)/2^(2g-1) * |B_2g|/(2g)!"""
    if g < 1:
        raise DomainException(f"genus must be >= 1, got {g}")
    power = 2 ** (2 * g - 1)
    return Fraction(power - 1, power) * abs(bernoulli(2 * g)) / factorial(2 * g)


def zeta_at_negative(k: int) -> Fraction:
    """zeta(1-k) = -B_k/k for even k >= 2"""
    if k < 2 or k % 2:
        raise DomainException(f"zeta(1-k) is tabulated for positive even k only, got {k}")
    return -bernoulli(k) / k


def multinomial(total: int, parts: Sequence[int]) -> int:
    """C(total; parts); zero unless the parts are non-negative and sum to total"""
    if total < 0 or any(p < 0 for p in parts) or sum(parts) != total:
        return 0
    return factorial(total) // prod(factorial(p) for p in parts)


def harmonic_number(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)
