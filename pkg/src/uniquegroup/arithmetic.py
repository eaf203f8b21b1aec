"""Integer-theoretic predicates behind the cyclic-number criterion.

A positive integer n is a *cyclic number* when gcd(n, phi(n)) = 1; these are
exactly the orders at which a single group exists.  This module provides the
factorization, totient, squarefreeness and obstruction machinery, plus
partition-based counting of abelian groups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

MAX_INPUT = 2**64 - 1


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((prime, exponent), ...) ascending by prime."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        """The integer this factorization multiplies back to."""
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


@dataclass(frozen=True)
class SquareFactor:
    """Obstruction: p**2 divides n, so a non-cyclic abelian group exists."""

    p: int


@dataclass(frozen=True)
class DividingPair:
    """Obstruction: p and q divide n with p | q - 1, so a non-abelian
    group of order p*q exists and extends to order n."""

    p: int
    q: int


Obstruction = SquareFactor | DividingPair | None


def _check_input(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > MAX_INPUT:
        raise ValueError(f"input {n} exceeds the 64-bit range")


def factorize(n: int) -> Factorization:
    """Factor n by trial division; n = 1 gives the empty factorization."""
    _check_input(n)
    pairs: list[tuple[int, int]] = []
    m = n
    for p in (2, 3):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    # remaining factors are coprime to 6; step through the 6k +/- 1 wheel
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                pairs.append((p, e))
        d += 6
    if m > 1:
        pairs.append((m, 1))
    return Factorization(tuple(pairs))


def euler_phi(n: int) -> int:
    """Euler's totient: the count of 1 <= k <= n coprime to n."""
    result = 1
    for p, e in factorize(n).pairs:
        result *= p ** (e - 1) * (p - 1)
    return result


def is_squarefree(n: int) -> bool:
    """True when no prime divides n twice."""
    return all(e == 1 for _, e in factorize(n).pairs)


def is_cyclic_number(n: int) -> bool:
    """True when gcd(n, phi(n)) = 1, i.e. the cyclic group is the only
    group of order n."""
    _check_input(n)
    return math.gcd(n, euler_phi(n)) == 1


def obstruction(n: int) -> Obstruction:
    """Structured reason n fails the cyclic-number predicate, or None.

    Prefers SquareFactor(p) for the smallest prime with p**2 | n; otherwise
    returns the lexicographically smallest DividingPair(p, q) with p | q - 1.
    """
    fac = factorize(n)
    for p, e in fac.pairs:
        if e >= 2:
            return SquareFactor(p)
    primes = fac.primes()
    for p in primes:
        for q in primes:
            if p != q and (q - 1) % p == 0:
                return DividingPair(p, q)
    return None


def cyclic_number_sieve(limit: int) -> list[int]:
    """All cyclic numbers <= limit, ascending.

    Computes phi for every n <= limit with an in-place totient sieve, then
    filters by gcd(n, phi(n)) = 1.
    """
    _check_input(limit)
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p is prime
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    gcd = math.gcd
    return [n for n in range(1, limit + 1) if gcd(n, phi[n]) == 1]


_PARTITIONS = [1]  # p(0), extended on demand


def partition_count(k: int) -> int:
    """Number of integer partitions of k, by the pentagonal-number
    recurrence with exact integer arithmetic; p(0) = 1."""
    if k < 0:
        raise ValueError(f"expected a non-negative integer, got {k}")
    while len(_PARTITIONS) <= k:
        n = len(_PARTITIONS)
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * _PARTITIONS[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * _PARTITIONS[n - g2]
            j += 1
        _PARTITIONS.append(total)
    return _PARTITIONS[k]


def abelian_group_count(n: int) -> int:
    """Number of abelian groups of order n up to isomorphism: the product
    of partition_count(e) over the exponents e in the factorization."""
    result = 1
    for _, e in factorize(n).pairs:
        result *= partition_count(e)
    return result
