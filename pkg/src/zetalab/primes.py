"""Prime sieve, prime counting, and factorization utilities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit``, ascending, with a prime-counting lookup."""

    limit: int
    primes: np.ndarray

    def pi(self, x) -> int:
        """Number of primes <= x."""
        return int(np.searchsorted(self.primes, x, side="right"))

    def __len__(self) -> int:
        return len(self.primes)

    def __contains__(self, p) -> bool:
        i = np.searchsorted(self.primes, p)
        return i < len(self.primes) and self.primes[i] == p


def sieve_primes(limit: int) -> PrimeTable:
    """Eratosthenes sieve; returns every prime <= limit."""
    limit = int(limit)
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return PrimeTable(limit=limit, primes=np.flatnonzero(mask).astype(np.int64))


def smallest_prime_factor(limit: int) -> np.ndarray:
    """spf[k] = smallest prime factor of k for 2 <= k <= limit (spf[0] = spf[1] = 0)."""
    limit = int(limit)
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            seg = spf[p::p]
            seg[seg == 0] = p
    return spf


def big_omega_table(limit: int) -> np.ndarray:
    """Number of prime divisors counted with multiplicity, for 1 <= k <= limit."""
    spf = smallest_prime_factor(max(limit, 2))
    omega = np.zeros(limit + 1, dtype=np.int64)
    for k in range(2, limit + 1):
        omega[k] = omega[k // spf[k]] + 1
    return omega


def factorize(n: int, spf: np.ndarray | None = None) -> dict[int, int]:
    """Factor n >= 1 into {prime: exponent}; trial division unless an spf table covers n."""
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    if spf is not None and n < len(spf):
        while n > 1:
            p = int(spf[n])
            out[p] = out.get(p, 0) + 1
            n //= p
        return out
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
