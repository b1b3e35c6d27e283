"""Prime sieve shared by the counting and coefficient modules."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LimitTooLarge, SieveRangeExceeded

SIEVE_CAP = 10**8


@dataclass(frozen=True)
class PrimeSieve:
    """Ascending primes <= limit, built once and shared read-only."""

    limit: int
    primes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return int(self.primes.size)

    def count_leq(self, x: float) -> int:
        """pi(x) for x <= limit."""
        if x > self.limit:
            raise SieveRangeExceeded(f"pi({x}) requested but sieve limit is {self.limit}")
        return int(np.searchsorted(self.primes, int(x), side="right"))

    def upto(self, x: float) -> np.ndarray:
        if x > self.limit:
            raise SieveRangeExceeded(f"primes up to {x} requested but sieve limit is {self.limit}")
        return self.primes[: self.count_leq(x)]

    def window(self, lo: float, hi: float) -> np.ndarray:
        """Primes p with lo < p <= hi."""
        if hi > self.limit:
            raise SieveRangeExceeded(f"primes up to {hi} requested but sieve limit is {self.limit}")
        i = int(np.searchsorted(self.primes, int(np.floor(lo)), side="right"))
        j = int(np.searchsorted(self.primes, int(np.floor(hi)), side="right"))
        return self.primes[i:j]


def sieve_primes(limit: int) -> PrimeSieve:
    """Sieve of Eratosthenes; limit must lie in [2, 10^8]."""
    if limit < 2:
        raise LimitTooLarge(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_CAP:
        raise LimitTooLarge(f"sieve limit must be <= {SIEVE_CAP}, got {limit}")
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return PrimeSieve(limit=limit, primes=np.flatnonzero(mask).astype(np.int64))
