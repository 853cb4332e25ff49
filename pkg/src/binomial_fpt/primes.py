"""Small prime utilities for scans at desk scale."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in the inclusive range [lo, hi], ascending."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    f = 2
    while f * f <= hi:
        if sieve[f]:
            sieve[f * f :: f] = b"\x00" * len(sieve[f * f :: f])
        f += 1
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]
