"""Exact integer arithmetic: primality, factorization, divisor-power sums.

Everything here works on Python ints. The segmented sigma_2 sieve uses numpy
int64 blocks while the values fit, and falls back to object arrays above that.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

# Miller-Rabin with these bases is exact for n < 3.3e24, which covers 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
PROVEN_PRIME_LIMIT = 2**64
PROBABLE_PRIME_ROUNDS = 40

TRIAL_DIVISION_LIMIT = 10**6
DEFAULT_BLOCK_SIZE = 1 << 20
BLOCK_SIZE_ENV = "SIGMALUCAS_BLOCK_SIZE"

# sigma_2(n) < 1.65 n^2, so int64 blocks are safe up to here.
_INT64_SIGMA2_LIMIT = 2_000_000_000


class BlockSizeError(ValueError):
    pass


def default_block_size() -> int:
    raw = os.environ.get(BLOCK_SIZE_ENV)
    if raw is None:
        return DEFAULT_BLOCK_SIZE
    size = int(raw)
    if size < 1:
        raise BlockSizeError(f"{BLOCK_SIZE_ENV} must be positive, got {raw!r}")
    return size


# --------------------------------------------------------------------------
# primes


@lru_cache(maxsize=8)
def prime_table(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array (plain Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, isqrt(limit) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def primes_up_to(limit: int) -> list[int]:
    return prime_table(limit).tolist()


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    """Strong Lucas test with Selfridge parameters (n odd, not a square)."""
    if isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = _jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4

    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    # left-to-right binary ladder for (U_d, V_d, Q^d) mod n
    U, V, Qk = 1, P, Q % n
    inv2 = (n + 1) // 2
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Exact below 2**64 (fixed Miller-Rabin bases). Above that the answer is
    "industrial-grade": a strong Lucas test plus 40 strong Miller-Rabin rounds
    with bases drawn from an RNG seeded by n, so results are reproducible.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 41 * 41:
        return True
    if n < PROVEN_PRIME_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    if not _strong_probable_prime(n, 2) or not _strong_lucas_probable_prime(n):
        return False
    rng = random.Random(n)
    return all(
        _strong_probable_prime(n, rng.randrange(3, n - 1))
        for _ in range(PROBABLE_PRIME_ROUNDS)
    )


def is_proven_prime(n: int) -> bool:
    """True when n is prime and small enough for the deterministic test."""
    return n < PROVEN_PRIME_LIMIT and is_prime(n)


# --------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            last = p

    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


@lru_cache(maxsize=1)
def _trial_primes() -> list[int]:
    return primes_up_to(TRIAL_DIVISION_LIMIT)


def _brent_split(n: int) -> int:
    """Return a non-trivial factor of the odd composite n (Pollard-Brent).

    The polynomial constant walks c = 1, 2, 3, ... so runs are reproducible.
    """
    c = 0
    while True:
        c += 1
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_fully(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split_fully(r, out)
        _split_fully(r, out)
        return
    d = _brent_split(n)
    _split_fully(d, out)
    _split_fully(n // d, out)


def factorize(n: int) -> Factorization:
    """Trial division by primes below 10**6, then Pollard-Brent on the rest."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    found: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _split_fully(n, found)
    return Factorization(tuple(sorted(found.items())))


# --------------------------------------------------------------------------
# divisor sums


def sigma_from_factorization(fac: Factorization, k: int) -> int:
    """sigma_k via the multiplicative closed form, no division involved."""
    if k < 0:
        raise ValueError("k must be non-negative")
    total = 1
    for p, e in fac:
        pk = p**k
        term, acc = 1, 1
        for _ in range(e):
            term *= pk
            acc += term
        total *= acc
    return total


def sigma_k(n: int, k: int) -> int:
    if n < 1:
        raise ValueError(f"sigma_k needs n >= 1, got {n}")
    return sigma_from_factorization(factorize(n), k)


def sigma2_block(lo: int, hi: int) -> np.ndarray:
    """sigma_2 of every n in [lo, hi) as an array; no block-size check.

    Divisors are visited in pairs (d, n/d) with d <= sqrt(n), so the sweep only
    runs d up to isqrt(hi - 1).
    """
    if lo < 1 or hi <= lo:
        raise ValueError(f"need 1 <= lo < hi, got [{lo}, {hi})")
    dtype = np.int64 if hi <= _INT64_SIGMA2_LIMIT else object
    out = np.zeros(hi - lo, dtype=dtype)
    for d in range(1, isqrt(hi - 1) + 1):
        sq = d * d
        start = max(lo, sq)
        start += -start % d
        if start >= hi:
            continue
        j = np.arange(start // d, (hi - 1) // d + 1, dtype=np.int64)
        if dtype is object:
            j = j.astype(object)
        out[start - lo :: d] += sq + j * j
        if sq >= lo:
            out[sq - lo] -= sq
    return out


def sigma2_segment(lo: int, hi: int, block_size: int | None = None) -> list[int]:
    """[sigma_2(lo), ..., sigma_2(hi - 1)] from a segmented divisor sieve."""
    size = default_block_size() if block_size is None else block_size
    if hi - lo > size:
        raise BlockSizeError(f"segment [{lo}, {hi}) exceeds block size {size}")
    return [int(v) for v in sigma2_block(lo, hi)]


def block_ranges(lo: int, hi: int, block_size: int) -> list[tuple[int, int]]:
    return [(a, min(a + block_size, hi)) for a in range(lo, hi, block_size)]


# --------------------------------------------------------------------------
# predicates


def is_squarefree(n: int) -> bool:
    if n < 1:
        raise ValueError(f"is_squarefree needs n >= 1, got {n}")
    return all(e == 1 for _, e in factorize(n))


def is_even_perfect(n: int) -> bool:
    """n == 2^(a-1) * (2^a - 1) with 2^a - 1 prime (Euclid-Euler form)."""
    if n < 2 or n % 2:
        return False
    a = 1
    while n % 2 == 0:
        n //= 2
        a += 1
    return n == (1 << a) - 1 and is_prime(n)
