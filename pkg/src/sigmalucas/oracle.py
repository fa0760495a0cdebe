"""Brute-force references used to cross-check the solver.

Nothing here touches Lucas sequences: solutions come straight from a sigma_2
sieve, and semiprime structure from trial factorization.
"""

from __future__ import annotations

from math import isqrt

import numpy as np

from . import arith
from .solver import EquationInstance, TheoremPattern, THEOREM_IDS, M_THEOREMS


def naive_sigma(n: int, k: int) -> int:
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
    return total


def sigma2_minus_square(limit: int, block_size: int | None = None) -> np.ndarray:
    """Array r with r[n] = sigma_2(n) - n^2 for 1 <= n <= limit (r[0] = 0)."""
    size = block_size or arith.default_block_size()
    out = np.zeros(limit + 1, dtype=np.int64)
    for lo, hi in arith.block_ranges(1, limit + 1, size):
        n = np.arange(lo, hi, dtype=np.int64)
        out[lo:hi] = arith.sigma2_block(lo, hi) - n * n
    return out


def scan_solutions(excess: np.ndarray, instance: EquationInstance) -> list[int]:
    """All 1 <= n < len(excess) with excess[n] == A n + B."""
    n = np.arange(len(excess), dtype=np.int64)
    hits = np.flatnonzero(excess - instance.A * n == instance.B)
    return [int(h) for h in hits if h >= 1]


def distinct_prime_pair(n: int) -> tuple[int, int] | None:
    fac = arith.factorize(n)
    if len(fac) == 2 and all(e == 1 for _, e in fac):
        return fac.factors[0][0], fac.factors[1][0]
    return None


def small_patterns(P_max: int = 3, m_max: int = 3) -> list[TheoremPattern]:
    """Every theorem shape with 0 <= P <= P_max, 1 <= m <= m_max whose side conditions hold."""
    out = []
    for tid in THEOREM_IDS:
        for P in range(P_max + 1):
            ms = range(1, m_max + 1) if tid in M_THEOREMS else (0,)
            for m in ms:
                pat = TheoremPattern(tid, P, m)
                if pat.side_conditions_hold():
                    out.append(pat)
    return out
