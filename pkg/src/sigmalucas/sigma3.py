"""Search for n with n | sigma_3(n) among numbers with two distinct prime factors.

`scan_pq_alpha` covers n = p * q^alpha (optionally q != 1 mod 3), where every
hit is expected to be an even perfect number. `conjecture_scan` drops the
shape restriction and keeps any n with omega(n) = 2.

A hit that is not even perfect is returned as data and logged, never raised.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import arith

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Sigma3Hit:
    n: int
    p: int
    q: int
    alpha: int
    even_perfect: bool


def divides_sigma3(n: int) -> bool:
    return arith.sigma_k(n, 3) % n == 0


def _sigma3_prime_power(q: int, alpha: int) -> int:
    return sum(q ** (3 * i) for i in range(alpha + 1))


def _flag(hits: list[Sigma3Hit], what: str) -> None:
    for h in hits:
        if not h.even_perfect:
            log.warning("%s: n=%d divides sigma_3(n) but is not even perfect", what, h.n)


def scan_pq_alpha(bound: int, restrict_q: bool = True) -> list[Sigma3Hit]:
    """All n = p * q^alpha <= bound (p != q prime, alpha >= 1) with n | sigma_3(n).

    For each (q, alpha) the cofactors p are tested together as a numpy array.
    With p != q, n | sigma_3(n) splits into p | sigma_3(q^alpha) and
    q^alpha | (1 + p^3) sigma_3(q^alpha).
    """
    if not 2 <= bound < 2**32:
        raise ValueError("bound must be in [2, 2^32)")
    primes = arith.prime_table(bound // 2)
    hits: dict[int, Sigma3Hit] = {}
    for q in primes.tolist():
        if restrict_q and q % 3 == 1:
            continue
        qa, alpha = q, 1
        while qa * 2 <= bound:
            p = primes[: np.searchsorted(primes, bound // qa, side="right")]
            p = p[p != q]
            s = _sigma3_prime_power(q, alpha)
            # s mod p, evaluated as a geometric sum in int64 (p < 2^31)
            qm = q % p
            q3 = qm * qm % p * qm % p
            acc = np.ones_like(p)
            term = np.ones_like(p)
            for _ in range(alpha):
                term = term * q3 % p
                acc = (acc + term) % p
            pm = p % qa
            cube = pm * pm % qa * pm % qa
            ok = (acc == 0) & ((1 + cube) % qa * (s % qa) % qa == 0)
            for pv in p[ok].tolist():
                n = pv * qa
                if n not in hits:
                    hits[n] = Sigma3Hit(n, pv, q, alpha, arith.is_even_perfect(n))
            qa *= q
            alpha += 1
    out = [hits[n] for n in sorted(hits)]
    _flag(out, "p*q^alpha scan")
    return out


def conjecture_scan(bound: int) -> list[tuple[int, bool]]:
    """(n, even_perfect) for every n <= bound with omega(n) = 2 and n | sigma_3(n)."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    primes = arith.primes_up_to(bound // 2)
    found: set[int] = set()
    for i, p in enumerate(primes):
        if p * p >= bound:
            break
        pa, sp = p, 1 + p**3
        while pa * (p + 1) <= bound:
            for q in primes[i + 1 :]:
                if pa * q > bound:
                    break
                qb, sq = q, 1 + q**3
                while pa * qb <= bound:
                    n = pa * qb
                    if sp * sq % n == 0:
                        found.add(n)
                    qb *= q
                    sq += qb**3
            pa *= p
            sp += pa**3
    out = [(n, arith.is_even_perfect(n)) for n in sorted(found)]
    for n, perfect in out:
        if not perfect:
            log.warning("conjecture scan: n=%d has omega=2 and n | sigma_3(n) but is not even perfect", n)
    return out


def even_perfect_numbers(bound: int) -> list[int]:
    """Even perfect numbers <= bound, from Mersenne primes."""
    out = []
    a = 2
    while (1 << (a - 1)) * ((1 << a) - 1) <= bound:
        if arith.is_prime((1 << a) - 1):
            out.append((1 << (a - 1)) * ((1 << a) - 1))
        a += 1
    return out


def two_prime_factor_numbers(bound: int) -> list[int]:
    """Every n <= bound with exactly two distinct prime factors (sieve on omega)."""
    omega = np.zeros(bound + 1, dtype=np.int8)
    for p in arith.prime_table(bound).tolist():
        omega[p::p] += 1
    return np.flatnonzero(omega == 2).tolist()


__all__ = [
    "Sigma3Hit",
    "conjecture_scan",
    "divides_sigma3",
    "even_perfect_numbers",
    "scan_pq_alpha",
    "two_prime_factor_numbers",
]
