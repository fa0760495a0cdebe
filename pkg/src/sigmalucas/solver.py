"""Solve sigma_2(n) - n^2 = A n + B.

Four independent routes feed a `SolutionReport`:

* `brute_force`        sieve sigma_2 over n <= (|A|+|B|)^3 (the sporadic range)
* `semiprime_search`   n = p q with p^2 + q^2 + 1 - B = A p q, one quadratic per prime q
* `recognize_patterns` match (A, B) against the ten Lucas-sequence shapes
* `family_solutions`   generate n = p q from prime Lucas terms for a matched shape

Every n placed in a report is re-checked against sigma_2 computed by `arith`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import arith
from .arith import Factorization, is_prime, sigma_from_factorization
from .lucas import LucasParams, is_degenerate, lucas_uv

log = logging.getLogger(__name__)

EXCLUDED_PAIRS = ((0, 1), (1, 1))

THEOREM_IDS = (
    "T1_1_c1",
    "T1_1_c2",
    "T1_1_c3",
    "T1_2_c1",
    "T1_2_c2",
    "T1_2_c3",
    "T3",
    "T4",
    "T5",
    "T6",
)
M_THEOREMS = frozenset({"T3", "T4", "T5", "T6"})


class ExcludedInstanceError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """A cross-check that the mathematics guarantees has failed."""


@dataclass(frozen=True)
class EquationInstance:
    A: int
    B: int

    @property
    def sporadic_bound(self) -> int:
        return (abs(self.A) + abs(self.B)) ** 3

    @property
    def excluded(self) -> bool:
        return (self.A, self.B) in EXCLUDED_PAIRS

    def residual(self, n: int, sigma2: int) -> int:
        return sigma2 - n * n - self.A * n - self.B

    def require_searchable(self) -> None:
        if self.excluded:
            raise ExcludedInstanceError(
                f"(A, B) = ({self.A}, {self.B}) is excluded: the reduction to n = p*q "
                f"needs (A, B) not in {{(0, 1), (1, 1)}}"
            )


def semiprime_sigma2(p: int, q: int) -> int:
    return sigma_from_factorization(Factorization(((min(p, q), 1), (max(p, q), 1))), 2)


def satisfies(instance: EquationInstance, n: int, sigma2: int | None = None) -> bool:
    if sigma2 is None:
        sigma2 = arith.sigma_k(n, 2)
    return instance.residual(n, sigma2) == 0


# --------------------------------------------------------------------------
# brute force over the sporadic range


@dataclass(frozen=True)
class BruteForceResult:
    solutions: list[int]
    scanned_to: int
    complete: bool


def _scan_block(args: tuple[int, int, int, int]) -> list[int]:
    lo, hi, A, B = args
    s = arith.sigma2_block(lo, hi)
    n = np.arange(lo, hi, dtype=np.int64)
    # int64 is enough while |sigma2 - n^2 - A n - B| stays below 2^62
    if s.dtype == object or abs(A) * hi + abs(B) + 2 * hi * hi >= 1 << 62:
        s = s.astype(object)
        n = n.astype(object)
    hits = np.flatnonzero(s - n * n - A * n - B == 0)
    return [lo + int(i) for i in hits]


def brute_force(
    instance: EquationInstance,
    cap: int,
    *,
    block_size: int | None = None,
    workers: int = 1,
) -> BruteForceResult:
    """All n <= min(cap, (|A|+|B|)^3) solving the equation.

    n = 1 is always scanned, even when the bound is 0.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    bound = instance.sporadic_bound
    top = max(1, min(cap, bound))
    size = block_size or arith.default_block_size()
    jobs = [(a, b, instance.A, instance.B) for a, b in arith.block_ranges(1, top + 1, size)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_block, jobs))
    else:
        parts = [_scan_block(j) for j in jobs]
    sols = [n for part in parts for n in part]
    return BruteForceResult(sols, top, top >= bound)


# --------------------------------------------------------------------------
# n = p q


def semiprime_search(instance: EquationInstance, q_limit: int) -> list[tuple[int, int]]:
    """Unordered prime pairs p < q <= q_limit with p^2 + q^2 + 1 - B = A p q.

    For each prime q both roots of p^2 - A q p + (q^2 + 1 - B) = 0 are tried.
    """
    if q_limit < 2:
        raise ValueError("q_limit must be >= 2")
    A, B = instance.A, instance.B
    found = set()
    for q in arith.primes_up_to(q_limit):
        disc = A * A * q * q - 4 * (q * q + 1 - B)
        if disc < 0:
            continue
        r = isqrt(disc)
        if r * r != disc:
            continue
        for num in {A * q + r, A * q - r}:
            if num <= 0 or num % 2:
                continue
            p = num // 2
            if p == q or p > q_limit or not is_prime(p):
                continue
            found.add((min(p, q), max(p, q)))
    pairs = sorted(found)
    for p, q in pairs:
        if not satisfies(instance, p * q, semiprime_sigma2(p, q)):
            raise InvariantViolation(f"semiprime pair ({p}, {q}) fails the sigma_2 check")
    return pairs


def lemma_quadratic(A: int, B: int, p: int, q: int) -> bool:
    return p * p + q * q + 1 - B == A * p * q


def lemma_pell_form(A: int, B: int, p: int, q: int) -> bool:
    return (2 * p - A * q) ** 2 - (A * A - 4) * q * q == 4 * (B - 1)


# --------------------------------------------------------------------------
# theorem shapes


@dataclass(frozen=True, order=True)
class TheoremPattern:
    theorem_id: str
    P: int
    m: int = 0

    def __post_init__(self):
        if self.theorem_id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem_id!r}")
        if (self.theorem_id in M_THEOREMS) != (self.m >= 1):
            raise ValueError(f"{self.theorem_id} with m={self.m}")

    def coefficients(self) -> tuple[int, int]:
        return pattern_coefficients(self.theorem_id, self.P, self.m)

    def side_conditions_hold(self) -> bool:
        P2 = self.P * self.P
        if self.theorem_id in ("T1_2_c1", "T1_2_c2", "T5", "T6"):
            return arith.is_squarefree(P2 + 4)
        if self.theorem_id == "T1_2_c3":
            return P2 - 4 >= 1 and arith.is_squarefree(P2 - 4)
        return True

    def label(self) -> str:
        if self.theorem_id in M_THEOREMS:
            return f"{self.theorem_id} P={self.P} m={self.m}"
        return f"{self.theorem_id} P={self.P}"


def pattern_coefficients(theorem_id: str, P: int, m: int = 0) -> tuple[int, int]:
    """(A, B) for a theorem shape."""
    P2 = P * P
    if theorem_id == "T1_1_c1":
        return P2 + 2, -P2 + 1
    if theorem_id == "T1_1_c2":
        return P2 + 2, P2 + 1
    if theorem_id == "T1_1_c3":
        return P2 - 2, P2 + 1
    if theorem_id == "T1_2_c1":
        return P2 + 2, -P2 * P2 - 4 * P2 + 1
    if theorem_id == "T1_2_c2":
        return P2 + 2, P2 * P2 + 4 * P2 + 1
    if theorem_id == "T1_2_c3":
        return P2 - 2, -P2 * P2 + 4 * P2 + 1
    U, V = lucas_uv((P, -1), 2 * m)
    if theorem_id == "T3":
        return V, -U * U + 1
    if theorem_id == "T4":
        return V, U * U + 1
    if theorem_id == "T5":
        return V, V * V - 3
    if theorem_id == "T6":
        return V, -V * V + 5
    raise ValueError(f"unknown theorem id {theorem_id!r}")


def recognize_patterns(instance: EquationInstance, P_limit: int, m_limit: int) -> list[TheoremPattern]:
    """Every shape with 0 <= P <= P_limit (and 1 <= m <= m_limit) giving (A, B).

    A and B depend on P only through P^2, so P is reported non-negative.
    """
    if P_limit < 1 or m_limit < 1:
        raise ValueError("P_limit and m_limit must be >= 1")
    target = (instance.A, instance.B)
    out = []
    for P in range(P_limit + 1):
        for tid in THEOREM_IDS:
            if tid in M_THEOREMS:
                for m in range(1, m_limit + 1):
                    A, _ = pattern_coefficients(tid, P, m)
                    # A = V_2m(P, -1) is non-decreasing in m for P >= 0
                    if A > abs(instance.A) and P > 0:
                        break
                    if pattern_coefficients(tid, P, m) == target:
                        out.append(TheoremPattern(tid, P, m))
            elif pattern_coefficients(tid, P) == target:
                out.append(TheoremPattern(tid, P))
    return sorted(p for p in out if p.side_conditions_hold())


# --------------------------------------------------------------------------
# Lucas families


@dataclass(frozen=True)
class FamilySolution:
    n: int
    p: int
    q: int
    pattern: TheoremPattern
    indices: tuple[int, int]
    proven: bool = True

    def __post_init__(self):
        if not self.p < self.q or self.p * self.q != self.n:
            raise ValueError(f"bad family solution {self}")


def _family_index_pairs(pattern: TheoremPattern, k_limit: int):
    """Yield (kind, i, j, main): factors are |kind_i| and |kind_j| of the pattern's sequence.

    `main` marks the k-indexed family; the second families of T3-T6
    (0 <= k < m, with the stated exclusions) come first and are finite.
    """
    tid, m = pattern.theorem_id, pattern.m
    if tid in M_THEOREMS:
        kind = "U" if tid in ("T3", "T4") else "V"
        odd = tid in ("T3", "T5")
        for k in range(min(m, k_limit + 1)):
            if odd and m != 2 * k + 1:
                yield kind, 2 * k + 1, 2 * m - 2 * k - 1, False
            elif not odd and m != 2 * k:
                yield kind, 2 * k, 2 * m - 2 * k, False
    shapes = {
        "T1_1_c1": ("U", 2, -1, 2, 1),
        "T1_1_c2": ("U", 2, 0, 2, 2),
        "T1_1_c3": ("U", 1, -1, 1, 1),
        "T1_2_c1": ("V", 2, 0, 2, 2),
        "T1_2_c2": ("V", 2, -1, 2, 1),
        "T1_2_c3": ("V", 1, -1, 1, 1),
        "T3": ("U", 2, 1, 2, 2 * m + 1),
        "T4": ("U", 2, 0, 2, 2 * m),
        "T5": ("V", 2, 1, 2, 2 * m + 1),
        "T6": ("V", 2, 0, 2, 2 * m),
    }
    # index = slope * k + offset for each factor
    kind, si, oi, sj, oj = shapes[tid]
    for k in range(k_limit + 1):
        yield kind, si * k + oi, sj * k + oj, True


def family_solutions(
    pattern: TheoremPattern, k_limit: int, *, n_max: int | None = None
) -> list[FamilySolution]:
    """Products of two distinct prime Lucas terms prescribed by the pattern.

    Indices run over 0 <= k <= k_limit; shifted indices below zero use the
    |Q| = 1 extension and absolute values. With `n_max`, products above it are
    dropped and generation stops once the terms alone exceed n_max / 2.
    Each survivor is checked against sigma_2 of its factorization.
    """
    if k_limit < 1:
        raise ValueError("k_limit must be >= 1")
    Q = 1 if pattern.theorem_id in ("T1_1_c3", "T1_2_c3") else -1
    if is_degenerate(LucasParams(pattern.P, Q)):
        log.warning("%s: (P, Q) = (%d, %d) is degenerate; no families", pattern.label(), pattern.P, Q)
        return []
    instance = EquationInstance(*pattern.coefficients())
    cache: dict[tuple[str, int], int] = {}

    def term(kind: str, i: int) -> int:
        key = (kind, i)
        if key not in cache:
            U, V = lucas_uv((pattern.P, Q), i)
            cache[key] = abs(U if kind == "U" else V)
        return cache[key]

    found: dict[int, FamilySolution] = {}
    for kind, i, j, main in _family_index_pairs(pattern, k_limit):
        a, b = term(kind, i), term(kind, j)
        if n_max is not None and a * b > n_max:
            # |terms| are non-decreasing once both indices are past 2
            if main and min(a, b) > n_max // 2 and min(i, j) > 2:
                break
            continue
        if a == b or a < 2 or b < 2:
            continue
        if not (is_prime(a) and is_prime(b)):
            continue
        p, q = min(a, b), max(a, b)
        n = p * q
        if not satisfies(instance, n, semiprime_sigma2(p, q)):
            raise InvariantViolation(
                f"{pattern.label()}: n = {p} * {q} from indices ({i}, {j}) fails sigma_2"
            )
        idx = (i, j) if a < b else (j, i)
        sol = FamilySolution(n, p, q, pattern, idx, proven=q < arith.PROVEN_PRIME_LIMIT)
        found.setdefault(n, sol)
    return [found[n] for n in sorted(found)]


# --------------------------------------------------------------------------
# orchestration


@dataclass(frozen=True)
class SolveConfig:
    brute_cap: int = 10**6
    q_limit: int = 10**6
    P_limit: int = 64
    m_limit: int = 16
    k_limit: int = 64
    block_size: int | None = None
    workers: int = 1


@dataclass
class SolutionReport:
    instance: EquationInstance
    config: SolveConfig
    sporadic: list[int]
    sporadic_scanned_to: int
    sporadic_complete: bool
    semiprime: list[tuple[int, int]]
    patterns: list[TheoremPattern]
    families: list[FamilySolution]
    diagnostics: list[str] = field(default_factory=list)

    def all_solutions(self) -> list[int]:
        ns = set(self.sporadic)
        ns.update(p * q for p, q in self.semiprime)
        ns.update(f.n for f in self.families)
        return sorted(ns)

    def family_values(self) -> list[int]:
        return sorted({f.n for f in self.families})


def solve(instance: EquationInstance, config: SolveConfig | None = None) -> SolutionReport:
    config = config or SolveConfig()
    instance.require_searchable()

    bf = brute_force(instance, config.brute_cap, block_size=config.block_size, workers=config.workers)
    semis = semiprime_search(instance, max(2, config.q_limit))
    patterns = recognize_patterns(instance, config.P_limit, config.m_limit)

    diagnostics = []
    families: dict[int, FamilySolution] = {}
    for pat in patterns:
        sols = family_solutions(pat, config.k_limit)
        Q = 1 if pat.theorem_id in ("T1_1_c3", "T1_2_c3") else -1
        if is_degenerate(LucasParams(pat.P, Q)):
            diagnostics.append(f"{pat.label()}: degenerate Lucas parameters, no families generated")
        for s in sols:
            families.setdefault(s.n, s)
            if not s.proven:
                diagnostics.append(f"{pat.label()}: n={s.n} uses probable primes above 2^64")

    semi_set = set(semis)
    for s in families.values():
        if s.q <= config.q_limit and (s.p, s.q) not in semi_set:
            raise InvariantViolation(f"family solution {s.p}*{s.q} missing from semiprime search")
    for n in bf.solutions:
        if not satisfies(instance, n):
            raise InvariantViolation(f"sporadic n={n} fails sigma_2 re-check")

    return SolutionReport(
        instance=instance,
        config=config,
        sporadic=bf.solutions,
        sporadic_scanned_to=bf.scanned_to,
        sporadic_complete=bf.complete,
        semiprime=semis,
        patterns=patterns,
        families=[families[n] for n in sorted(families)],
        diagnostics=diagnostics,
    )
