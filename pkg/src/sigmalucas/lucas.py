"""Lucas sequences U_k(P, Q), V_k(P, Q) and the recurrence identities they obey.

`lucas_uv` is the evaluator everything else uses: a binary ladder on
(U_k, V_k, Q^k). `naive_u` / `naive_v` iterate the recurrence and only
exist to cross-check it.

The identity checkers return (lhs, rhs) so a mismatch can be printed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Literal


@dataclass(frozen=True)
class LucasParams:
    P: int
    Q: int

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q


@dataclass(frozen=True)
class RecurrenceSeed:
    """A_0, A_1 and the recurrence A_n = u*A_{n-1} + v*A_{n-2}."""

    A0: int
    A1: int
    u: int
    v: int

    def terms(self, count: int) -> list[int]:
        # the cache holds whole chunks of 64 terms
        return _seed_terms(self, -(-count // 64) * 64)[:count]


@lru_cache(maxsize=4096)
def _seed_terms(seed: RecurrenceSeed, count: int) -> list[int]:
    seq = [seed.A0, seed.A1]
    while len(seq) < count:
        seq.append(seed.u * seq[-1] + seed.v * seq[-2])
    return seq


def _as_params(params) -> LucasParams:
    if isinstance(params, LucasParams):
        return params
    P, Q = params
    return LucasParams(P, Q)


def _lucas_uv_nonneg(P: int, Q: int, k: int) -> tuple[int, int, int]:
    D = P * P - 4 * Q
    U, V, Qk = 0, 2, 1
    for bit in bin(k)[2:]:
        U, V = U * V, V * V - 2 * Qk
        Qk *= Qk
        if bit == "1":
            # both numerators are even: they equal 2*U_{k+1} and 2*V_{k+1}
            U, V = (P * U + V) // 2, (D * U + P * V) // 2
            Qk *= Q
    return U, V, Qk


def lucas_uv(params, k: int) -> tuple[int, int]:
    """(U_k, V_k) for any integer k; negative k needs |Q| = 1."""
    p = _as_params(params)
    if k >= 0:
        U, V, _ = _lucas_uv_nonneg(p.P, p.Q, k)
        return U, V
    if abs(p.Q) != 1:
        raise ValueError(f"U/V at negative index {k} is not integral for Q={p.Q}")
    U, V, Qk = _lucas_uv_nonneg(p.P, p.Q, -k)
    # Q^-j == Q^j when Q = +-1
    return -Qk * U, Qk * V


def lucas_u(params, k: int) -> int:
    return lucas_uv(params, k)[0]


def lucas_v(params, k: int) -> int:
    return lucas_uv(params, k)[1]


def naive_u(params, k: int) -> int:
    p = _as_params(params)
    if k < 0:
        if abs(p.Q) != 1:
            raise ValueError("negative index needs |Q| = 1")
        return -(p.Q**-k) * naive_u(p, -k)
    a, b = 0, 1
    for _ in range(k):
        a, b = b, p.P * b - p.Q * a
    return a


def naive_v(params, k: int) -> int:
    p = _as_params(params)
    if k < 0:
        if abs(p.Q) != 1:
            raise ValueError("negative index needs |Q| = 1")
        return p.Q**-k * naive_v(p, -k)
    a, b = 2, p.P
    for _ in range(k):
        a, b = b, p.P * b - p.Q * a
    return a


@lru_cache(maxsize=4096)
def s_poly(k: int, u: int, v: int) -> int:
    """sum_{i=0}^{floor(k/2)} C(k-i, i) u^(k-2i) v^i."""
    if k < 0:
        raise ValueError("s_poly needs k >= 0")
    return sum(comb(k - i, i) * u ** (k - 2 * i) * v**i for i in range(k // 2 + 1))


def _seed_const(seed: RecurrenceSeed) -> int:
    return seed.v * seed.A0**2 + seed.u * seed.A0 * seed.A1 - seed.A1**2


def check_catalan(seed: RecurrenceSeed, n: int, r: int) -> tuple[int, int]:
    """Both sides of A_{n+r} A_{n-r} - A_n^2 = (-v)^(n-r) s(r-1,u,v)^2 c."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    A = seed.terms(n + r + 1)
    lhs = A[n + r] * A[n - r] - A[n] ** 2
    rhs = (-seed.v) ** (n - r) * s_poly(r - 1, seed.u, seed.v) ** 2 * _seed_const(seed)
    return lhs, rhs


ParityVariant = Literal["even_v1", "odd_v1", "v_minus1"]
PARITY_VARIANTS: tuple[str, ...] = ("even_v1", "odd_v1", "v_minus1")


def check_parity_identity(variant: ParityVariant, seed: RecurrenceSeed, n: int) -> tuple[int, int]:
    """The r = 1 specialisations of the Catalan-type identity.

    even_v1   (v = 1):  1 + A_{2n}^2 + A_{2n+2}^2
    odd_v1    (v = 1):  1 + A_{2n-1}^2 + A_{2n+1}^2
    v_minus1  (v = -1): 1 + A_{n-1}^2 + A_{n+1}^2
    """
    u = seed.u
    if variant in ("even_v1", "odd_v1"):
        if seed.v != 1:
            raise ValueError(f"{variant} needs v = 1, got v = {seed.v}")
        i, j = (2 * n, 2 * n + 2) if variant == "even_v1" else (2 * n - 1, 2 * n + 1)
        if i < 0:
            raise ValueError(f"{variant} needs n >= {1 if variant == 'odd_v1' else 0}")
        A = seed.terms(j + 1)
        c = seed.A0**2 + u * seed.A0 * seed.A1 - seed.A1**2
        sign = -1 if variant == "even_v1" else 1
        lhs = 1 + A[i] ** 2 + A[j] ** 2
        rhs = (u * u + 2) * A[i] * A[j] + sign * u * u * c + 1
        return lhs, rhs
    if variant == "v_minus1":
        if seed.v != -1:
            raise ValueError(f"v_minus1 needs v = -1, got v = {seed.v}")
        if n < 1:
            raise ValueError("v_minus1 needs n >= 1")
        A = seed.terms(n + 2)
        c = seed.A0**2 - u * seed.A0 * seed.A1 + seed.A1**2
        lhs = 1 + A[n - 1] ** 2 + A[n + 1] ** 2
        rhs = (u * u - 2) * A[n - 1] * A[n + 1] + u * u * c + 1
        return lhs, rhs
    raise ValueError(f"unknown variant {variant!r}")


def _q_power(Q: int, e: int) -> int:
    if e >= 0:
        return Q**e
    if abs(Q) != 1:
        raise ValueError(f"Q^{e} is not integral for Q={Q}")
    return Q ** (-e)


def check_lucas_relation(relation: int, params, k: int, l: int = 0) -> tuple[int, int]:
    """Both sides of one of the six classical U/V relations.

    1: V_k = U_{k+1} - Q U_{k-1}
    2: (P^2-4Q) U_k = V_{k+1} - Q V_{k-1}
    3: 2 U_{k+l} = U_k V_l + U_l V_k
    4: 2 Q^l U_{k-l} = U_k V_l - U_l V_k
    5: 2 V_{k+l} = (P^2-4Q) U_k U_l + V_k V_l
    6: 2 Q^l V_{k-l} = V_k V_l - (P^2-4Q) U_k U_l

    Relations 1 and 2 ignore l.
    """
    p = _as_params(params)
    Q, D = p.Q, p.discriminant
    U = lambda i: lucas_u(p, i)  # noqa: E731
    V = lambda i: lucas_v(p, i)  # noqa: E731
    if relation == 1:
        return V(k), U(k + 1) - Q * U(k - 1)
    if relation == 2:
        return D * U(k), V(k + 1) - Q * V(k - 1)
    if relation == 3:
        return 2 * U(k + l), U(k) * V(l) + U(l) * V(k)
    if relation == 4:
        return 2 * _q_power(Q, l) * U(k - l), U(k) * V(l) - U(l) * V(k)
    if relation == 5:
        return 2 * V(k + l), D * U(k) * U(l) + V(k) * V(l)
    if relation == 6:
        return 2 * _q_power(Q, l) * V(k - l), V(k) * V(l) - D * U(k) * U(l)
    raise ValueError(f"relation must be in 1..6, got {relation}")


def is_degenerate(params) -> bool:
    """True when U_k(P, Q) is periodic with values in {0, +-1}.

    Only |Q| = 1 matters to the solver: (P, Q) = (0, -1), (0, 1), (+-1, 1).
    """
    p = _as_params(params)
    return (p.Q == -1 and p.P == 0) or (p.Q == 1 and abs(p.P) <= 1)
