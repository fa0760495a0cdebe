"""x^2 - D y^2 = +-4 for D = P^2 + 4 and D = P^2 - 4, solved with Lucas sequences.

    D = P^2 + 4, rhs = +4:  (x, y) = (V_2k, U_2k)(P, -1)
    D = P^2 + 4, rhs = -4:  (x, y) = (V_2k+1, U_2k+1)(P, -1)
    D = P^2 - 4, rhs = +4:  (x, y) = (V_k, U_k)(P, 1)

Only non-negative (x, y) are emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .lucas import LucasParams, lucas_uv


class ShapeKind(str, Enum):
    PLUS4 = "PLUS4"
    MINUS4 = "MINUS4"
    UNSUPPORTED = "UNSUPPORTED"


class UnsupportedShapeError(ValueError):
    pass


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class PellShape:
    D: int
    kind: ShapeKind
    P: int | None = None

    def __post_init__(self):
        if self.kind is ShapeKind.PLUS4 and self.D != self.P * self.P + 4:
            raise ValueError(f"D={self.D} is not P^2+4 for P={self.P}")
        if self.kind is ShapeKind.MINUS4 and self.D != self.P * self.P - 4:
            raise ValueError(f"D={self.D} is not P^2-4 for P={self.P}")

    def __str__(self):
        if self.kind is ShapeKind.UNSUPPORTED:
            return f"UNSUPPORTED(D={self.D})"
        return f"{self.kind.value}(P={self.P})"


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    k: int
    D: int
    rhs: int

    def __post_init__(self):
        if self.x * self.x - self.D * self.y * self.y != self.rhs:
            raise ArithmeticError(
                f"({self.x}, {self.y}) does not solve x^2 - {self.D} y^2 = {self.rhs}"
            )


def classify(D: int) -> PellShape:
    if D < 2:
        raise ValueError(f"D must be >= 2, got {D}")
    if _is_square(D):
        raise ValueError(f"D={D} is a perfect square")
    if D >= 4:
        P = isqrt(D - 4)
        if P * P + 4 == D:
            return PellShape(D, ShapeKind.PLUS4, P)
    P = isqrt(D + 4)
    if P * P - 4 == D:
        return PellShape(D, ShapeKind.MINUS4, P)
    return PellShape(D, ShapeKind.UNSUPPORTED)


def is_solution(D: int, rhs: int, x: int, y: int) -> bool:
    return x * x - D * y * y == rhs


def _generator(shape: PellShape, rhs: int):
    if shape.kind is ShapeKind.UNSUPPORTED:
        raise UnsupportedShapeError(f"no Lucas characterisation for D={shape.D}")
    if rhs not in (4, -4):
        raise ValueError(f"rhs must be +4 or -4, got {rhs}")
    if shape.kind is ShapeKind.PLUS4:
        params = LucasParams(shape.P, -1)
        offset = 0 if rhs == 4 else 1
        return lambda k: lucas_uv(params, 2 * k + offset)
    if rhs == -4:
        raise UnsupportedShapeError("x^2 - (P^2-4) y^2 = -4 is not covered for the MINUS4 shape")
    params = LucasParams(shape.P, 1)
    return lambda k: lucas_uv(params, k)


def iter_pm4(shape: PellShape, rhs: int):
    """Yield solutions in increasing y, forever."""
    gen = _generator(shape, rhs)
    k, last_y = 0, -1
    while True:
        U, V = gen(k)
        x, y = abs(V), abs(U)
        if y > last_y:
            yield PellSolution(x, y, k, shape.D, rhs)
            last_y = y
        k += 1


def solve_pm4(shape: PellShape, rhs: int, count: int) -> list[PellSolution]:
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for sol in iter_pm4(shape, rhs):
        out.append(sol)
        if len(out) == count:
            return out
    return out


def solutions_up_to(shape: PellShape, rhs: int, y_max: int) -> list[PellSolution]:
    out = []
    for sol in iter_pm4(shape, rhs):
        if sol.y > y_max:
            return out
        out.append(sol)
    return out


def brute_force_pm4(D: int, rhs: int, y_max: int) -> list[tuple[int, int]]:
    """All (x, y) with x, y >= 0, y <= y_max and x^2 - D y^2 = rhs, by scanning y."""
    out = []
    for y in range(y_max + 1):
        t = D * y * y + rhs
        if t >= 0:
            x = isqrt(t)
            if x * x == t:
                out.append((x, y))
    return out
