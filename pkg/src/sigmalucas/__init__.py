"""Exact solver for sigma_2(n) - n^2 = A n + B via Lucas sequences, with a sigma_3 harness."""

from .arith import factorize, is_prime, sigma_k
from .lucas import LucasParams, lucas_u, lucas_v
from .solver import EquationInstance, SolveConfig, solve

__version__ = "0.1.0"

__all__ = [
    "EquationInstance",
    "LucasParams",
    "SolveConfig",
    "factorize",
    "is_prime",
    "lucas_u",
    "lucas_v",
    "sigma_k",
    "solve",
]
