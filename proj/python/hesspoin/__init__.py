"""Poincare polynomials of regular nilpotent partial Hessenberg varieties.

Coefficients come back as ascending lists of Python ints.
"""

from . import _core
from ._core import HessError, hessenberg_ideal, roots, run_cli, theta_ideals

__all__ = [
    "HessError",
    "hessenberg_ideal",
    "poincare",
    "poincare_hessenberg",
    "roots",
    "run_cli",
    "theta_ideals",
]


def poincare(family, rank, ideal, theta=(), method="product"):
    return [int(c) for c in _core.poincare(family, rank, list(ideal), list(theta), method)]


def poincare_hessenberg(n, K, h):
    return [int(c) for c in _core.poincare_hessenberg(n, list(K), list(h))]
