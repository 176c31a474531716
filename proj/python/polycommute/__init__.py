"""Commuting polynomial pairs: residuals, affine normal forms and exhaustive checks.

Polynomials are passed as text, e.g. ``"x^2 + 2*x"`` for P and
``"x1*x2 + x1 + x2"`` for Q in ``nu`` variables.
"""

import json

from ._core import (
    ArityMismatch,
    BackendMismatch,
    BudgetExceeded,
    ParseError,
    PreconditionError,
    canonical,
    commutes,
    residual,
    run_cli,
)
from . import _core

__all__ = [
    "ArityMismatch",
    "BackendMismatch",
    "BudgetExceeded",
    "ParseError",
    "PreconditionError",
    "canonical",
    "census",
    "classify",
    "commutes",
    "decompose",
    "residual",
    "run_cli",
    "search",
]


def classify(p, q, nu=2):
    """Classification report of the pair (P, Q) as a dict."""
    return json.loads(_core.classify_json(p, q, nu))


def decompose(q, nu=2):
    """Homogeneous parts and per-variable splits of Q."""
    return json.loads(_core.decompose_json(q, nu))


def _grid(values):
    return [str(v) for v in values]


def search(p, nu=2, max_total_degree=2, grid=(-1, 0, 1), workers=1, budget=10_000_000):
    """Exhaustive search for Q commuting with P over a coefficient grid."""
    return json.loads(_core.search_json(p, nu, max_total_degree, _grid(grid), workers, budget))


def census(n, nu=2, max_total_degree=2, grid=(-1, 0, 1), workers=1, budget=10_000_000):
    """Exhaustive search for solutions of Q(x^n) = Q^n."""
    return json.loads(_core.census_json(n, nu, max_total_degree, _grid(grid), workers, budget))
