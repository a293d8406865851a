"""Top-level solving: one entry point for a single pair, one for grids.

compute_norm tries, in order: classification closed forms, exact boundary
evaluators, then a certified bracket (or bare lower bound) from the
estimators.  scan_grid maps it over the reciprocal-exponent lattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .estimate import EstimatorConfig, bracket_norm
from .exponents import Exponent
from .result import NormEstimate
from .structure import as_matrix

__all__ = ["compute_norm", "ScanCell", "scan_grid"]


def compute_norm(A, p: Exponent, q: Exponent, config: Optional[EstimatorConfig] = None,
                 tol: float = 1e-9) -> NormEstimate:
    """Best available answer for ||A||_{p,q}; exact whenever possible."""
    return bracket_norm(A, p, q, config=config, tol=tol)


@dataclass(frozen=True)
class ScanCell:
    """One lattice cell of a scan, in reciprocal coordinates."""

    u: float
    v: float
    value: float
    status: str
    method: str


def scan_grid(A, resolution: int = 8, config: Optional[EstimatorConfig] = None,
              tol: float = 1e-9) -> List[ScanCell]:
    """Evaluate the (resolution+1)^2 lattice {k/resolution} x {k/resolution}.

    Cells are ordered with u ascending in the outer loop and v in the inner,
    so output is deterministic for a fixed config.
    """
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    A = as_matrix(A)
    cells = []
    for i in range(resolution + 1):
        u = i / resolution
        p = Exponent.from_reciprocal(u)
        for j in range(resolution + 1):
            v = j / resolution
            q = Exponent.from_reciprocal(v)
            est = compute_norm(A, p, q, config=config, tol=tol)
            cells.append(ScanCell(u, v, est.value, est.status, est.method))
    return cells
