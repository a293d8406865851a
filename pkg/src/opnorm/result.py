"""Norm estimates: a value, its certification status, and an optional witness.

Status semantics:
  * exact         -- value equals the operator norm up to roundoff
  * lower-bound   -- value is attained by the witness, nothing above certified
  * bracket       -- value = lo is witness-certified and lo <= norm <= hi
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exponents import Exponent, vector_norm

__all__ = [
    "STATUS_EXACT",
    "STATUS_LOWER",
    "STATUS_BRACKET",
    "NormEstimate",
    "witness_ratio",
]

STATUS_EXACT = "exact"
STATUS_LOWER = "lower-bound"
STATUS_BRACKET = "bracket"


@dataclass(frozen=True, eq=False)
class NormEstimate:
    """Result of evaluating or estimating ||A||_{p,q}.

    value is the reported norm (for brackets, the certified lower end).  The
    witness, when present, is a vector with ||witness||_p = 1 whose image
    q-norm equals value up to roundoff.  histories carries per-restart
    objective sequences for iterative estimators.
    """

    value: float
    status: str
    method: str
    witness: Optional[np.ndarray] = None
    lo: Optional[float] = None
    hi: Optional[float] = None
    histories: Optional[tuple] = None

    def __post_init__(self):
        if self.status not in (STATUS_EXACT, STATUS_LOWER, STATUS_BRACKET):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == STATUS_BRACKET and (self.lo is None or self.hi is None):
            raise ValueError("bracket estimates need both lo and hi")


def witness_ratio(A, p: Exponent, q: Exponent, witness) -> float:
    """||A w||_q / ||w||_p for a candidate maximizer w."""
    A = np.asarray(A, dtype=complex)
    w = np.asarray(witness, dtype=complex)
    denom = vector_norm(w, p)
    if denom == 0.0:
        raise ValueError("witness must be nonzero")
    return vector_norm(A @ w, q) / denom
