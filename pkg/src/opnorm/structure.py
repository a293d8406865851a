"""Detection of structured matrix classes and their closed-form (p,q)-norms.

The catalog, from most to least specific:

  identity             A = I
  unitary-permutation  one entry of modulus 1 per row and column
  scaled-all-ones      every entry equals a >= 0
  circulant            a_ij = a_{sigma^i(j)} for an n-cycle sigma, a_k >= 0
  magic-squared        nonnegative entries, all row and column sums equal
  general              everything else

The latter four (with nonnegative data) all have equal row and column sums
alpha, and for q <= p the operator norm is alpha * n^(1/q - 1/p), attained by
the all-ones vector.  Boundary lines add further closed forms per class.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exponents import (
    Exponent,
    functional_maximizer,
    hoelder_max,
    vector_norm,
)
from .result import STATUS_EXACT, NormEstimate

__all__ = [
    "TAG_IDENTITY",
    "TAG_UNITARY_PERMUTATION",
    "TAG_SCALED_ALL_ONES",
    "TAG_CIRCULANT",
    "TAG_MAGIC",
    "TAG_GENERAL",
    "MatrixClass",
    "as_matrix",
    "all_ones_vector",
    "is_entrywise_nonneg",
    "magic_alpha",
    "classify",
    "circulant_matrix",
    "closed_form_norm",
]

TAG_IDENTITY = "identity"
TAG_UNITARY_PERMUTATION = "unitary-permutation"
TAG_SCALED_ALL_ONES = "scaled-all-ones"
TAG_CIRCULANT = "circulant"
TAG_MAGIC = "magic-squared"
TAG_GENERAL = "general"

#: node budget for the circulant backtracking search
_CIRCULANT_BUDGET = 200_000


@dataclass(frozen=True, eq=False)
class MatrixClass:
    """Classification result.  Parameters are populated per tag.

    sigma is 1-based: for unitary-permutation, sigma[i] is the column of the
    nonzero in row i+1; for circulant it is the cycle with row i equal to
    (a_{sigma^i(j)})_j and generators equal to the last row.
    """

    tag: str
    alpha: Optional[float] = None
    scale: Optional[float] = None
    generators: Optional[tuple] = None
    sigma: Optional[tuple] = None
    phases: Optional[tuple] = None


def as_matrix(entries) -> np.ndarray:
    """Coerce to a square 2-d complex array with n >= 1."""
    A = np.asarray(entries, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError(f"expected a nonempty square matrix, got shape {A.shape}")
    return A


def all_ones_vector(n: int) -> np.ndarray:
    """The vector of n ones; the shared maximizer of the wedge closed forms."""
    if n < 1:
        raise ValueError("n must be positive")
    return np.ones(n, dtype=complex)


def is_entrywise_nonneg(A, tol: float = 1e-12) -> bool:
    """True when A is real with nonnegative entries, within tol."""
    A = np.asarray(A, dtype=complex)
    return bool(np.max(np.abs(A.imag)) <= tol and np.min(A.real) >= -tol)


def magic_alpha(A, tol: float = 1e-9) -> Optional[float]:
    """The common row/column sum when A is entrywise nonnegative with all row
    and column sums equal, else None.  Sum agreement is checked within
    tol * max(1, |alpha|)."""
    A = as_matrix(A)
    if np.max(np.abs(A.imag)) > tol:
        return None
    R = A.real
    row_sums = R.sum(axis=1)
    col_sums = R.sum(axis=0)
    alpha = float(row_sums.mean())
    thr = tol * max(1.0, abs(alpha))
    if np.min(R) < -thr:
        return None
    if np.max(np.abs(row_sums - alpha)) > thr or np.max(np.abs(col_sums - alpha)) > thr:
        return None
    return max(alpha, 0.0)


def _match_unitary_permutation(A: np.ndarray, tol: float) -> Optional[MatrixClass]:
    n = A.shape[0]
    mask = np.abs(A) > tol
    if not (np.all(mask.sum(axis=1) == 1) and np.all(mask.sum(axis=0) == 1)):
        return None
    cols = np.argmax(mask, axis=1)
    entries = A[np.arange(n), cols]
    if np.max(np.abs(np.abs(entries) - 1.0)) > tol:
        return None
    return MatrixClass(
        TAG_UNITARY_PERMUTATION,
        sigma=tuple(int(c) + 1 for c in cols),
        phases=tuple(complex(e) for e in entries),
    )


def _is_n_cycle(sigma0: np.ndarray) -> bool:
    """sigma0 is a 0-based permutation array; check it is a single n-cycle."""
    n = sigma0.size
    seen = 1
    j = int(sigma0[0])
    while j != 0 and seen <= n:
        j = int(sigma0[j])
        seen += 1
    return seen == n


def _verify_circulant(R: np.ndarray, gen: np.ndarray, sigma0: np.ndarray, tol: float) -> bool:
    n = R.shape[0]
    power = sigma0.copy()
    for i in range(n):
        if np.max(np.abs(R[i] - gen[power])) > tol:
            return False
        power = sigma0[power]
    return True


def _match_circulant(R: np.ndarray, tol: float) -> Optional[MatrixClass]:
    n = R.shape[0]
    if n < 2 or np.min(R) < -tol:
        return None
    gen = R[n - 1]
    scale = max(1.0, float(np.max(np.abs(gen))))
    mtol = tol * scale
    budget = [_CIRCULANT_BUDGET]
    assigned = np.full(n, -1, dtype=int)
    used = np.zeros(n, dtype=bool)

    def extend(j: int) -> Optional[np.ndarray]:
        # assign sigma(j+1), matching row 1 of R against the generators
        if budget[0] <= 0:
            return None
        budget[0] -= 1
        if j == n:
            sigma0 = assigned.copy()
            if _is_n_cycle(sigma0) and _verify_circulant(R, gen, sigma0, mtol):
                return sigma0
            return None
        for k in range(n):
            if not used[k] and abs(R[0, j] - gen[k]) <= mtol:
                assigned[j] = k
                used[k] = True
                found = extend(j + 1)
                used[k] = False
                if found is not None:
                    return found
        return None

    sigma0 = extend(0)
    if sigma0 is None:
        return None
    return MatrixClass(
        TAG_CIRCULANT,
        alpha=float(gen.sum()),
        generators=tuple(float(g) for g in gen),
        sigma=tuple(int(s) + 1 for s in sigma0),
    )


def classify(A, tol: float = 1e-9) -> MatrixClass:
    """Most specific catalog tag for A at the given entry tolerance."""
    A = as_matrix(A)
    n = A.shape[0]
    if np.max(np.abs(A - np.eye(n))) <= tol:
        return MatrixClass(TAG_IDENTITY)
    up = _match_unitary_permutation(A, tol)
    if up is not None:
        return up
    if np.max(np.abs(A.imag)) <= tol and np.min(A.real) >= -tol:
        R = A.real
        a = float(R.mean())
        if np.max(np.abs(R - a)) <= tol * max(1.0, abs(a)):
            return MatrixClass(TAG_SCALED_ALL_ONES, scale=max(a, 0.0), alpha=max(a, 0.0) * n)
        circ = _match_circulant(R, tol)
        if circ is not None:
            return circ
        alpha = magic_alpha(A, tol)
        if alpha is not None:
            return MatrixClass(TAG_MAGIC, alpha=alpha)
    return MatrixClass(TAG_GENERAL)


def circulant_matrix(generators, sigma) -> np.ndarray:
    """Build the matrix with rows (a_{sigma^i(j)})_j for i = 1..n.

    generators lists a_1..a_n; sigma is the 1-based image tuple of an
    n-cycle.  The last row of the result equals the generators.
    """
    gen = np.asarray(generators, dtype=float)
    n = gen.size
    sigma0 = np.asarray([s - 1 for s in sigma], dtype=int)
    if sigma0.size != n or sorted(sigma0.tolist()) != list(range(n)):
        raise ValueError("sigma must be a permutation of 1..n")
    if n > 1 and not _is_n_cycle(sigma0):
        raise ValueError("sigma must be a single n-cycle")
    A = np.empty((n, n), dtype=float)
    power = sigma0.copy()
    for i in range(n):
        A[i] = gen[power]
        power = sigma0[power]
    return A


def _wedge_value(cls_alpha: float, n: int, u: float, v: float) -> float:
    return cls_alpha * n ** (v - u)


def closed_form_norm(klass: MatrixClass, n: int, p: Exponent, q: Exponent) -> Optional[NormEstimate]:
    """Exact ||A||_{p,q} from the classification alone, or None.

    Wedge means q <= p (where the alpha * n^(1/q-1/p) family applies); the
    circulant adds the full p = 1 and q = inf lines.
    """
    u = p.reciprocal()
    v = q.reciprocal()
    wedge = v >= u - 1e-12

    def xi_witness() -> np.ndarray:
        return all_ones_vector(n) / n ** u

    if klass.tag in (TAG_IDENTITY, TAG_UNITARY_PERMUTATION):
        if wedge:
            return NormEstimate(n ** (v - u), STATUS_EXACT, "closed-form", witness=xi_witness())
        e1 = np.zeros(n, dtype=complex)
        e1[0] = 1.0
        return NormEstimate(1.0, STATUS_EXACT, "closed-form", witness=e1)
    if klass.tag == TAG_SCALED_ALL_ONES:
        a = float(klass.scale)
        return NormEstimate(a * n ** (1.0 - u + v), STATUS_EXACT, "closed-form", witness=xi_witness())
    if klass.tag == TAG_CIRCULANT:
        gen = np.asarray(klass.generators, dtype=float)
        if gen.size != n:
            raise ValueError("generator count does not match matrix size")
        if wedge:
            return NormEstimate(_wedge_value(float(gen.sum()), n, u, v), STATUS_EXACT,
                                "closed-form", witness=xi_witness())
        if q.is_inf:
            row0 = gen[np.asarray([s - 1 for s in klass.sigma], dtype=int)]
            return NormEstimate(hoelder_max(row0, p), STATUS_EXACT, "closed-form",
                                witness=functional_maximizer(row0, p))
        if p.is_one:
            e1 = np.zeros(n, dtype=complex)
            e1[0] = 1.0
            return NormEstimate(vector_norm(gen, q), STATUS_EXACT, "closed-form", witness=e1)
        return None
    if klass.tag == TAG_MAGIC:
        if wedge:
            return NormEstimate(_wedge_value(float(klass.alpha), n, u, v), STATUS_EXACT,
                                "closed-form", witness=xi_witness())
        return None
    return None
