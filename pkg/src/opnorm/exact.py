"""Exact evaluators for ||A||_{p,q} on the boundary lines and special points.

Valid for every matrix:

  p = 1 line      max column q-norm
  q = inf line    max row p'-norm (Hoelder duality rowwise)
  (2, 2)          largest singular value

For entrywise nonnegative matrices two more lines are exact:

  p = inf line    p-norm of the row-sum vector (all-ones maximizer)
  q = 1 line      via conjugate duality ||A||_{p,1} = ||A*||_{inf,p'}

For general complex matrices the p = inf and q = 1 lines have no finite
exact algorithm here (the maximum over unit-modulus phases is a genuine
continuous optimization), so they are deliberately absent from the dispatch.
"""
from __future__ import annotations

from dataclasses import replace
from typing import Callable, Optional, Tuple

import numpy as np

from .exponents import Exponent, functional_maximizer, hoelder_max, vector_norm
from .result import STATUS_EXACT, NormEstimate
from .structure import (
    MatrixClass,
    all_ones_vector,
    as_matrix,
    classify,
    closed_form_norm,
    is_entrywise_nonneg,
    magic_alpha,
)

__all__ = [
    "norm_p_to_inf",
    "norm_1_to_q",
    "norm_inf_to_p_nonneg",
    "norm_dual",
    "norm_2_to_2",
    "norm_magic_interior",
    "exact_norm",
]

Evaluator = Callable[[np.ndarray, Exponent, Exponent], NormEstimate]


def norm_p_to_inf(A, p: Exponent) -> NormEstimate:
    """||A||_{p,inf} = max_i ||row_i||_{p'}; ties go to the lowest row."""
    A = as_matrix(A)
    row_values = np.asarray([hoelder_max(A[i], p) for i in range(A.shape[0])])
    i = int(np.argmax(row_values))
    witness = functional_maximizer(A[i], p)
    return NormEstimate(float(row_values[i]), STATUS_EXACT, "row-dual", witness=witness)


def norm_1_to_q(A, q: Exponent) -> NormEstimate:
    """||A||_{1,q} = max_j ||col_j||_q; the witness is a standard basis vector."""
    A = as_matrix(A)
    col_values = np.asarray([vector_norm(A[:, j], q) for j in range(A.shape[1])])
    j = int(np.argmax(col_values))
    witness = np.zeros(A.shape[1], dtype=complex)
    witness[j] = 1.0
    return NormEstimate(float(col_values[j]), STATUS_EXACT, "column-norm", witness=witness)


def norm_inf_to_p_nonneg(A, p: Exponent, tol: float = 1e-12) -> NormEstimate:
    """||A||_{inf,p} for entrywise nonnegative A: the p-norm of the row sums.

    The all-ones vector is the maximizer; rejects matrices with negative or
    non-real entries (beyond tol).
    """
    A = as_matrix(A)
    if not is_entrywise_nonneg(A, tol):
        raise ValueError("norm_inf_to_p_nonneg requires entrywise nonnegative entries")
    row_sums = A.real.sum(axis=1)
    value = vector_norm(row_sums, p)
    return NormEstimate(float(value), STATUS_EXACT, "row-sums", witness=all_ones_vector(A.shape[0]))


def norm_dual(A, p: Exponent, q: Exponent, inner: Optional[Evaluator] = None) -> NormEstimate:
    """||A||_{p,q} via the conjugate identity ||A||_{p,q} = ||A*||_{q',p'}.

    inner evaluates the conjugate transpose at the swapped conjugate pair; by
    default the exact dispatcher is used.  The witness is deferred to the
    inner problem and not translated back.
    """
    A = as_matrix(A)
    A_star = A.conj().T
    p_in = q.conjugate()
    q_in = p.conjugate()
    if inner is None:
        est = exact_norm(A_star, p_in, q_in)
        if est is None:
            raise ValueError(f"no exact evaluator for the conjugate pair ({p_in}, {q_in})")
    else:
        est = inner(A_star, p_in, q_in)
    return NormEstimate(est.value, est.status, f"dual:{est.method}", lo=est.lo, hi=est.hi)


def norm_2_to_2(A, tol: float = 1e-13, max_iter: int = 10000, seed: int = 0x5EED) -> NormEstimate:
    """Largest singular value by power iteration on A*A.

    Starts from the all-ones vector plus a small seeded perturbation and stops
    when the relative Rayleigh quotient change drops below tol.
    """
    A = as_matrix(A)
    n = A.shape[0]
    M = A.conj().T @ A
    if float(np.max(np.abs(M))) == 0.0:
        e1 = np.zeros(n, dtype=complex)
        e1[0] = 1.0
        return NormEstimate(0.0, STATUS_EXACT, "svd-power", witness=e1)
    rng = np.random.default_rng(seed)
    x = all_ones_vector(n) + 1e-3 * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    x = x / vector_norm(x, Exponent(2.0))
    rho_prev = -np.inf
    rho = 0.0
    for _ in range(max_iter):
        y = M @ x
        ny = float(np.linalg.norm(y))
        if ny == 0.0:
            # x fell into the kernel; restart from a fresh seeded draw
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            x = x / float(np.linalg.norm(x))
            rho_prev = -np.inf
            continue
        x = y / ny
        rho = float(np.real(np.vdot(x, M @ x)))
        if rho_prev > -np.inf and abs(rho - rho_prev) <= tol * max(rho, 1e-300):
            break
        rho_prev = rho
    value = float(np.sqrt(max(rho, 0.0)))
    return NormEstimate(value, STATUS_EXACT, "svd-power", witness=x)


def norm_magic_interior(A, p: Exponent, tol: float = 1e-9) -> Tuple[Tuple[Exponent, Exponent], NormEstimate]:
    """For a magic-squared matrix, the interior pair tied to p and its norm.

    Returns ((2p/(p-1), 2p/(p+1)), estimate) with value alpha * n^(1/p); the
    pair degenerates to (inf, 1) at p = 1 and to (2, 2) at p = inf.  The
    all-ones vector, normalized, is the witness.
    """
    A = as_matrix(A)
    alpha = magic_alpha(A, tol)
    if alpha is None:
        raise ValueError("norm_magic_interior requires a magic-squared matrix")
    n = A.shape[0]
    u = p.reciprocal()
    u2 = (1.0 - u) / 2.0
    v2 = (1.0 + u) / 2.0
    p2 = Exponent.from_reciprocal(u2)
    q2 = Exponent.from_reciprocal(v2)
    witness = all_ones_vector(n) / n ** u2
    est = NormEstimate(alpha * n ** u, STATUS_EXACT, "magic-interior", witness=witness)
    return (p2, q2), est


def exact_norm(A, p: Exponent, q: Exponent, klass: Optional[MatrixClass] = None,
               tol: float = 1e-9) -> Optional[NormEstimate]:
    """Exact ||A||_{p,q} when a closed form or boundary line applies, else None.

    Dispatch order: classification closed form, then the p = 1 and q = inf
    lines, then the nonnegative-only lines, then the (2, 2) point.
    """
    A = as_matrix(A)
    if klass is None:
        klass = classify(A, tol)
    cf = closed_form_norm(klass, A.shape[0], p, q)
    if cf is not None:
        return cf
    if p.is_one:
        return norm_1_to_q(A, q)
    if q.is_inf:
        return norm_p_to_inf(A, p)
    nonneg = is_entrywise_nonneg(A, tol)
    if nonneg and p.is_inf:
        return norm_inf_to_p_nonneg(A, q, tol)
    if nonneg and q.is_one:
        # p_in is inf by construction, so the conjugate problem is a row-sum norm
        est = norm_dual(A, p, q, inner=lambda M, p_in, q_in: norm_inf_to_p_nonneg(M, q_in, tol))
        # without phase cancellation ||A x||_1 = <column sums, x>, so the
        # Hoelder maximizer of the column sums attains the dual value
        witness = functional_maximizer(A.real.sum(axis=0), p)
        return replace(est, witness=witness)
    if p.is_two and q.is_two:
        return norm_2_to_2(A)
    return None
