"""Self-verification suites cross-checking the independent evaluators.

Three suites, each a list of named pass/fail checks:

  interpolation  computed values never beat interpolated bounds between
                 exact endpoints; constant-norm segments stay constant
  strictness     the p = 1 edge table: no bound violations, and strict
                 inequality at one interior parameter propagates to all
  cross-check    closed forms versus boundary lines versus estimators
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .estimate import EstimatorConfig, brute_force_norm, power_iteration_norm
from .exact import exact_norm, norm_dual, norm_inf_to_p_nonneg, norm_magic_interior
from .exponents import INF, ONE, TWO, Exponent
from .interpolation import (
    Segment,
    SquarePoint,
    check_log_convexity,
    check_strictness_line,
    duality_segment,
)
from .io import format_number
from .result import STATUS_EXACT
from .strategy import compute_norm
from .structure import as_matrix, magic_alpha

__all__ = ["CheckResult", "SUITES", "run_suite"]

SUITES = ("interpolation", "strictness", "cross-check", "all")

_P_SAMPLES = (ONE, Exponent(1.5), TWO, Exponent(4.0), INF)
_THETAS = tuple(k / 16 for k in range(17))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _rel_close(a: float, b: float, rtol: float) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1.0)


def _interpolation_checks(A: np.ndarray, cfg: EstimatorConfig, tol: float) -> List[CheckResult]:
    def ev(M, p, q):
        return compute_norm(M, p, q, config=cfg, tol=tol)

    checks = []
    alpha = magic_alpha(A, tol)
    if alpha is not None:
        # norms are constant along each duality segment; interpolation must
        # detect equality at every sampled parameter
        for p in _P_SAMPLES:
            rep = check_log_convexity(A, duality_segment(p), _THETAS, ev)
            ok = (not rep.violation) and rep.equality_everywhere
            detail = (f"endpoints {format_number(rep.endpoint_values[0])}"
                      f"/{format_number(rep.endpoint_values[1])}")
            checks.append(CheckResult(f"interpolation:constant-segment[p={p}]", ok, detail))
        return checks
    segments = [
        ("edge-p1", Segment(SquarePoint(1.0, 0.0), SquarePoint(1.0, 1.0))),
        ("corner-diag", Segment(SquarePoint(1.0, 1.0), SquarePoint(0.0, 0.0))),
        ("cross", Segment(SquarePoint(1.0, 0.5), SquarePoint(0.5, 0.0))),
    ]
    for name, seg in segments:
        rep = check_log_convexity(A, seg, _THETAS, ev)
        detail = "no bound violated" if not rep.violation else "bound violated"
        checks.append(CheckResult(f"interpolation:{name}", not rep.violation, detail))
    return checks


def _strictness_checks(A: np.ndarray, cfg: EstimatorConfig, tol: float) -> List[CheckResult]:
    rep = check_strictness_line(A, _THETAS)
    checks = [
        CheckResult("strictness:no-violation", not rep.violation,
                    f"endpoints {format_number(rep.endpoint_values[0])}"
                    f"/{format_number(rep.endpoint_values[1])}"),
        CheckResult(
            "strictness:propagation", rep.propagation_consistent,
            "strict everywhere" if rep.strict_everywhere
            else ("equality everywhere" if not rep.strict_somewhere
                  else "strictness failed to propagate")),
    ]
    # the propagation claim beyond the p = 1 edge needs equal diagonal norms;
    # that hypothesis is only sampled here, so the check is a label, not a gate
    est_22 = compute_norm(A, TWO, TWO, config=cfg, tol=tol)
    est_11 = compute_norm(A, ONE, ONE, config=cfg, tol=tol)
    both_exact = est_22.status == STATUS_EXACT and est_11.status == STATUS_EXACT
    if both_exact and _rel_close(est_22.value, est_11.value, 1e-9):
        detail = "diagonal norms equal at sampled p (exact)"
    elif _rel_close(est_22.value, est_11.value, 1e-6):
        detail = "diagonal norms equal at sampled p (estimated)"
    else:
        detail = "diagonal norms differ at sampled p; propagation beyond the edge not claimed"
    checks.append(CheckResult("strictness:diagonal-hypothesis[sampled]", True, detail))
    return checks


def _cross_checks(A: np.ndarray, cfg: EstimatorConfig, tol: float) -> List[CheckResult]:
    checks = []
    alpha = magic_alpha(A, tol)
    if alpha is not None:
        # three independent evaluators hit the same alpha * n^(1/p) family
        for p in _P_SAMPLES:
            a = norm_inf_to_p_nonneg(A, p, tol).value
            b = norm_dual(A, p.conjugate(), ONE,
                          inner=lambda M, p_in, q_in: norm_inf_to_p_nonneg(M, q_in, tol)).value
            c = norm_magic_interior(A, p, tol)[1].value
            ok = _rel_close(a, b, 1e-10) and _rel_close(b, c, 1e-10) and _rel_close(a, c, 1e-10)
            checks.append(CheckResult(
                f"cross-check:three-evaluators[p={p}]", ok,
                f"{format_number(a)}/{format_number(b)}/{format_number(c)}"))
    for (p, q) in ((ONE, TWO), (TWO, INF)):
        ex = exact_norm(A, p, q, tol=tol)
        br = brute_force_norm(A, p, q, cfg)
        ok = br.value <= ex.value * (1.0 + 1e-9) and _rel_close(br.value, ex.value, 1e-3)
        checks.append(CheckResult(
            f"cross-check:line-vs-sampling[({p},{q})]", ok,
            f"exact {format_number(ex.value)} sampled {format_number(br.value)}"))
    p, q = Exponent(3.0), Exponent(1.5)
    est = compute_norm(A, p, q, config=cfg, tol=tol)
    if est.status == STATUS_EXACT:
        if float(np.max(np.abs(A))) > 0.0:
            pw = power_iteration_norm(A, p, q, cfg)
            ok = pw.value <= est.value * (1.0 + 1e-9) and _rel_close(pw.value, est.value, 1e-3)
            detail = f"exact {format_number(est.value)} ascent {format_number(pw.value)}"
        else:
            ok, detail = True, "zero matrix"
    elif est.lo is not None and est.hi is not None:
        ok = est.lo <= est.hi * (1.0 + 1e-9)
        detail = f"bracket [{format_number(est.lo)}, {format_number(est.hi)}]"
    else:
        ok, detail = True, "lower bound only (no catalog segment)"
    checks.append(CheckResult("cross-check:interior-bracket[(3,3/2)]", ok, detail))
    if float(np.max(np.abs(A))) > 0.0:
        v1 = power_iteration_norm(A, p, q, cfg).value
        v2 = power_iteration_norm(A.conj().T, q.conjugate(), p.conjugate(), cfg).value
        ok = _rel_close(v1, v2, 1e-3)
        checks.append(CheckResult(
            "cross-check:conjugate-duality[(3,3/2)]", ok,
            f"{format_number(v1)} vs {format_number(v2)}"))
    return checks


def run_suite(A, suite: str = "all", config: Optional[EstimatorConfig] = None,
              tol: float = 1e-9) -> List[CheckResult]:
    """Run one named suite (or all of them) and return its check results."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    A = as_matrix(A)
    cfg = config or EstimatorConfig()
    checks: List[CheckResult] = []
    if suite in ("interpolation", "all"):
        checks.extend(_interpolation_checks(A, cfg, tol))
    if suite in ("strictness", "all"):
        checks.extend(_strictness_checks(A, cfg, tol))
    if suite in ("cross-check", "all"):
        checks.extend(_cross_checks(A, cfg, tol))
    return checks
