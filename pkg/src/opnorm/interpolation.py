"""Interpolation geometry on the unit square of reciprocal exponents.

A pair (p, q) is the point (u, v) = (1/p, 1/q) in [0, 1]^2.  Along the
segment from (1/p1, 1/q1) to (1/p2, 1/q2), the operator norm is
log-convex:

    ||A||_{p,q} <= ||A||_{p1,q1}^(1-theta) * ||A||_{p2,q2}^theta

at the point a + theta * (b - a).  This module provides the geometry, the
bound, convexity and strictness checkers, and their CSV reports.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .exact import norm_1_to_q
from .exponents import Exponent
from .io import REPORT_CSV_HEADER, format_number
from .result import STATUS_EXACT, NormEstimate
from .structure import as_matrix

__all__ = [
    "SquarePoint",
    "Segment",
    "rt_upper_bound",
    "mn_exponents",
    "duality_segment",
    "wedge_segment",
    "SegmentSample",
    "ConvexityReport",
    "check_log_convexity",
    "StrictnessReport",
    "check_strictness_line",
]

Evaluator = Callable[[np.ndarray, Exponent, Exponent], NormEstimate]

FLAG_VIOLATION = "violation"
FLAG_EQUALITY = "equality"
FLAG_STRICT = "strict"


@dataclass(frozen=True)
class SquarePoint:
    """(u, v) = (1/p, 1/q) with both coordinates in [0, 1]."""

    u: float
    v: float

    def __post_init__(self):
        for name, c in (("u", self.u), ("v", self.v)):
            if not 0.0 <= float(c) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {c!r}")
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "v", float(self.v))

    @classmethod
    def from_exponents(cls, p: Exponent, q: Exponent) -> "SquarePoint":
        return cls(p.reciprocal(), q.reciprocal())

    def exponents(self) -> Tuple[Exponent, Exponent]:
        return Exponent.from_reciprocal(self.u), Exponent.from_reciprocal(self.v)

    def close_to(self, other: "SquarePoint", tol: float = 1e-12) -> bool:
        return abs(self.u - other.u) <= tol and abs(self.v - other.v) <= tol


@dataclass(frozen=True)
class Segment:
    """Directed segment between two square points."""

    a: SquarePoint
    b: SquarePoint

    def point_at(self, theta: float) -> SquarePoint:
        if not 0.0 <= theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
        return SquarePoint(
            (1.0 - theta) * self.a.u + theta * self.b.u,
            (1.0 - theta) * self.a.v + theta * self.b.v,
        )


def rt_upper_bound(norm_a: float, norm_b: float, theta: float) -> float:
    """The interpolated bound norm_a^(1-theta) * norm_b^theta."""
    if not 0.0 <= theta <= 1.0:
        raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
    if norm_a < 0.0 or norm_b < 0.0:
        raise ValueError("endpoint norms must be nonnegative")
    return norm_a ** (1.0 - theta) * norm_b ** theta


def mn_exponents(p: Exponent, theta: float) -> Tuple[Exponent, Exponent]:
    """The pair (m, n) with 1/m = 1 - theta + theta/p and n = p/theta.

    It interpolates from (1, inf) toward (p, p): the segment from (1, 0) to
    (1/p, 1/p) at parameter theta.  Requires 0 < theta < 1.
    """
    if not 0.0 < theta < 1.0:
        raise ValueError(f"theta must lie strictly inside (0, 1), got {theta!r}")
    u = p.reciprocal()
    m = Exponent.from_reciprocal(1.0 - theta + theta * u)
    n = Exponent.from_reciprocal(theta * u)
    return m, n


def duality_segment(p: Exponent) -> Segment:
    """Segment joining the (inf, p) point to its conjugate (p', 1) point.

    Along it the wedge closed forms are constant; its midpoint is the pair
    (2p/(p-1), 2p/(p+1)).
    """
    u = p.reciprocal()
    return Segment(SquarePoint(0.0, u), SquarePoint(1.0 - u, 1.0))


def wedge_segment(p: Exponent, q: Exponent) -> Tuple[Segment, float]:
    """For q <= p, the duality segment through (1/p, 1/q) and its parameter.

    Returns (segment, theta) with segment.point_at(theta) == (1/p, 1/q);
    theta = q/(pq - p + q) in exponent terms.
    """
    u = p.reciprocal()
    v = q.reciprocal()
    if v < u - 1e-12:
        raise ValueError("wedge_segment requires q <= p")
    r_u = min(max(v - u, 0.0), 1.0)
    seg = Segment(SquarePoint(0.0, r_u), SquarePoint(1.0 - r_u, 1.0))
    denom = 1.0 - v + u
    theta = u / denom if denom > 0.0 else 0.0
    return seg, min(max(theta, 0.0), 1.0)


@dataclass(frozen=True)
class SegmentSample:
    """One evaluated point of a segment report."""

    theta: float
    u: float
    v: float
    value: float
    status: str
    rt_bound: float
    slack: float
    flag: str

    def csv_row(self) -> str:
        return ",".join([
            format_number(self.theta),
            format_number(self.u),
            format_number(self.v),
            format_number(self.value),
            self.status,
            format_number(self.rt_bound),
            format_number(self.slack),
            self.flag,
        ])


def _rows_to_csv(rows: Sequence[SegmentSample]) -> str:
    return "\n".join([REPORT_CSV_HEADER] + [r.csv_row() for r in rows]) + "\n"


@dataclass(frozen=True)
class ConvexityReport:
    """Interpolated bounds versus computed values along one segment."""

    segment: Segment
    endpoint_values: Tuple[float, float]
    endpoint_statuses: Tuple[str, str]
    rows: Tuple[SegmentSample, ...]

    @property
    def endpoints_exact(self) -> bool:
        return all(s == STATUS_EXACT for s in self.endpoint_statuses)

    @property
    def violation(self) -> bool:
        return any(r.flag == FLAG_VIOLATION for r in self.rows)

    @property
    def equality_everywhere(self) -> bool:
        return bool(self.rows) and all(r.flag == FLAG_EQUALITY for r in self.rows)

    @property
    def interior_equality(self) -> bool:
        return any(r.flag == FLAG_EQUALITY and 0.0 < r.theta < 1.0 for r in self.rows)

    def to_csv(self) -> str:
        return _rows_to_csv(self.rows)


def check_log_convexity(A, segment: Segment, thetas: Sequence[float],
                        evaluator: Evaluator, rtol: float = 1e-9) -> ConvexityReport:
    """Evaluate A along a segment and compare against the interpolated bound.

    Rows are flagged "violation" when a certified value exceeds the bound
    (meaningful only when both endpoints are exact) and "equality" when an
    exact value meets the bound to within rtol.
    """
    A = as_matrix(A)
    pa, qa = segment.a.exponents()
    pb, qb = segment.b.exponents()
    est_a = evaluator(A, pa, qa)
    est_b = evaluator(A, pb, qb)
    endpoints_exact = est_a.status == STATUS_EXACT and est_b.status == STATUS_EXACT
    rows = []
    for theta in thetas:
        pt = segment.point_at(theta)
        p, q = pt.exponents()
        est = evaluator(A, p, q)
        bound = rt_upper_bound(est_a.value, est_b.value, theta)
        slack = bound - est.value
        scale = max(bound, 1.0)
        flag = ""
        if endpoints_exact:
            if est.value > bound + rtol * scale:
                flag = FLAG_VIOLATION
            elif est.status == STATUS_EXACT and abs(slack) <= rtol * scale:
                flag = FLAG_EQUALITY
        rows.append(SegmentSample(float(theta), pt.u, pt.v, est.value, est.status,
                                  bound, slack, flag))
    return ConvexityReport(
        segment=segment,
        endpoint_values=(est_a.value, est_b.value),
        endpoint_statuses=(est_a.status, est_b.status),
        rows=tuple(rows),
    )


@dataclass(frozen=True)
class StrictnessReport:
    """Strictness of interpolation along the p = 1 edge.

    Interior rows compare the exact value ||A||_{1, 1/theta} with the bound
    ||A||_{1,inf}^(1-theta) * ||A||_{1,1}^theta; strictness at one interior
    parameter should propagate to all of them.
    """

    endpoint_values: Tuple[float, float]
    rows: Tuple[SegmentSample, ...]

    def _interior(self):
        return [r for r in self.rows if 0.0 < r.theta < 1.0]

    @property
    def violation(self) -> bool:
        return any(r.flag == FLAG_VIOLATION for r in self.rows)

    @property
    def strict_somewhere(self) -> bool:
        return any(r.flag == FLAG_STRICT for r in self._interior())

    @property
    def strict_everywhere(self) -> bool:
        interior = self._interior()
        return bool(interior) and all(r.flag == FLAG_STRICT for r in interior)

    @property
    def propagation_consistent(self) -> bool:
        return (not self.strict_somewhere) or self.strict_everywhere

    def to_csv(self) -> str:
        return _rows_to_csv(self.rows)


def check_strictness_line(A, thetas: Sequence[float], rtol: float = 1e-9) -> StrictnessReport:
    """Exact strictness table for the p = 1 edge at the given parameters."""
    A = as_matrix(A)
    c_inf = norm_1_to_q(A, Exponent.from_reciprocal(0.0)).value
    c_one = norm_1_to_q(A, Exponent(1.0)).value
    rows = []
    for theta in thetas:
        if not 0.0 <= theta <= 1.0:
            raise ValueError(f"theta must lie in [0, 1], got {theta!r}")
        q = Exponent.from_reciprocal(theta)
        value = norm_1_to_q(A, q).value
        bound = rt_upper_bound(c_inf, c_one, theta)
        slack = bound - value
        scale = max(bound, 1.0)
        if value > bound + rtol * scale:
            flag = FLAG_VIOLATION
        elif abs(slack) <= rtol * scale:
            flag = FLAG_EQUALITY
        else:
            flag = FLAG_STRICT
        rows.append(SegmentSample(float(theta), 1.0, float(theta), value, STATUS_EXACT,
                                  bound, slack, flag))
    return StrictnessReport(endpoint_values=(c_inf, c_one), rows=tuple(rows))
