"""Exponents p in [1, inf], Hoelder conjugation, vector p-norms and dual vectors.

Exponents are the scalar parameters of the vector norms

    ||x||_p = (sum_i |x_i|^p)^(1/p),    ||x||_inf = max_i |x_i|,

defined over complex coordinate vectors.  Everything downstream (operator
norms, interpolation geometry) works with pairs of these.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Exponent",
    "ExponentError",
    "ONE",
    "TWO",
    "INF",
    "parse_exponent",
    "holder_conjugate",
    "as_vector",
    "vector_norm",
    "dual_map",
    "hoelder_max",
    "functional_maximizer",
]

#: relative tolerance used by Exponent.approx_eq
APPROX_RTOL = 1e-12


class ExponentError(ValueError):
    """Raised for text that does not denote an exponent in [1, inf]."""


@dataclass(frozen=True)
class Exponent:
    """An exponent p with 1 <= p <= inf, infinity included explicitly.

    Wraps a float (math.inf for the right endpoint).  Equality is exact float
    equality; use approx_eq for tolerant comparison.
    """

    value: float

    def __post_init__(self):
        v = float(self.value)
        if math.isnan(v) or v < 1.0:
            raise ExponentError(f"exponent must satisfy 1 <= p <= inf, got {self.value!r}")
        object.__setattr__(self, "value", v)

    @classmethod
    def parse(cls, text: str) -> "Exponent":
        return parse_exponent(text)

    @classmethod
    def from_reciprocal(cls, r: float) -> "Exponent":
        """Exponent with 1/p = r, for r in [0, 1].  r = 0 gives infinity."""
        r = float(r)
        if math.isnan(r) or r < 0.0 or r > 1.0:
            raise ExponentError(f"reciprocal exponent must lie in [0, 1], got {r!r}")
        if r == 0.0:
            return INF
        return cls(1.0 / r)

    @property
    def is_inf(self) -> bool:
        return math.isinf(self.value)

    @property
    def is_one(self) -> bool:
        return self.value == 1.0

    @property
    def is_two(self) -> bool:
        return self.value == 2.0

    def reciprocal(self) -> float:
        """1/p as a float in [0, 1]; 0.0 for p = inf."""
        if self.is_inf:
            return 0.0
        return 1.0 / self.value

    def conjugate(self) -> "Exponent":
        """Hoelder conjugate p' with 1/p + 1/p' = 1."""
        return holder_conjugate(self)

    def approx_eq(self, other: "Exponent", rtol: float = APPROX_RTOL) -> bool:
        """Tolerant comparison on the reciprocal scale (handles inf)."""
        return abs(self.reciprocal() - other.reciprocal()) <= rtol

    def __str__(self) -> str:
        if self.is_inf:
            return "inf"
        return format(self.value, ".12g")


ONE = Exponent(1.0)
TWO = Exponent(2.0)
INF = Exponent(math.inf)


def parse_exponent(text: str) -> Exponent:
    """Parse "inf", a decimal literal, or a rational "a/b" with a >= b >= 1.

    Rationals are parsed exactly and converted by correctly rounded division.
    Raises ExponentError for anything outside [1, inf].
    """
    s = str(text).strip().lower()
    if not s:
        raise ExponentError("empty exponent")
    if s == "inf":
        return INF
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            a = int(num)
            b = int(den)
        except ValueError:
            raise ExponentError(f"malformed rational exponent {text!r}") from None
        if b < 1 or a < b:
            raise ExponentError(f"rational exponent {text!r} needs a >= b >= 1")
        return Exponent(a / b)
    try:
        v = float(s)
    except ValueError:
        raise ExponentError(f"malformed exponent {text!r}") from None
    return Exponent(v)


def holder_conjugate(p: Exponent) -> Exponent:
    """Conjugate exponent p' with 1/p + 1/p' = 1; swaps 1 and inf, fixes 2."""
    if p.is_one:
        return INF
    if p.is_inf:
        return ONE
    return Exponent(p.value / (p.value - 1.0))


def as_vector(x) -> np.ndarray:
    """Coerce to a 1-d complex array with at least one coordinate."""
    a = np.asarray(x, dtype=complex)
    if a.ndim != 1 or a.size == 0:
        raise ValueError(f"expected a nonempty 1-d vector, got shape {a.shape}")
    return a


def vector_norm(x, p: Exponent) -> float:
    """||x||_p over complex coordinates.

    Finite p is evaluated in scaled form m * ||x/m||_p with m = max |x_i|,
    which avoids overflow and underflow for large p.
    """
    a = np.abs(as_vector(x))
    if p.is_inf:
        return float(a.max())
    if p.is_one:
        return float(a.sum())
    m = float(a.max())
    if m == 0.0:
        return 0.0
    t = a / m
    return m * float(np.sum(t ** p.value) ** (1.0 / p.value))


def dual_map(x, p: Exponent) -> np.ndarray:
    """The norming vector of x for the bilinear pairing, at interior p.

    Returns y with ||y||_{p'} = 1 and sum_i y_i x_i = ||x||_p, namely
    y_i proportional to |x_i|^(p-1) * conj(phase(x_i)).  Requires 1 < p < inf
    and x != 0.
    """
    if p.is_one or p.is_inf:
        raise ValueError("dual_map requires an interior exponent 1 < p < inf")
    a = as_vector(x)
    mod = np.abs(a)
    m = float(mod.max())
    if m == 0.0:
        raise ValueError("dual_map requires a nonzero vector")
    phase_conj = np.zeros_like(a)
    nz = mod > 0.0
    phase_conj[nz] = np.conj(a[nz]) / mod[nz]
    y = (mod / m) ** (p.value - 1.0) * phase_conj
    return y / vector_norm(y, p.conjugate())


def hoelder_max(a, p: Exponent) -> float:
    """max { |sum_i a_i x_i| : ||x||_p = 1 } = ||a||_{p'}."""
    return vector_norm(a, holder_conjugate(p))


def functional_maximizer(a, p: Exponent) -> np.ndarray:
    """A vector x with ||x||_p = 1 and sum_i a_i x_i = ||a||_{p'}.

    Covers the boundary exponents: for p = 1 a phased standard basis vector at
    the largest |a_i| (lowest index on ties), for p = inf the conjugate phase
    vector.  For a = 0 any unit vector works; e_1 is returned.
    """
    v = as_vector(a)
    mod = np.abs(v)
    n = v.size
    if float(mod.max()) == 0.0:
        x = np.zeros(n, dtype=complex)
        x[0] = 1.0
        return x
    if p.is_one:
        j = int(np.argmax(mod))
        x = np.zeros(n, dtype=complex)
        x[j] = np.conj(v[j]) / mod[j]
        return x
    if p.is_inf:
        x = np.zeros(n, dtype=complex)
        nz = mod > 0.0
        x[nz] = np.conj(v[nz]) / mod[nz]
        return x
    return dual_map(v, p.conjugate())
