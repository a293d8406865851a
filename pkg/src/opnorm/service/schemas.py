"""Request and response bodies for the HTTP service.

Matrix cells are either a real number or a 2-element [re, im] array; rows
must form a square matrix.  Witnesses and phases travel as [re, im] pairs.
"""
from __future__ import annotations

from typing import List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator

Cell = Union[float, Tuple[float, float]]


class MatrixPayload(BaseModel):
    entries: List[List[Cell]]

    @field_validator("entries")
    @classmethod
    def _square(cls, v):
        n = len(v)
        if n == 0:
            raise ValueError("matrix needs at least one row")
        for i, row in enumerate(v):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        return v

    def to_array(self) -> np.ndarray:
        n = len(self.entries)
        A = np.zeros((n, n), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, cell in enumerate(row):
                if isinstance(cell, tuple):
                    A[i, j] = complex(cell[0], cell[1])
                else:
                    A[i, j] = complex(cell)
        return A

    @classmethod
    def from_array(cls, A: np.ndarray) -> "MatrixPayload":
        return cls(entries=[[(float(z.real), float(z.imag)) for z in row] for row in A])


class EstimatorOptions(BaseModel):
    """Knobs shared by the computing endpoints; defaults match the library."""

    tol: float = Field(default=1e-9, ge=0.0)
    seed: int = Field(default=0x5EED, ge=0)
    restarts: int = Field(default=16, ge=1)
    sample_count: int = Field(default=100_000, ge=0)


class NormRequest(EstimatorOptions):
    matrix: MatrixPayload
    p: str
    q: str
    include_witness: bool = False


class NormResponse(BaseModel):
    value: float
    status: str
    method: str
    lo: Optional[float] = None
    hi: Optional[float] = None
    witness: Optional[List[Tuple[float, float]]] = None


class ClassifyRequest(BaseModel):
    matrix: MatrixPayload
    tol: float = Field(default=1e-9, ge=0.0)


class ClassifyResponse(BaseModel):
    tag: str
    description: str
    alpha: Optional[float] = None
    scale: Optional[float] = None
    generators: Optional[List[float]] = None
    sigma: Optional[List[int]] = None
    phases: Optional[List[Tuple[float, float]]] = None


class ScanRequest(EstimatorOptions):
    matrix: MatrixPayload
    resolution: int = Field(default=8, ge=2)


class ScanCellModel(BaseModel):
    u: float
    v: float
    value: float
    status: str
    method: str


class ScanResponse(BaseModel):
    cells: List[ScanCellModel]


class VerifyRequest(EstimatorOptions):
    matrix: MatrixPayload
    suite: Literal["interpolation", "strictness", "cross-check", "all"] = "all"


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: List[CheckModel]


class HealthResponse(BaseModel):
    status: str
    version: str
