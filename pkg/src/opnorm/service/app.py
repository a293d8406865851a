"""FastAPI application exposing the norm computations.

The service is stateless: every request carries its matrix, exponents, and
estimator options, so responses are deterministic for identical payloads.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..estimate import EstimatorConfig
from ..exponents import ExponentError, parse_exponent
from ..io import describe_class
from ..strategy import compute_norm, scan_grid
from ..structure import classify
from ..verify import run_suite
from .schemas import (
    CheckModel,
    ClassifyRequest,
    ClassifyResponse,
    EstimatorOptions,
    HealthResponse,
    NormRequest,
    NormResponse,
    ScanCellModel,
    ScanRequest,
    ScanResponse,
    VerifyRequest,
    VerifyResponse,
)

_VERSION = "0.1.0"


def _config(opts: EstimatorOptions) -> EstimatorConfig:
    return EstimatorConfig(restarts=opts.restarts, sample_count=opts.sample_count,
                           seed=opts.seed)


def _exponent(text: str, which: str) -> "Exponent":
    try:
        return parse_exponent(text)
    except ExponentError as e:
        raise HTTPException(status_code=400, detail=f"invalid exponent {which}: {e}") from None


def create_app() -> FastAPI:
    app = FastAPI(title="opnorm", version=_VERSION,
                  description="operator (p,q)-norms of small complex matrices")

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=_VERSION)

    @app.post("/norm", response_model=NormResponse)
    def norm(req: NormRequest) -> NormResponse:
        A = req.matrix.to_array()
        p = _exponent(req.p, "p")
        q = _exponent(req.q, "q")
        est = compute_norm(A, p, q, config=_config(req), tol=req.tol)
        witness = None
        if req.include_witness and est.witness is not None:
            witness = [(float(c.real), float(c.imag)) for c in est.witness]
        return NormResponse(value=est.value, status=est.status, method=est.method,
                            lo=est.lo, hi=est.hi, witness=witness)

    @app.post("/classify", response_model=ClassifyResponse)
    def classify_matrix(req: ClassifyRequest) -> ClassifyResponse:
        A = req.matrix.to_array()
        klass = classify(A, req.tol)
        return ClassifyResponse(
            tag=klass.tag,
            description=describe_class(klass),
            alpha=klass.alpha,
            scale=klass.scale,
            generators=list(klass.generators) if klass.generators is not None else None,
            sigma=list(klass.sigma) if klass.sigma is not None else None,
            phases=[(z.real, z.imag) for z in klass.phases] if klass.phases is not None else None,
        )

    @app.post("/scan", response_model=ScanResponse)
    def scan(req: ScanRequest) -> ScanResponse:
        A = req.matrix.to_array()
        cells = scan_grid(A, resolution=req.resolution, config=_config(req), tol=req.tol)
        return ScanResponse(cells=[
            ScanCellModel(u=c.u, v=c.v, value=c.value, status=c.status, method=c.method)
            for c in cells
        ])

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        A = req.matrix.to_array()
        checks = run_suite(A, suite=req.suite, config=_config(req), tol=req.tol)
        models = [CheckModel(name=c.name, passed=c.passed, detail=c.detail) for c in checks]
        return VerifyResponse(passed=all(c.passed for c in checks), checks=models)

    return app


app = create_app()
