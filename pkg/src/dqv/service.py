"""HTTP service wrapping the verification engine.

Endpoints: GET /health, GET /checks, POST /checks/{id}/run,
POST /normalize, POST /oracle.  The command line talks to this app
in-process; it can also be served standalone with uvicorn.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import model
from .catalog import CHECKS, CheckResult, run_check
from .parser import ParseError, Parsed, parse, print_parsed
from .rewrite import FlagError, flags_from_string, flags_to_string
from .series import CONVENTIONS

app = FastAPI(title="dqv", version="0.1.0")


class CheckInfo(BaseModel):
    check_id: str
    description: str
    default_convention: str
    default_order: int


class RunRequest(BaseModel):
    flags: Optional[str] = Field(default=None, description="comma-separated flag names")
    convention: Optional[str] = None
    order: Optional[int] = Field(default=None, ge=0, le=3)


class RunResponse(BaseModel):
    check_id: str
    passed: bool
    convention: str
    order: int
    flags: str
    residuals: Dict[str, str]
    notes: str
    duration_s: float
    summary: str


class NormalizeRequest(BaseModel):
    expression: str
    flags: str = ""


class NormalizeResponse(BaseModel):
    input: str
    normalized: str
    zero: bool


class OracleRequest(BaseModel):
    seed: int = 0
    instances: int = Field(default=1, ge=1, le=1000)


class OracleInstanceResult(BaseModel):
    seed: int
    passed: bool
    checks: Dict[str, bool]


class OracleResponse(BaseModel):
    all_passed: bool
    instances: List[OracleInstanceResult]


def _to_response(result: CheckResult) -> RunResponse:
    return RunResponse(
        check_id=result.check_id,
        passed=result.passed,
        convention=result.convention,
        order=result.order,
        flags=flags_to_string(result.flags),
        residuals=result.residuals,
        notes=result.notes,
        duration_s=result.duration_s,
        summary=result.summary_line(),
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "checks": len(CHECKS)}


@app.get("/checks", response_model=List[CheckInfo])
def list_checks() -> List[CheckInfo]:
    return [
        CheckInfo(
            check_id=spec.check_id,
            description=spec.description,
            default_convention=spec.default_convention,
            default_order=spec.default_order,
        )
        for spec in CHECKS.values()
    ]


@app.post("/checks/{check_id}/run", response_model=RunResponse)
def run(check_id: str, req: RunRequest) -> RunResponse:
    if check_id not in CHECKS:
        raise HTTPException(status_code=404, detail="unknown check %r" % check_id)
    if req.convention is not None and req.convention not in CONVENTIONS:
        raise HTTPException(status_code=422, detail="unknown convention")
    try:
        rs = flags_from_string(req.flags) if req.flags is not None else None
        result = run_check(check_id, rs, req.convention, req.order)
    except FlagError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return _to_response(result)


@app.post("/normalize", response_model=NormalizeResponse)
def normalize(req: NormalizeRequest) -> NormalizeResponse:
    try:
        rs = flags_from_string(req.flags)
        value = parse(req.expression)
        reduced = value.series.normalize(rs)
    except (ParseError, FlagError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return NormalizeResponse(
        input=req.expression,
        normalized=print_parsed(Parsed(reduced, value.parameter)),
        zero=reduced.is_zero(),
    )


@app.post("/oracle", response_model=OracleResponse)
def oracle(req: OracleRequest) -> OracleResponse:
    out = []
    for k in range(req.instances):
        report = model.oracle_instance(req.seed + k)
        out.append(
            OracleInstanceResult(
                seed=report.seed, passed=report.passed, checks=report.checks
            )
        )
    return OracleResponse(all_passed=all(r.passed for r in out), instances=out)
