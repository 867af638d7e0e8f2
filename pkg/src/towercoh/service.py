"""Optional HTTP front end.  Needs the `service` extra (fastapi, pydantic).

Run with ``uvicorn towercoh.service:app``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .bott import cohomology
from .cli import ParseError, parse_expression
from .suites import SUITES, Config, run
from .tower import UnsupportedShape, builtin_towers, get_tower, render
from .weights import ResourceCapExceeded


class CohomologyRequest(BaseModel):
    tower: str
    expression: str


class Degree(BaseModel):
    dim: int
    rep: str


class CohomologyResponse(BaseModel):
    tower: str
    expression: str
    degrees: dict[str, Degree]


class VerifyRequest(BaseModel):
    suite: str
    samples: int = Field(default=1000, ge=1)
    seed: int = 0
    no_reductions: bool = False


class VerifyResponse(BaseModel):
    suite: str
    verdict: str
    report: dict


app = FastAPI(title="towercoh", version="0.1.0")


@app.get("/towers")
def towers() -> list[dict[str, object]]:
    return [
        {"name": name, "dimension": t.dimension(), "divisors": sorted(t.divisors), "aliases": sorted(t.aliases)}
        for name, t in builtin_towers().items()
    ]


@app.post("/cohomology", response_model=CohomologyResponse)
def post_cohomology(req: CohomologyRequest) -> CohomologyResponse:
    try:
        tower = get_tower(req.tower)
    except KeyError as ex:
        raise HTTPException(404, str(ex.args[0])) from None
    try:
        expr = parse_expression(req.expression, tower)
        table = cohomology(expr, tower)
    except ParseError as ex:
        raise HTTPException(400, f"parse error: {ex}") from None
    except UnsupportedShape as ex:
        raise HTTPException(422, f"unsupported shape: {ex}") from None
    except ResourceCapExceeded as ex:
        raise HTTPException(413, f"resource cap exceeded: {ex}") from None
    degrees = {d: Degree(**v) for d, v in table.to_json().items()}
    return CohomologyResponse(tower=tower.name, expression=render(expr), degrees=degrees)


@app.post("/verify", response_model=VerifyResponse)
def post_verify(req: VerifyRequest) -> VerifyResponse:
    if req.suite not in SUITES:
        raise HTTPException(404, f"unknown suite {req.suite!r}")
    (result,) = run(req.suite, Config(samples=req.samples, seed=req.seed, no_reductions=req.no_reductions))
    return VerifyResponse(suite=result.name, verdict=result.verdict, report=result.report)
