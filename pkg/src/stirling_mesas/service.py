"""HTTP service exposing the engine; run with
``uvicorn stirling_mesas.service:app``."""
from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, HTTPException, Query, Response
from pydantic import BaseModel, Field

from . import __version__, counting, dyck, mesas, render, stirling
from .errors import StirlingMesasError

app = FastAPI(
    title="stirling-mesas",
    version=__version__,
    description="Mesa sets of Stirling permutations: statistics, "
    "admissibility, counting, Dyck-path bijection, and SVG rendering.",
)


class WordRequest(BaseModel):
    word: str = Field(description="digit string, or comma-separated values")


class WordAnalysis(BaseModel):
    word: List[int]
    order: int
    mesas: List[int]
    local_minima: List[int]
    has_pinnacle: bool


class SetRequest(BaseModel):
    elements: List[int]
    order: Optional[int] = Field(default=None, description="context order")


class SetAnalysis(BaseModel):
    elements: List[int]
    order: int
    admissible: bool
    witness: Optional[str]


class PathRequest(BaseModel):
    steps: str = Field(description="step string over N and E")


class PathAnalysis(BaseModel):
    steps: str
    target: List[int]
    valid: bool
    area: Optional[int]
    mesa_set: Optional[List[int]]


class CountResponse(BaseModel):
    order: int
    brute_force_count: Optional[int]
    subset_count: Optional[int]
    recurrence_count: Optional[int]
    closed_form_count: Optional[int]
    maximal_count: Optional[int]
    agree: bool


class MaximalEntry(BaseModel):
    elements: List[int]
    path: str
    area: int
    inversions: int


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/words/analyze", response_model=WordAnalysis)
def analyze_word(req: WordRequest) -> WordAnalysis:
    try:
        w = stirling.validate_stirling(stirling.parse_word(req.word))
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)
    return WordAnalysis(
        word=list(w.word),
        order=w.order,
        mesas=sorted(stirling.mesa_set(w)),
        local_minima=sorted(stirling.local_minima(w)),
        has_pinnacle=stirling.has_pinnacle(w),
    )


@app.post("/mesa-sets/check", response_model=SetAnalysis)
def check_set(req: SetRequest) -> SetAnalysis:
    try:
        M = mesas.make_mesa_set(req.elements, context_order=req.order)
    except ValueError as exc:
        raise _bad_request(exc)
    admissible = mesas.is_admissible(M)
    witness = str(mesas.canonical_witness(M)) if admissible else None
    return SetAnalysis(
        elements=list(M.elements),
        order=M.context_order,
        admissible=admissible,
        witness=witness,
    )


@app.get("/mesa-sets/{n}")
def list_sets(n: int) -> List[List[int]]:
    try:
        return [list(M.elements) for M in counting.enumerate_ams(n)]
    except ValueError as exc:
        raise _bad_request(exc)


@app.get("/maximal/{k}", response_model=List[MaximalEntry])
def maximal_sets(k: int) -> List[MaximalEntry]:
    try:
        out = []
        for M in counting.enumerate_maximal(k):
            p = dyck.delta(M)
            out.append(
                MaximalEntry(
                    elements=list(M.elements),
                    path=str(p),
                    area=dyck.area(p),
                    inversions=dyck.inversions(M),
                )
            )
        return out
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)


@app.post("/dyck/analyze", response_model=PathAnalysis)
def analyze_path(req: PathRequest) -> PathAnalysis:
    try:
        path = dyck.parse_path(req.steps)
        valid = dyck.is_rational_dyck(path)
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)
    result = PathAnalysis(
        steps=str(path),
        target=list(path.target),
        valid=valid,
        area=None,
        mesa_set=None,
    )
    if valid:
        rp = dyck.RationalDyckPath.from_path(path)
        result.area = dyck.area(rp)
        ell, m = path.target
        if m == 2 * ell - 1:
            result.mesa_set = list(dyck.delta_inverse(rp).elements)
    return result


@app.get("/counts/{n}", response_model=CountResponse)
def count(
    n: int,
    engines: str = Query(default=",".join(counting.ENGINE_NAMES)),
    allow_large: bool = False,
    workers: int = 1,
) -> CountResponse:
    try:
        report = counting.full_report(
            n,
            [e for e in engines.split(",") if e],
            allow_large=allow_large,
            workers=workers,
        )
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)
    if not report.agree:
        raise HTTPException(status_code=500, detail="engine disagreement")
    return CountResponse(**report.to_dict())


@app.get("/table/{n_max}", response_model=List[CountResponse])
def table(n_max: int) -> List[CountResponse]:
    engines = ("subset", "recurrence", "closed_form")
    try:
        reports = [counting.full_report(n, engines) for n in range(1, n_max + 1)]
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)
    if not all(r.agree for r in reports):
        raise HTTPException(status_code=500, detail="engine disagreement")
    return [CountResponse(**r.to_dict()) for r in reports]


@app.post("/render/permutation")
def render_permutation(req: WordRequest, cell: int = 24) -> Response:
    try:
        w = stirling.validate_stirling(stirling.parse_word(req.word))
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)
    svg = render.render_permutation(w, render.Styling(cell=cell))
    return Response(content=svg, media_type="image/svg+xml")


@app.post("/render/dyck")
def render_dyck_path(req: PathRequest, cell: int = 24) -> Response:
    try:
        path = dyck.RationalDyckPath.from_path(dyck.parse_path(req.steps))
    except (StirlingMesasError, ValueError) as exc:
        raise _bad_request(exc)
    svg = render.render_dyck(path, render.Styling(cell=cell))
    return Response(content=svg, media_type="image/svg+xml")
