"""
FastAPI application for Dedekind Symbols
Exact symbols, words and verification suites over HTTP
"""

import logging
from typing import List, Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .cli import preset_summary, resolve_group
from .config import get_config
from .dedekind_sum import dedekind_sum_steps
from .exact_core import format_matrix, parse_matrix
from .exceptions import DedekindError
from .higher_order import S_star, group_symbol, theta
from .presets import get_preset, load_presets
from .schemas import (
    HealthStatus,
    PresetSummary,
    StarResult,
    SumResult,
    SymbolResult,
    VerifyReport,
    WordResult,
    rational,
)
from .symbols_classical import RootOfUnity
from .verify import run_verify
from .words import eval_word, parse_word, solve_word

config = get_config()
logger = logging.getLogger(__name__)

app = FastAPI(
    title=config.api.title,
    description=config.api.description,
    version=config.api.version,
    debug=config.api.debug,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=config.api.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


def _bad_request(exc: DedekindError) -> HTTPException:
    logger.info("rejected request: %s", exc)
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/")
async def root():
    """Root endpoint with API information"""
    return {
        "name": config.api.title,
        "description": config.api.description,
        "version": config.api.version,
        "status": "running",
    }


@app.get("/health", response_model=HealthStatus)
async def health_check():
    """Health check endpoint"""
    return HealthStatus(version=__version__, presets=sorted(load_presets()))


@app.get("/api/v1/sum", response_model=SumResult)
def get_sum(h: int = Query(...), k: int = Query(..., ge=1)):
    """Dedekind sum s(h,k)"""
    try:
        value, steps = dedekind_sum_steps(h, k)
    except DedekindError as exc:
        raise _bad_request(exc)
    return SumResult(h=h, k=k, value=rational(value), steps=steps)


@app.get("/api/v1/symbol", response_model=SymbolResult)
def get_symbol(
    group: str = Query(..., description="sl2z, gamma0, plus, gamma0-N or gamma0-Nplus"),
    matrix: str = Query(..., description="a,b,c,d or a,b,c,d;e"),
    level: Optional[int] = Query(None, ge=1),
    cusp: str = Query("inf", pattern="^(inf|0)$"),
):
    """First-order symbol S"""
    try:
        group_id = resolve_group(group, level)
        M = parse_matrix(matrix)
        value = group_symbol(group_id, M, cusp)
    except DedekindError as exc:
        raise _bad_request(exc)
    return SymbolResult(
        group=str(group_id),
        cusp=cusp,
        matrix=format_matrix(M),
        value=rational(value),
        multiplier=str(RootOfUnity.from_exponent(value)),
    )


@app.get("/api/v1/star", response_model=StarResult)
def get_star(
    group: str = Query(..., description="Preset name"),
    matrix: Optional[str] = Query(None),
    word: Optional[str] = Query(None, description="Word over the preset alphabet"),
    cusp: str = Query("inf"),
):
    """Higher-order symbol S* modulo 1 and theta"""
    if (matrix is None) == (word is None):
        raise HTTPException(status_code=400, detail="give exactly one of matrix and word")
    try:
        preset = get_preset(group)
        if word is not None:
            w = parse_word(preset, word)
        else:
            w = solve_word(preset, parse_matrix(matrix), config.api.search_budget)
        value = S_star(preset, w, cusp)
        theta_value = str(theta(preset, w, cusp)) if preset.membership != "sl2z" else None
    except DedekindError as exc:
        raise _bad_request(exc)
    return StarResult(
        group=preset.name,
        cusp=cusp,
        matrix=format_matrix(eval_word(preset, w)),
        word=str(w),
        value=str(value),
        theta=theta_value,
    )


@app.get("/api/v1/word", response_model=WordResult)
def get_word(group: str = Query(...), matrix: str = Query(...)):
    """Word over the preset generators evaluating to the matrix"""
    try:
        preset = get_preset(group)
        M = parse_matrix(matrix)
        w = solve_word(preset, M, config.api.search_budget)
    except DedekindError as exc:
        raise _bad_request(exc)
    return WordResult(group=preset.name, matrix=format_matrix(M), word=str(w), length=len(w.compressed()))


@app.get("/api/v1/presets", response_model=List[PresetSummary])
def get_presets():
    """Shipped group presets"""
    return [preset_summary(preset) for preset in load_presets().values()]


@app.get("/api/v1/verify", response_model=VerifyReport)
def get_verify(
    suite: str = Query("sums"),
    seed: int = Query(config.verify.seed),
    count: int = Query(100, ge=1, le=10_000),
):
    """Run a verification suite in-process"""
    try:
        return run_verify(suite, seed=seed, count=count, jobs=1)
    except DedekindError as exc:
        raise _bad_request(exc)
