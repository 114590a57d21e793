"""
JSON payloads
Pydantic models shared by the CLI --json output and the HTTP API
"""

from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, Field


def rational(value) -> str:
    """Exact values travel as 'p/q' strings"""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class SumResult(BaseModel):
    h: int
    k: int
    value: str = Field(..., description="s(h,k) as a reduced fraction")
    steps: int = Field(..., description="Reciprocity steps taken by the fast algorithm")


class SymbolResult(BaseModel):
    group: str
    cusp: str = "inf"
    matrix: str
    value: str
    multiplier: Optional[str] = Field(None, description="exp(pi i S) as a root of unity")


class StarResult(BaseModel):
    group: str
    cusp: str = "inf"
    matrix: Optional[str] = None
    word: str
    value: str = Field(..., description="S* modulo 1, possibly with an X_B coefficient")
    theta: Optional[str] = None


class WordResult(BaseModel):
    group: str
    matrix: str
    word: str
    length: int


class PresetSummary(BaseModel):
    name: str
    description: str
    membership: str
    level: int
    generators: Dict[str, str]
    symbols: Dict[str, str] = {}
    cusps_with_tables: List[str] = []
    kappa: Optional[str] = None


class CheckResult(BaseModel):
    name: str
    passed: bool
    max_residual: float = 0.0
    cases: int = 0
    detail: str = ""


class VerifyReport(BaseModel):
    suite: str
    seed: int
    count: int
    passed: bool
    checks: List[CheckResult]

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


class HealthStatus(BaseModel):
    status: str = "healthy"
    version: str
    presets: List[str]


SCHEMA_MODELS = {
    "sum": SumResult,
    "symbol": SymbolResult,
    "star": StarResult,
    "word": WordResult,
    "preset": PresetSummary,
    "verify": VerifyReport,
    "health": HealthStatus,
}
