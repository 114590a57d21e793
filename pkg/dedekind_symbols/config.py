"""
Configuration for Dedekind Symbols
Environment-based configuration, optionally seeded from a .env file
"""

import os
from dataclasses import dataclass
from typing import List

from dotenv import load_dotenv

from .exceptions import ConfigError

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, str(default))
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"Environment variable {name} must be an integer, got {raw!r}") from None


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name, repr(default))
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"Environment variable {name} must be a number, got {raw!r}") from None


@dataclass
class SearchConfig:
    """Word search configuration"""
    budget: int = _env_int("DEDEKIND_SEARCH_BUDGET", 1_000_000)


@dataclass
class NumericsConfig:
    """q-series truncation configuration"""
    series_tol: float = _env_float("DEDEKIND_SERIES_TOL", 1e-12)
    # eta logarithms at points close to the real axis
    max_terms: int = _env_int("DEDEKIND_MAX_TERMS", 200_000)
    # cusp-form and Eisenstein periods
    symbol_max_terms: int = _env_int("DEDEKIND_SYMBOL_MAX_TERMS", 20_000)


@dataclass
class VerifyConfig:
    """Verification suite configuration"""
    seed: int = _env_int("DEDEKIND_SEED", 42)
    count: int = _env_int("DEDEKIND_VERIFY_COUNT", 1000)
    tol: float = _env_float("DEDEKIND_VERIFY_TOL", 1e-9)
    jobs: int = _env_int("DEDEKIND_VERIFY_JOBS", 1)


@dataclass
class LoggingConfig:
    """Logging configuration"""
    level: str = os.getenv("DEDEKIND_LOG_LEVEL", "WARNING").upper()
    format: str = "%(asctime)s %(levelname)s %(message)s"


@dataclass
class APIConfig:
    """API configuration"""
    title: str = "Dedekind Symbols API"
    description: str = "Exact modular Dedekind symbols, words and verification suites"
    version: str = "1.0.0"
    debug: bool = os.getenv("DEBUG", "false").lower() == "true"
    host: str = os.getenv("HOST", "0.0.0.0")
    port: int = _env_int("PORT", 8000)
    # node budget of word searches made per request
    search_budget: int = _env_int("DEDEKIND_API_SEARCH_BUDGET", 50_000)
    cors_origins: List[str] = None

    def __post_init__(self):
        if self.cors_origins is None:
            raw = os.getenv("CORS_ORIGINS", "*")
            self.cors_origins = [origin.strip() for origin in raw.split(",") if origin.strip()]


@dataclass
class DedekindConfig:
    """Main configuration container"""
    search: SearchConfig
    numerics: NumericsConfig
    verify: VerifyConfig
    logging: LoggingConfig
    api: APIConfig

    def __init__(self):
        self.search = SearchConfig()
        self.numerics = NumericsConfig()
        self.verify = VerifyConfig()
        self.logging = LoggingConfig()
        self.api = APIConfig()


# Global config instance
config = DedekindConfig()


def get_config() -> DedekindConfig:
    """Get the global configuration instance"""
    return config
