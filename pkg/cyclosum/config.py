"""Module for bounds and environment driven settings."""

from dataclasses import dataclass
from typing import Mapping, Optional
import os

__all__ = [
    "CACHE_DIR_ENV",
    "DEBUG_ENV",
    "JOBS_ENV",
    "Settings",
]

CACHE_DIR_ENV = "CYCLOSUM_CACHE_DIR"
JOBS_ENV = "CYCLOSUM_JOBS"
DEBUG_ENV = "CYCLOSUM_DEBUG"

# trial division stays instant below this
FACTORIZE_LIMIT = 10**12

MINIMALITY_SUBSET_BOUND = 24

FULL_ENUMERATION_LIMIT = 30
CAPPED_ENUMERATION_LIMIT = 42
CAPPED_ENUMERATION_WEIGHT = 12

# free quotient coefficients per DFS
DFS_DEPTH_LIMIT = 40

THEOREM_2PQ_LIMIT = 2310


@dataclass(frozen=True)
class Settings:
    """Run settings resolved from command line flags, then environment
    variables, then defaults."""
    cache_dir: Optional[str]
    jobs: int

    __slots__ = ("cache_dir", "jobs")

    @classmethod
    def resolve(cls,
                cache_dir: Optional[str] = None,
                jobs: Optional[int] = None,
                environ: Optional[Mapping[str, str]] = None) -> "Settings":
        if environ is None:
            environ = os.environ

        if cache_dir is None:
            cache_dir = environ.get(CACHE_DIR_ENV) or None

        if jobs is None:
            raw = environ.get(JOBS_ENV, "1")
            try:
                jobs = int(raw)
            except ValueError:
                jobs = 1

        return cls(cache_dir=cache_dir, jobs=max(1, jobs))
