"""Finite group, character table and ramification computations."""

from ._qslab import (
    InvalidStructure,
    MalformedSpec,
    ParseError,
    Session,
    run,
    verify_paper,
)

__all__ = ["InvalidStructure", "MalformedSpec", "ParseError", "Session", "run", "verify_paper"]
