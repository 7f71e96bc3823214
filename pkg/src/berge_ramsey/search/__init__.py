from .arrowing import (
    ArrowingProblem,
    RamseyResult,
    SearchOutcome,
    SearchStats,
    certify_counterexample,
    decide_arrowing,
    ramsey_number,
)
from .kernel import EdgeSpace
from .turan import TuranResult, turan_max

__all__ = [
    "ArrowingProblem",
    "EdgeSpace",
    "RamseyResult",
    "SearchOutcome",
    "SearchStats",
    "TuranResult",
    "certify_counterexample",
    "decide_arrowing",
    "ramsey_number",
    "turan_max",
]
