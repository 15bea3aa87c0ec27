"""Regime classification over (diameter, path eccentricity, caterpillar class)
and a dispatcher that runs the matching polynomial algorithm."""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace

from .oracle import DEFAULT_MAX_N, exact_minor
from .solvers import cat_in_tree, lob_in_lob
from .tree import Tree, diameter, path_eccentricity

TRIVIAL_NO = "trivial-no"
POLY_CATERPILLAR = "poly-caterpillar-pattern"
POLY_LOBSTER = "poly-lobster-pair"
HARD = "hard-fallback"

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class DichotomyReport:
    n_T: int
    n_P: int
    diam_T: int
    diam_P: int
    pe_T: int
    pe_P: int
    cat_P: bool
    lob_T: bool
    lob_P: bool
    regime: str
    algorithm: str | None
    answer: str = UNKNOWN

    def to_dict(self) -> dict:
        return asdict(self)


def classify(T: Tree, P: Tree) -> DichotomyReport:
    diam_T, diam_P = diameter(T), diameter(P)
    pe_T, pe_P = path_eccentricity(T), path_eccentricity(P)
    answer = UNKNOWN
    if P.n > T.n or diam_P > diam_T:
        regime, algorithm, answer = TRIVIAL_NO, None, NO
    elif pe_P <= 1:
        regime, algorithm = POLY_CATERPILLAR, "cat_in_tree"
    elif pe_T <= 2 and pe_P <= 2:
        regime, algorithm = POLY_LOBSTER, "lob_in_lob"
    else:
        regime, algorithm = HARD, None
    return DichotomyReport(
        n_T=T.n, n_P=P.n, diam_T=diam_T, diam_P=diam_P, pe_T=pe_T, pe_P=pe_P,
        cat_P=pe_P <= 1, lob_T=pe_T <= 2, lob_P=pe_P <= 2,
        regime=regime, algorithm=algorithm, answer=answer,
    )


def solve(
    T: Tree,
    P: Tree,
    allow_exact: bool = True,
    max_exact_n: int = DEFAULT_MAX_N,
) -> tuple[str, DichotomyReport]:
    """Answer ``yes``/``no``/``unknown`` for "is P a minor of T"."""
    report = classify(T, P)
    if P.n == 1:
        answer = YES
    elif report.regime == TRIVIAL_NO:
        answer = NO
    elif report.regime == POLY_CATERPILLAR:
        answer = YES if cat_in_tree(T, P) else NO
    elif report.regime == POLY_LOBSTER:
        answer = YES if lob_in_lob(T, P) else NO
    elif allow_exact and T.n <= max_exact_n:
        answer = YES if exact_minor(T, P, max_n=max_exact_n) else NO
        report = replace(report, algorithm="exact_minor")
    else:
        answer = UNKNOWN
    report = replace(report, answer=answer)
    return answer, report
