"""Oracle-equivalence sweeps over every pair of small free trees."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dichotomy import HARD, NO, UNKNOWN, YES, solve
from .enumeration import enumerate_trees
from .oracle import exact_minor, exact_minor_dp
from .solvers import cat_in_tree, lob_in_lob
from .tree import is_caterpillar, is_lobster


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, case) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 5:
                self.failures.append(case)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def tree_pairs(max_n: int):
    """All (T, P) pairs of non-isomorphic trees with |P| <= |T| <= max_n."""
    by_size = {n: enumerate_trees(n) for n in range(1, max_n + 1)}
    for nt in range(1, max_n + 1):
        for T in by_size[nt]:
            for np_ in range(1, nt + 1):
                for P in by_size[np_]:
                    yield T, P


def run_selftest(max_n: int = 7) -> list[SuiteResult]:
    oracles = SuiteResult("exact_minor == exact_minor_dp")
    cat = SuiteResult("cat_in_tree == oracle")
    lob = SuiteResult("lob_in_lob == oracle")
    disp = SuiteResult("solve == oracle")
    for T, P in tree_pairs(max_n):
        truth = exact_minor(T, P)
        oracles.record(truth == exact_minor_dp(T, P), (T, P))
        if P.n >= 2 and is_caterpillar(P):
            cat.record(cat_in_tree(T, P) == truth, (T, P))
        if P.n >= 2 and is_lobster(T) and is_lobster(P):
            lob.record(lob_in_lob(T, P) == truth, (T, P))
        answer, report = solve(T, P)
        expected = YES if truth else NO
        disp.record(answer == expected or (answer == UNKNOWN and report.regime == HARD), (T, P))
    return [oracles, cat, lob, disp]
