"""CNF formulas with DIMACS literals, a DIMACS reader/writer, and truth-table SAT
for the tiny formulas the reduction tests use."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class CnfError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """``clauses`` hold nonzero ints: ``+i`` is variable ``i``, ``-i`` its negation."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise CnfError("negative variable count")
        for j, clause in enumerate(self.clauses, 1):
            if not clause:
                raise CnfError(f"clause {j} is empty")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"clause {j}: literal {lit} out of range")

    def evaluate(self, assignment) -> bool:
        """``assignment[i - 1]`` is the value of variable ``i``."""
        return all(
            any(assignment[abs(l) - 1] == (l > 0) for l in clause) for clause in self.clauses
        )


def satisfying_assignment(cnf: CnfFormula) -> tuple[bool, ...] | None:
    for bits in itertools.product((False, True), repeat=cnf.num_vars):
        if cnf.evaluate(bits):
            return bits
    return None


def is_satisfiable(cnf: CnfFormula) -> bool:
    return satisfying_assignment(cnf) is not None


def is_exact3(cnf: CnfFormula) -> bool:
    """Every clause has exactly three pairwise distinct literals."""
    return all(len(c) == 3 and len(set(c)) == 3 for c in cnf.clauses)


def to_exact3(cnf: CnfFormula) -> CnfFormula:
    """Equisatisfiable formula whose clauses all have three distinct literals.

    Repeated literals are dropped, then short clauses are widened with fresh
    variables taken in every sign combination.
    """
    num_vars = cnf.num_vars
    out = []
    for clause in cnf.clauses:
        lits = tuple(dict.fromkeys(clause))
        if len(lits) > 3:
            raise CnfError(f"clause {clause} has more than 3 distinct literals")
        fresh = list(range(num_vars + 1, num_vars + 1 + 3 - len(lits)))
        num_vars += len(fresh)
        for signs in itertools.product((1, -1), repeat=len(fresh)):
            out.append(lits + tuple(s * v for s, v in zip(signs, fresh)))
    return CnfFormula(num_vars, tuple(out))


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = num_clauses = None
    clauses = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if not fields or fields[0] in ("c", "%"):
            continue
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "cnf":
                raise CnfError(f"line {lineno}: expected 'p cnf <vars> <clauses>'")
            num_vars, num_clauses = int(fields[2]), int(fields[3])
            continue
        if num_vars is None:
            raise CnfError(f"line {lineno}: clause before header")
        try:
            lits = [int(x) for x in fields]
        except ValueError:
            raise CnfError(f"line {lineno}: non-integer literal") from None
        for lit in lits:
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise CnfError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    if num_clauses is not None and num_clauses != len(clauses):
        raise CnfError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def to_dimacs(cnf: CnfFormula) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    lines.extend(" ".join(str(l) for l in clause) + " 0" for clause in cnf.clauses)
    return "\n".join(lines) + "\n"
