import itertools

import pytest

from treeminor.reductions.cnf import (
    CnfError,
    CnfFormula,
    is_exact3,
    is_satisfiable,
    parse_dimacs,
    satisfying_assignment,
    to_dimacs,
    to_exact3,
)


def test_validation():
    with pytest.raises(CnfError):
        CnfFormula(2, [(1,), ()])
    with pytest.raises(CnfError):
        CnfFormula(1, [(2,)])
    with pytest.raises(CnfError):
        CnfFormula(1, [(0,)])


def test_sat():
    assert is_satisfiable(CnfFormula(1, [(1,)]))
    assert not is_satisfiable(CnfFormula(1, [(1,), (-1,)]))
    bits = satisfying_assignment(CnfFormula(2, [(1, -2), (2,)]))
    assert bits == (True, True)


def test_dimacs_round_trip():
    f = CnfFormula(3, [(1, -2, 3), (-1,)])
    assert parse_dimacs(to_dimacs(f)) == f
    assert parse_dimacs("c hi\np cnf 2 1\n1 -2\n0\n") == CnfFormula(2, [(1, -2)])


@pytest.mark.parametrize(
    "text",
    ["1 0\n", "p cnf 1 2\n1 0\n", "p cnf x 1\n1 0\n", "p cnf 1 1\n1 a 0\n", "p dnf 1 1\n1 0\n"],
)
def test_dimacs_errors(text):
    with pytest.raises((CnfError, ValueError)):
        parse_dimacs(text)


def test_exact3_widening():
    lits = [1, -1, 2, -2]
    clauses = [c for r in (1, 2, 3) for c in itertools.combinations(lits, r)]
    for combo in itertools.combinations(clauses, 2):
        f = CnfFormula(2, combo)
        g = to_exact3(f)
        assert is_exact3(g)
        assert is_satisfiable(g) == is_satisfiable(f)
    assert to_exact3(CnfFormula(1, [(1, 1)])).clauses[0][:1] == (1,)
