import itertools
import warnings

import pytest

from treeminor.reductions.cnf import CnfError, CnfFormula
from treeminor.reductions.isc import (
    IscInstance,
    check_isc_solution,
    isc_brute,
    isc_solve,
    isc_to_trees,
    isc_witness_embedding,
    sat3_to_isc,
)
from treeminor.tree import diameter, path_eccentricity, verify_embedding


def brute_surjection(inst, selection):
    """Try every inclusive map of the selected members onto the universe."""
    members = [e for i in selection for e in inst.sets[i]]
    choices = [range(1, e + 1) for e in members]
    return any(set(img) == set(range(1, inst.n + 1)) for img in itertools.product(*choices))


def test_sat3_examples():
    with pytest.warns(UserWarning):
        inst = sat3_to_isc(CnfFormula(2, [(1, -2)]))
    assert inst.n == 7 and inst.k == 2
    assert [set(s) for s in inst.sets] == [{5, 6, 3}, {4, 7, 2}, {5, 6, 2}, {4, 7, 3}]
    with pytest.warns(UserWarning):
        inst = sat3_to_isc(CnfFormula(1, [(1,)]))
    assert [set(s) for s in inst.sets] == [{4, 5, 3}, {4, 5, 2}] and inst.k == 1


def test_sat3_errors():
    with pytest.raises(CnfError):
        sat3_to_isc(CnfFormula(4, [(1, 2, 3, 4)]))
    with pytest.raises(CnfError):
        CnfFormula(1, [()])


def test_exact3_input_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        sat3_to_isc(CnfFormula(3, [(1, 2, 3)]))


@pytest.mark.parametrize(
    "n, sets, k, expected",
    [
        (1, [{1}], 1, True),
        (2, [{1}, {1}], 2, False),
        (2, [{2}, {2}], 2, True),
        (2, [{2}, {2}], 1, False),
    ],
)
def test_brute_examples(n, sets, k, expected):
    assert isc_brute(IscInstance(n, sets, k)) is expected


def test_dominance_matches_explicit_maps():
    universe = 4
    subsets = [s for r in range(1, 4) for s in itertools.combinations(range(1, universe + 1), r)]
    for a, b in itertools.combinations_with_replacement(subsets, 2):
        inst = IscInstance(universe, [a, b], 2)
        expected = any(
            brute_surjection(inst, sel)
            for size in range(3) for sel in itertools.combinations(range(2), size)
        )
        assert isc_brute(inst) == expected


def test_instance_validation_and_json():
    with pytest.raises(ValueError):
        IscInstance(2, [{3}], 1)
    with pytest.raises(ValueError):
        IscInstance(2, [{1}], -1)
    inst = IscInstance(3, [[3, 1], [2]], 1)
    assert IscInstance.from_json(inst.to_json()) == inst


def test_solution_checker():
    inst = IscInstance(2, [{2}, {1, 2}], 1)
    check_isc_solution(inst, (1,), {(1, 1): 1, (1, 2): 2})
    with pytest.raises(ValueError):
        check_isc_solution(inst, (0, 1), {(0, 2): 2, (1, 1): 1, (1, 2): 1})
    with pytest.raises(ValueError):
        check_isc_solution(inst, (1,), {(1, 1): 2, (1, 2): 1})
    with pytest.raises(ValueError):
        check_isc_solution(inst, (1,), {(1, 1): 1})


def test_tree_example():
    inst = IscInstance(2, [{2}, {1, 2}], 1)
    T, P, labels = isc_to_trees(inst)
    assert (T.n, P.n) == (85, 68)
    assert (diameter(T), diameter(P)) == (6, 4)
    # With only two sets the host collapses to a path after two rounds.
    assert (path_eccentricity(T), path_eccentricity(P)) == (2, 2)
    assert labels["T:t"] == 0 and "P:y_1" in labels and "P:x_1" in labels
    selection, allocation = isc_solve(inst)
    assert verify_embedding(T, P, isc_witness_embedding(inst, selection, allocation))
    assert verify_embedding(T, P, isc_witness_embedding(inst, (1,), {(1, 1): 1, (1, 2): 2}))


def test_tree_structure_three_sets():
    inst = IscInstance(2, [{2}, {1, 2}, {1}], 1)
    T, P, _ = isc_to_trees(inst)
    assert (diameter(T), diameter(P), path_eccentricity(T), path_eccentricity(P)) == (6, 4, 3, 2)
    selection, allocation = isc_solve(inst)
    assert verify_embedding(T, P, isc_witness_embedding(inst, selection, allocation))


def test_degenerate_singleton():
    inst = IscInstance(1, [{1}], 1)
    T, P, _ = isc_to_trees(inst)
    assert T.n > P.n
    assert verify_embedding(T, P, isc_witness_embedding(inst, *isc_solve(inst)))


def test_witness_rejects_invalid():
    inst = IscInstance(2, [{2}, {1, 2}], 1)
    with pytest.raises(ValueError):
        isc_witness_embedding(inst, (0, 1), {(0, 2): 2, (1, 1): 1, (1, 2): 1})


def test_scale_warns_and_still_builds():
    inst = IscInstance(2, [{2}, {1, 2}], 1)
    with pytest.warns(UserWarning):
        T, P, _ = isc_to_trees(inst, base=1)
    assert T.n < 85
    with pytest.raises(ValueError):
        isc_to_trees(IscInstance(2, [{2}], 2))
