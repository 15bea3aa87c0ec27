import itertools

import pytest

from treeminor.oracle import exact_minor, exact_minor_rooted
from treeminor.reductions.cnf import CnfError, CnfFormula, is_satisfiable
from treeminor.reductions.ippc import (
    IppcInstance,
    Poset,
    check_ippc_solution,
    ippc_brute,
    ippc_pad,
    ippc_solve,
    ippc_to_trees,
    ippc_witness_embedding,
    natural_embedding,
    order_caterpillar,
    pad_solution,
    satx_to_ippc,
)
from treeminor.tree import components_minus_edges, is_caterpillar, verify_embedding
from treeminor.treeio import parse_tree, serialize_tree

CHAIN = Poset(2, {(0, 0), (1, 1), (0, 1)})
ANTICHAIN = Poset(2, {(0, 0), (1, 1)})


def single(X, Y, Z):
    return IppcInstance(("u",), {(0, 0)}, X, Y, Z)


def test_satx_example():
    inst = satx_to_ippc(CnfFormula(1, [(1,), (1,), (-1,)]))
    label = {e: i for i, e in enumerate(inst.elements)}
    pair = lambda a, b: (label[a], label[b])
    assert inst.X == (pair("(1,1,-1)", "(-1,2,-2)"), pair("(1,3,-3)", "(-1,-inf,-inf)"))
    assert inst.Y == (pair("(1,-inf,-inf)", "(-1,-inf,-inf)"),)
    assert inst.Z == tuple(label[f"(-inf,{i},-{i})"] for i in (1, 2, 3))
    assert not ippc_brute(inst)


def test_satx_two_variables():
    f = CnfFormula(2, [(1, 2), (1, -2), (2, -1)])
    inst = satx_to_ippc(f)
    assert len(inst.elements) == len(set(inst.elements))
    used = {e for p in inst.X + inst.Y for e in p} | set(inst.Z)
    assert used == set(range(inst.size))
    assert ippc_brute(inst) == is_satisfiable(f)


@pytest.mark.parametrize(
    "clauses",
    [[(1,), (-1,)], [(1, 1), (-1,)], [(1,), (1,), (-1,), (-1,)], [(1,), (1,), (-1, 1, 1, 1)]],
)
def test_satx_rejects_bad_patterns(clauses):
    with pytest.raises(CnfError):
        satx_to_ippc(CnfFormula(1, clauses))


def test_brute_examples():
    assert ippc_brute(single([(0, 0)], [], [0]))
    assert not ippc_brute(single([(0, 0)], [(0, 0)], [0]))
    assert ippc_brute(single([(0, 0)], [(0, 0)], []))


def test_instance_validation():
    with pytest.raises(ValueError):
        IppcInstance(("a", "b"), {(0, 0), (1, 1), (0, 1), (1, 0)}, [(0, 1)], [], [])
    with pytest.raises(ValueError):
        IppcInstance(("a", "b", "c"), {(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)}, [(0, 1)], [], [2])
    with pytest.raises(ValueError):
        IppcInstance(("a", "b"), {(0, 0), (1, 1)}, [(0, 0)], [], [])
    with pytest.raises(ValueError):
        IppcInstance(("a",), {(0, 0)}, [(0, 1)], [], [])


def test_json_round_trip():
    inst = satx_to_ippc(CnfFormula(1, [(1, -1), (1,)]))
    assert IppcInstance.from_json(inst.to_json()) == inst


def test_pad():
    inst = IppcInstance(("a", "b"), CHAIN.leq, [(0, 1), (1, 1)], [(0, 0)], [1])
    padded = ippc_pad(inst)
    assert len(padded.Z) == 2 and padded.size == 3 and padded.balanced
    w = padded.Z[-1]
    assert all(padded.le(w, j) for j in range(padded.size))
    balanced = single([(0, 0)], [], [0, 0])
    assert ippc_pad(balanced) == balanced
    assert ippc_pad(single([(0, 0)], [(0, 0)], [])) == single([(0, 0)], [(0, 0)], [])
    with pytest.warns(UserWarning):
        over = single([(0, 0)], [(0, 0)], [0])
        assert ippc_pad(over) == over


def test_pad_preserves_answer():
    for X in itertools.product([(0, 0), (0, 1), (1, 0), (1, 1)], repeat=3):
        inst = IppcInstance(("a", "b"), CHAIN.leq, X, [(1, 0)], [1])
        assert ippc_brute(ippc_pad(inst)) == ippc_brute(inst)


def test_order_caterpillar_examples():
    T0, spine, leaves = order_caterpillar(CHAIN, 0)
    T1, _, _ = order_caterpillar(CHAIN, 1)
    assert (T0.tree.n, T1.tree.n) == (5, 6)
    assert len(spine) == 4 and T0.root == spine[0] and list(leaves) == [0]
    for po in (CHAIN, ANTICHAIN):
        for a in range(2):
            assert is_caterpillar(order_caterpillar(po, a)[0].tree)
    assert order_caterpillar(ANTICHAIN, 1)[0].tree.n == 5


def test_natural_embedding_examples():
    T1 = order_caterpillar(CHAIN, 1)[0].tree
    T0 = order_caterpillar(CHAIN, 0)[0].tree
    ident = natural_embedding(CHAIN, 1, 1)
    assert ident == tuple(range(T1.n)) and verify_embedding(T1, T1, ident)
    f = natural_embedding(CHAIN, 0, 1)
    assert verify_embedding(T1, T0, f)
    leaf_1 = order_caterpillar(CHAIN, 1)[2][1]
    assert f[leaf_1] == 1
    assert natural_embedding(CHAIN, 1, 0) is None
    assert natural_embedding(ANTICHAIN, 0, 1) is None
    A0 = order_caterpillar(ANTICHAIN, 0)[0].tree
    A1 = order_caterpillar(ANTICHAIN, 1)[0].tree
    assert not exact_minor(A1, A0)


def test_free_order_caterpillar_law_fails_on_three_elements():
    # 2 below 0, 1 isolated: OCat(1) is an unrooted minor of OCat(0) by
    # reversing the spine, though 1 is not below 0.  Anchored at v_0 it is not.
    po = Poset(3, {(0, 0), (1, 1), (2, 2), (2, 0)})
    A, B = order_caterpillar(po, 1)[0], order_caterpillar(po, 0)[0]
    assert not po.le(1, 0)
    assert exact_minor(B.tree, A.tree)
    assert not exact_minor_rooted(B.tree, B.root, A.tree, A.root)


def test_trees_shape():
    inst = IppcInstance(("a", "b"), CHAIN.leq, [(0, 1), (1, 1)], [(0, 0)], [1])
    T, P, labels = ippc_to_trees(inst)
    n = inst.size + 1
    assert labels["meta:padding"] == 1
    assert T.n <= (4 * n + 5) * 2 + 1 and P.n <= (4 * n + 5) * 1 + (2 * n + 2) * 2 + 1
    for tree, root in ((T, labels["T:r_T"]), (P, labels["P:r_P"])):
        cut = [e for e in tree.edges if root in e]
        for comp, mapping in components_minus_edges(tree, cut):
            if root not in mapping:
                assert is_caterpillar(comp)
    assert parse_tree(serialize_tree(T)) == T


def test_trees_tiny_padded_round_trip():
    inst = single([(0, 0), (0, 0)], [(0, 0)], [])
    T, P, labels = ippc_to_trees(inst)
    assert labels["meta:padding"] == 2
    assert parse_tree(serialize_tree(P)) == P


def test_trees_preconditions():
    with pytest.raises(ValueError):
        ippc_to_trees(single([(0, 0)], [(0, 0)], [0]), pad=False)
    with pytest.raises(ValueError):
        ippc_to_trees(single([(0, 0)], [], [0, 0]), pad=False)


def test_witness_tiny():
    inst = single([(0, 0), (0, 0)], [(0, 0)], [])
    padded = ippc_pad(inst)
    f, g = pad_solution(padded, *ippc_solve(inst))
    T, P, _ = ippc_to_trees(inst)
    assert verify_embedding(T, P, ippc_witness_embedding(padded, f, g))


def test_witness_swapped():
    # y = (b, a) only fits x = (a, b) after swapping sides.
    inst = IppcInstance(("a", "b"), ANTICHAIN.leq, [(0, 1), (0, 1)], [(1, 0)], [0, 1])
    f, g = ippc_solve(inst)
    T, P, _ = ippc_to_trees(inst, pad=False)
    assert verify_embedding(T, P, ippc_witness_embedding(inst, f, g))


def test_witness_rejects_invalid():
    inst = single([(0, 0), (0, 0)], [(0, 0), (0, 0)], [])
    with pytest.raises(ValueError):
        ippc_witness_embedding(inst, (0, 0), ())
    with pytest.raises(ValueError):
        check_ippc_solution(single([(0, 0), (0, 0)], [(0, 0)], [0, 0]), (0,), ((0, 1), (1, 1)))
