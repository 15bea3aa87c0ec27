"""Inclusive Set Cover: the 3-SAT encoding, a brute-force solver, the
diameter-(6, 4) tree pair, and the completeness-direction embedding.

An instance asks for at most ``k`` of the sets whose disjoint union maps onto
``{1..n}`` with every member sent to a value no larger than itself.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass
from typing import Mapping

from ..tree import Tree
from ._build import TreeBuilder
from .cnf import CnfError, CnfFormula, is_exact3

Allocation = Mapping[tuple[int, int], int]


@dataclass(frozen=True)
class IscInstance:
    n: int
    sets: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(tuple(sorted(set(s))) for s in self.sets))
        if self.n < 0 or self.k < 0:
            raise ValueError("universe size and budget must be nonnegative")
        for i, s in enumerate(self.sets):
            if any(not 1 <= e <= self.n for e in s):
                raise ValueError(f"set {i} is not a subset of 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.sets)

    def to_json(self) -> str:
        return json.dumps({"universe": self.n, "sets": [list(s) for s in self.sets], "k": self.k})

    @classmethod
    def from_json(cls, text: str) -> "IscInstance":
        data = json.loads(text)
        return cls(int(data["universe"]), tuple(tuple(s) for s in data["sets"]), int(data["k"]))


def sat3_to_isc(cnf: CnfFormula) -> IscInstance:
    """Sets ``T_1..T_|V|, F_1..F_|V|`` with budget ``|V|``.

    The counting argument needs every clause to carry exactly three distinct
    literals; shorter clauses are encoded as written but void the equivalence
    (widen them with ``to_exact3`` first).
    """
    nv, nc = cnf.num_vars, len(cnf.clauses)
    for j, clause in enumerate(cnf.clauses, 1):
        if len(clause) > 3:
            raise CnfError(f"clause {j} has {len(clause)} literals, at most 3 allowed")
    if not is_exact3(cnf):
        warnings.warn("clauses without exactly three distinct literals void the SAT equivalence")
    alpha = nv + 3 * nc
    true_sets, false_sets = [], []
    for i in range(1, nv + 1):
        pos = {3 * j for j, c in enumerate(cnf.clauses, 1) if i in c}
        neg = {3 * j for j, c in enumerate(cnf.clauses, 1) if -i in c}
        base = {alpha - i + 1, alpha + i}
        true_sets.append(base | pos | {x - 1 for x in neg})
        false_sets.append(base | neg | {x - 1 for x in pos})
    return IscInstance(2 * nv + 3 * nc, tuple(true_sets + false_sets), nv)


def _cover(inst: IscInstance, selection) -> dict[tuple[int, int], int] | None:
    """Largest members take the largest targets; leftovers sink to 1."""
    members = sorted(((e, i) for i in selection for e in inst.sets[i]), reverse=True)
    if len(members) < inst.n:
        return None
    allocation = {}
    for rank, (e, i) in enumerate(members):
        target = max(inst.n - rank, 1)
        if e < target:
            return None
        allocation[(i, e)] = target
    return allocation


def isc_solve(inst: IscInstance, max_sets: int = 20):
    """A ``(selection, allocation)`` solution, or None."""
    if inst.m > max_sets:
        raise ValueError(f"{inst.m} sets exceed the brute-force cap of {max_sets}")
    for size in range(min(inst.k, inst.m) + 1):
        for selection in itertools.combinations(range(inst.m), size):
            allocation = _cover(inst, selection)
            if allocation is not None:
                return selection, allocation
    return None


def isc_brute(inst: IscInstance, max_sets: int = 20) -> bool:
    return isc_solve(inst, max_sets) is not None


def check_isc_solution(inst: IscInstance, selection, allocation: Allocation) -> None:
    selection = tuple(selection)
    if len(set(selection)) != len(selection) or any(not 0 <= i < inst.m for i in selection):
        raise ValueError("selection must list distinct set indices")
    if len(selection) > inst.k:
        raise ValueError(f"selection of {len(selection)} sets exceeds budget {inst.k}")
    members = {(i, e) for i in selection for e in inst.sets[i]}
    if set(allocation) != members:
        raise ValueError("allocation must cover exactly the members of the selected sets")
    for (i, e), target in allocation.items():
        if not 1 <= target <= e:
            raise ValueError(f"member {e} of set {i} cannot map to {target}")
    if set(allocation.values()) != set(range(1, inst.n + 1)):
        raise ValueError("allocation is not onto the universe")


@dataclass
class _IscLayout:
    T: Tree
    P: Tree
    t: int
    t_leaves: list[int]
    roots: list[int]
    root_leaves: list[list[int]]
    elem_stars: list[dict[int, tuple[int, list[int]]]]
    big_stars: list[tuple[int, list[int]]]
    p: int
    p_leaves: list[int]
    r_stars: list[tuple[int, list[int]]]
    x_stars: list[tuple[int, list[int]]]
    y_stars: list[tuple[int, list[int]]]


def _layout(inst: IscInstance, base: int | None = None) -> _IscLayout:
    n, m, k = inst.n, inst.m, inst.k
    if m < k:
        raise ValueError(f"need at least k={k} sets, got {m}")
    if base is None:
        base = n
    elif base != n:
        warnings.warn("scaled padding constants void the reduction's equivalence guarantee")
    hub, gadget, marker = 3 * base ** 4, base ** 3, base ** 2

    pb = TreeBuilder()
    p, p_leaves = pb.star(None, hub)
    r_stars = [pb.star(p, i) for i in range(1, n + 1)]
    x_stars = [pb.star(p, gadget) for _ in range(m - k)]
    y_stars = [pb.star(p, marker) for _ in range(k)]

    tb = TreeBuilder()
    t, t_leaves = tb.star(None, hub)
    roots, root_leaves, elem_stars, big_stars = [], [], [], []
    for s in inst.sets:
        ti, leaves = tb.star(t, gadget)
        roots.append(ti)
        root_leaves.append(leaves)
        elem_stars.append({e: tb.star(ti, e) for e in s})
        big_stars.append(tb.star(ti, marker))
    return _IscLayout(
        tb.tree(), pb.tree(), t, t_leaves, roots, root_leaves, elem_stars, big_stars,
        p, p_leaves, r_stars, x_stars, y_stars,
    )


def isc_to_trees(inst: IscInstance, base: int | None = None) -> tuple[Tree, Tree, dict[str, int]]:
    """Host ``T`` and pattern ``P`` with ``P`` a minor of ``T`` iff ``inst`` is yes.

    ``base`` replaces ``n`` in the padding sizes ``3n^4``, ``n^3``, ``n^2``;
    anything other than the default is exploratory only.
    """
    lay = _layout(inst, base)
    labels = {"T:t": lay.t, "P:p": lay.p}
    for i, ti in enumerate(lay.roots, 1):
        labels[f"T:t_{i}"] = ti
        for e, (center, _) in lay.elem_stars[i - 1].items():
            labels[f"T:t_{i}:s_{e}"] = center
        labels[f"T:t_{i}:marker"] = lay.big_stars[i - 1][0]
    for name, stars in (("r", lay.r_stars), ("x", lay.x_stars), ("y", lay.y_stars)):
        for i, (center, _) in enumerate(stars, 1):
            labels[f"P:{name}_{i}"] = center
    return lay.T, lay.P, labels


def isc_witness_embedding(
    inst: IscInstance, selection, allocation: Allocation, base: int | None = None
) -> tuple[int, ...]:
    """Embedding of the ``isc_to_trees`` host onto its pattern built from a solution."""
    check_isc_solution(inst, selection, allocation)
    lay = _layout(inst, base)
    chosen = list(selection)
    chosen += [i for i in range(inst.m) if i not in chosen][: inst.k - len(chosen)]
    g = [lay.p] * lay.T.n

    def onto(src, dst):
        (sc, sl), (dc, dl) = src, dst
        g[sc] = dc
        for a, b in itertools.zip_longest(sl, dl):
            if a is not None:
                g[a] = b if b is not None else dc

    for a, b in zip(lay.t_leaves, lay.p_leaves):
        g[a] = b
    representative = {}
    for (i, e), target in sorted(allocation.items()):
        representative.setdefault(target, (i, e))
    for target, (i, e) in representative.items():
        onto(lay.elem_stars[i][e], lay.r_stars[target - 1])
    for slot, i in enumerate(chosen):
        onto(lay.big_stars[i], lay.y_stars[slot])
    rest = [i for i in range(inst.m) if i not in chosen]
    for slot, i in enumerate(rest):
        x_center, x_leaves = lay.x_stars[slot]
        g[lay.roots[i]] = x_center
        for v in _subtree(lay, i):
            g[v] = x_center
        for a, b in zip(lay.root_leaves[i], x_leaves):
            g[a] = b
    return tuple(g)


def _subtree(lay: _IscLayout, i: int) -> list[int]:
    out = list(lay.root_leaves[i])
    for center, leaves in list(lay.elem_stars[i].values()) + [lay.big_stars[i]]:
        out.append(center)
        out.extend(leaves)
    return out
