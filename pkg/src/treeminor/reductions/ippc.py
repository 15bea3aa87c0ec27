"""Inclusive Poset Pair Cover: the restricted CNF-SAT encoding, brute force,
padding, order caterpillars, the pathwidth-2 tree pair, and the
completeness-direction embedding.

An instance is a finite poset with a list ``X`` of host pairs, a list ``Y`` of
pattern pairs and a list ``Z`` of pattern singletons.  A solution sends each
``y`` to its own ``x`` dominating it (possibly with the pair swapped) and each
``z`` to its own ``(x, side)`` slot with ``z <= x[side]``, using only host pairs
that no ``y`` took.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..oracle import _match
from ..tree import RootedTree, Tree
from ._build import TreeBuilder
from .cnf import CnfError, CnfFormula

Pair = tuple[int, int]
Slot = tuple[int, int]


def _check_order(n: int, le) -> None:
    for i in range(n):
        if not le(i, i):
            raise ValueError(f"order is not reflexive at element {i}")
        for j in range(n):
            if i != j and le(i, j) and le(j, i):
                raise ValueError("order is not antisymmetric")
            for k in range(n):
                if le(i, j) and le(j, k) and not le(i, k):
                    raise ValueError("order is not transitive")


def _matrix(n: int, leq) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple((i, j) in leq for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Poset:
    """A finite partial order on ``0..size-1`` given by its full relation."""

    size: int
    leq: frozenset[Pair]

    def __post_init__(self):
        object.__setattr__(self, "leq", frozenset((int(i), int(j)) for i, j in self.leq))
        if any(not (0 <= i < self.size and 0 <= j < self.size) for i, j in self.leq):
            raise ValueError("element index out of range")
        _check_order(self.size, self.le)

    @cached_property
    def _matrix(self):
        return _matrix(self.size, self.leq)

    def le(self, i: int, j: int) -> bool:
        return self._matrix[i][j]


@dataclass(frozen=True)
class IppcInstance:
    elements: tuple[str, ...]
    leq: frozenset[Pair]
    X: tuple[Pair, ...]
    Y: tuple[Pair, ...]
    Z: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "leq", frozenset((int(i), int(j)) for i, j in self.leq))
        for name in ("X", "Y"):
            object.__setattr__(self, name, tuple((int(a), int(b)) for a, b in getattr(self, name)))
        object.__setattr__(self, "Z", tuple(int(z) for z in self.Z))
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("element labels must be distinct")
        used = {e for pair in self.X + self.Y for e in pair} | set(self.Z)
        if any(not 0 <= e < n for e in used) or any(
            not (0 <= i < n and 0 <= j < n) for i, j in self.leq
        ):
            raise ValueError("element index out of range")
        if used != set(range(n)):
            raise ValueError("elements must be exactly those occurring in X, Y and Z")
        _check_order(n, self.le)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def poset(self) -> Poset:
        return Poset(self.size, self.leq)

    @cached_property
    def _matrix(self):
        return _matrix(len(self.elements), self.leq)

    def le(self, i: int, j: int) -> bool:
        return self._matrix[i][j]

    @property
    def balanced(self) -> bool:
        return 2 * len(self.X) == 2 * len(self.Y) + len(self.Z)

    def to_json(self) -> str:
        return json.dumps({
            "elements": list(self.elements),
            "leq": sorted([i, j] for i, j in self.leq),
            "X": [list(p) for p in self.X],
            "Y": [list(p) for p in self.Y],
            "Z": list(self.Z),
        })

    @classmethod
    def from_json(cls, text: str) -> "IppcInstance":
        data = json.loads(text)
        return cls(
            tuple(data["elements"]),
            frozenset(tuple(p) for p in data["leq"]),
            tuple(tuple(p) for p in data["X"]),
            tuple(tuple(p) for p in data["Y"]),
            tuple(data["Z"]),
        )


NEG_INF = None


def _triple_le(a, b) -> bool:
    return all(x is NEG_INF or (y is not NEG_INF and x <= y) for x, y in zip(a, b))


def _triple_label(t) -> str:
    return "(" + ",".join("-inf" if x is NEG_INF else str(x) for x in t) + ")"


def _occurrences(cnf: CnfFormula):
    for j, clause in enumerate(cnf.clauses, 1):
        if len(clause) > 3:
            raise CnfError(f"clause {j} has {len(clause)} literals, at most 3 allowed")
    out = []
    for i in range(1, cnf.num_vars + 1):
        pos = [j for j, c in enumerate(cnf.clauses, 1) for l in c if l == i]
        neg = [j for j, c in enumerate(cnf.clauses, 1) for l in c if l == -i]
        if len(pos) != 2 or len(neg) != 1:
            raise CnfError(
                f"variable {i} occurs {len(pos)} times positively and {len(neg)} times "
                "negatively; need exactly 2 and 1"
            )
        if pos[0] == pos[1]:
            raise CnfError(f"variable {i} occurs twice positively in clause {pos[0]}")
        out.append((pos[0], pos[1], neg[0]))
    return out


def satx_to_ippc(cnf: CnfFormula) -> IppcInstance:
    occ = _occurrences(cnf)
    X, Y, Z = [], [], []
    for i, (p1, p2, ng) in enumerate(occ, 1):
        X.append(((i, p1, -p1), (-i, p2, -p2)))
        X.append(((i, ng, -ng), (-i, NEG_INF, NEG_INF)))
        Y.append(((i, NEG_INF, NEG_INF), (-i, NEG_INF, NEG_INF)))
    for j in range(1, len(cnf.clauses) + 1):
        Z.append((NEG_INF, j, -j))
    triples: list = []
    for t in [e for pair in X + Y for e in pair] + Z:
        if t not in triples:
            triples.append(t)
    index = {t: i for i, t in enumerate(triples)}
    leq = frozenset(
        (i, j) for i, a in enumerate(triples) for j, b in enumerate(triples) if _triple_le(a, b)
    )
    return IppcInstance(
        tuple(_triple_label(t) for t in triples),
        leq,
        tuple((index[a], index[b]) for a, b in X),
        tuple((index[a], index[b]) for a, b in Y),
        tuple(index[z] for z in Z),
    )


def _pair_fits(inst: IppcInstance, y: Pair, x: Pair) -> bool:
    le = inst.le
    return (le(y[0], x[0]) and le(y[1], x[1])) or (le(y[1], x[0]) and le(y[0], x[1]))


def _fill_slots(inst: IppcInstance, taken: set[int]) -> tuple[Slot, ...] | None:
    free = [xi for xi in range(len(inst.X)) if xi not in taken]
    slots = {
        zi: [(xi, side) for xi in free for side in (1, 2) if inst.le(z, inst.X[xi][side - 1])]
        for zi, z in enumerate(inst.Z)
    }
    assignment = _match(range(len(inst.Z)), slots)
    if assignment is None:
        return None
    return tuple(assignment[zi] for zi in range(len(inst.Z)))


def ippc_solve(inst: IppcInstance, max_pairs: int = 8):
    """A solution ``(f, g)`` or None: ``f[yi]`` is an index into ``X``,
    ``g[zi]`` an ``(x index, side)`` slot with side 1 or 2."""
    if len(inst.X) > max_pairs:
        raise ValueError(f"{len(inst.X)} host pairs exceed the brute-force cap of {max_pairs}")
    f: list[int] = []

    def extend(yi):
        if yi == len(inst.Y):
            g = _fill_slots(inst, set(f))
            return None if g is None else (tuple(f), g)
        for xi in range(len(inst.X)):
            if xi not in f and _pair_fits(inst, inst.Y[yi], inst.X[xi]):
                f.append(xi)
                found = extend(yi + 1)
                if found:
                    return found
                f.pop()
        return None

    return extend(0)


def ippc_brute(inst: IppcInstance, max_pairs: int = 8) -> bool:
    return ippc_solve(inst, max_pairs) is not None


def check_ippc_solution(inst: IppcInstance, f: Sequence[int], g: Sequence[Slot]) -> None:
    f = tuple(f)
    g = tuple(tuple(s) for s in g)
    if len(f) != len(inst.Y) or len(g) != len(inst.Z):
        raise ValueError("f must cover Y and g must cover Z")
    if len(set(f)) != len(f) or any(not 0 <= xi < len(inst.X) for xi in f):
        raise ValueError("f is not an injection into X")
    if len(set(g)) != len(g) or any(
        not 0 <= xi < len(inst.X) or side not in (1, 2) for xi, side in g
    ):
        raise ValueError("g is not an injection into X x {1, 2}")
    if set(f) & {xi for xi, _ in g}:
        raise ValueError("f and g share a host pair")
    for yi, xi in enumerate(f):
        if not _pair_fits(inst, inst.Y[yi], inst.X[xi]):
            raise ValueError(f"pattern pair {yi} is not dominated by host pair {xi}")
    for zi, (xi, side) in enumerate(g):
        if not inst.le(inst.Z[zi], inst.X[xi][side - 1]):
            raise ValueError(f"singleton {zi} is not below side {side} of host pair {xi}")


def ippc_pad(inst: IppcInstance) -> IppcInstance:
    """Append fresh minimum elements to ``Z`` until ``2|X| = 2|Y| + |Z|``."""
    deficit = 2 * len(inst.X) - 2 * len(inst.Y) - len(inst.Z)
    if deficit < 0:
        warnings.warn("2|X| < 2|Y| + |Z|: instance left unpadded")
        return inst
    elements = list(inst.elements)
    leq = set(inst.leq)
    Z = list(inst.Z)
    serial = 0
    for _ in range(deficit):
        serial += 1
        while f"pad_{serial}" in elements:
            serial += 1
        w = len(elements)
        leq |= {(w, j) for j in range(w)} | {(w, w)}
        elements.append(f"pad_{serial}")
        Z.append(w)
    return IppcInstance(tuple(elements), frozenset(leq), inst.X, inst.Y, tuple(Z))


def pad_solution(padded: IppcInstance, f: Sequence[int], g: Sequence[Slot]) -> tuple[tuple[int, ...], tuple[Slot, ...]]:
    """Extend a solution of the unpadded instance to the padded one by giving
    each padding singleton any free slot."""
    g = [tuple(s) for s in g]
    used = set(g)
    taken = set(f) | {xi for xi, _ in g}
    free = [(xi, side) for xi in range(len(padded.X)) if xi not in taken for side in (1, 2)]
    free += [s for s in ((xi, 3 - side) for xi, side in g) if s not in used]
    for _ in range(len(padded.Z) - len(g)):
        if not free:
            raise ValueError("no free slot left for a padding element")
        slot = free.pop(0)
        g.append(slot)
    return tuple(f), tuple(g)


def _ocat(builder: TreeBuilder, inst: Poset | IppcInstance, a: int, attach: int | None) -> list[int]:
    """Add OCat(a) hanging from ``attach``; ids listed spine first, then leaves by element."""
    n = inst.size
    spine = [builder.add(attach)]
    for _ in range(n + 1):
        spine.append(builder.add(spine[-1]))
    leaves = [builder.add(spine[i]) for i in range(n) if inst.le(i, a)]
    return spine + leaves


def order_caterpillar(inst: Poset | IppcInstance, a: int) -> tuple[RootedTree, list[int], dict[int, int]]:
    """OCat(a) rooted at ``v_0``, with spine ids ``v_0..v_{n+1}`` and the leaf id per element."""
    if not 0 <= a < inst.size:
        raise ValueError(f"element {a} out of range")
    b = TreeBuilder()
    ids = _ocat(b, inst, a, None)
    n = inst.size
    spine = ids[: n + 2]
    leaves = dict(zip((i for i in range(n) if inst.le(i, a)), ids[n + 2:]))
    return RootedTree(b.tree(), spine[0]), spine, leaves


def natural_embedding(inst: Poset | IppcInstance, a: int, b: int) -> tuple[int, ...] | None:
    """The spine-preserving map OCat(b) -> OCat(a), present when every leaf
    slot of OCat(a) is also filled in OCat(b)."""
    n = inst.size
    down_a = [i for i in range(n) if inst.le(i, a)]
    down_b = [i for i in range(n) if inst.le(i, b)]
    if not set(down_a) <= set(down_b):
        return None
    leaf_a = {i: n + 2 + k for k, i in enumerate(down_a)}
    return tuple(range(n + 2)) + tuple(leaf_a.get(i, i) for i in down_b)


@dataclass
class _IppcLayout:
    T: Tree
    P: Tree
    r_T: int
    r_x: list[int]
    host_sides: list[tuple[list[int], list[int]]]
    r_P: int
    r_y: list[int]
    pattern_sides: list[tuple[list[int], list[int]]]
    singles: list[list[int]]


def _layout(inst: IppcInstance) -> _IppcLayout:
    if not (inst.X and inst.Y and inst.Z):
        raise ValueError("X, Y and Z must all be nonempty")
    if not inst.balanced:
        raise ValueError("instance is not balanced (2|X| = 2|Y| + |Z|); pad it first")
    tb = TreeBuilder()
    r_T = tb.add()
    r_x, host_sides = [], []
    for a, b in inst.X:
        r = tb.add(r_T)
        r_x.append(r)
        host_sides.append((_ocat(tb, inst, a, r), _ocat(tb, inst, b, r)))
    pb = TreeBuilder()
    r_P = pb.add()
    r_y, pattern_sides = [], []
    for a, b in inst.Y:
        r = pb.add(r_P)
        r_y.append(r)
        pattern_sides.append((_ocat(pb, inst, a, r), _ocat(pb, inst, b, r)))
    singles = [_ocat(pb, inst, z, r_P) for z in inst.Z]
    return _IppcLayout(tb.tree(), pb.tree(), r_T, r_x, host_sides, r_P, r_y, pattern_sides, singles)


def _ocat_labels(prefix: str, ids: list[int], inst: IppcInstance, a: int) -> dict[str, int]:
    n = inst.size
    out = {f"{prefix}:v_{i}": v for i, v in enumerate(ids[: n + 2])}
    down = [i for i in range(n) if inst.le(i, a)]
    out.update({f"{prefix}:l_{i}": v for i, v in zip(down, ids[n + 2:])})
    return out


def ippc_to_trees(inst: IppcInstance, pad: bool = True) -> tuple[Tree, Tree, dict[str, int]]:
    """Host and pattern trees of pathwidth at most 2; ``pad`` balances first."""
    padding = 0
    if pad:
        padded = ippc_pad(inst)
        padding = len(padded.Z) - len(inst.Z)
        inst = padded
    lay = _layout(inst)
    labels = {"T:r_T": lay.r_T, "P:r_P": lay.r_P, "meta:padding": padding}
    for i, ((a, b), r) in enumerate(zip(inst.X, lay.r_x), 1):
        labels[f"T:x_{i}"] = r
        labels.update(_ocat_labels(f"T:x_{i}:L", lay.host_sides[i - 1][0], inst, a))
        labels.update(_ocat_labels(f"T:x_{i}:R", lay.host_sides[i - 1][1], inst, b))
    for i, ((a, b), r) in enumerate(zip(inst.Y, lay.r_y), 1):
        labels[f"P:y_{i}"] = r
        labels.update(_ocat_labels(f"P:y_{i}:L", lay.pattern_sides[i - 1][0], inst, a))
        labels.update(_ocat_labels(f"P:y_{i}:R", lay.pattern_sides[i - 1][1], inst, b))
    for i, z in enumerate(inst.Z, 1):
        labels.update(_ocat_labels(f"P:z_{i}", lay.singles[i - 1], inst, z))
    return lay.T, lay.P, labels


def ippc_witness_embedding(inst: IppcInstance, f: Sequence[int], g: Sequence[Slot]) -> tuple[int, ...]:
    """Embedding of the ``ippc_to_trees(inst, pad=False)`` host onto its pattern
    from a solution ``(f, g)`` of the (balanced) instance."""
    check_ippc_solution(inst, f, g)
    lay = _layout(inst)
    phi = [lay.r_P] * lay.T.n

    def carry(src_ids, dst_ids, host_elem, pattern_elem):
        nat = natural_embedding(inst, pattern_elem, host_elem)
        for local, v in enumerate(src_ids):
            phi[v] = dst_ids[nat[local]]

    for yi, xi in enumerate(f):
        (x1, x2), (y1, y2) = inst.X[xi], inst.Y[yi]
        host_l, host_r = lay.host_sides[xi]
        pat_l, pat_r = lay.pattern_sides[yi]
        phi[lay.r_x[xi]] = lay.r_y[yi]
        if inst.le(y1, x1) and inst.le(y2, x2):
            carry(host_l, pat_l, x1, y1)
            carry(host_r, pat_r, x2, y2)
        else:
            carry(host_l, pat_r, x1, y2)
            carry(host_r, pat_l, x2, y1)
    for zi, (xi, side) in enumerate(g):
        carry(lay.host_sides[xi][side - 1], lay.singles[zi], inst.X[xi][side - 1], inst.Z[zi])
    return tuple(phi)
