"""Polynomial-time containment tests for the tractable regimes.

``cat_in_tree`` decides whether a caterpillar is a minor of an arbitrary tree;
``lob_in_lob`` does the same when both trees are lobsters, using
``embed_full`` to solve the rooted depth-2 subproblem on each contracted
backbone segment.  Both guess the host path that carries the pattern's
backbone by trying every ordered endpoint pair, then cut it greedily from the
left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .enumeration import rooted_code
from .tree import (
    RootedTree,
    Tree,
    TreePath,
    backbone_of,
    bfs_distances,
    components_minus_edges,
    contract,
    induced_subtree,
    is_backbone,
    is_caterpillar,
    is_lobster,
    path_between,
)

LOBSTER_BACKBONE_K = 2


class StructuralAssertionError(AssertionError):
    """A case the lobster case analysis rules out was reached anyway."""


@dataclass(frozen=True)
class MatchInput:
    """Demands ``X`` (one per non-leaf pattern child), supplies ``Xp`` (leaf
    counts of host branches), and the two loose-leaf counts."""

    X: tuple[int, ...]
    Xp: tuple[int, ...]
    a: int = 0
    ap: int = 0

    def __post_init__(self):
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "Xp", tuple(self.Xp))
        if list(self.X) != sorted(self.X) or list(self.Xp) != sorted(self.Xp):
            raise ValueError("X and Xp must be sorted ascending")
        if self.a < 0 or self.ap < 0 or any(x < 0 for x in self.Xp) or any(x < 0 for x in self.X):
            raise ValueError("counts must be nonnegative")


def greedy_leftover(inp: MatchInput) -> int | None:
    """Supply left unmatched after the greedy scan, or None if it gets stuck."""
    K = sum(inp.Xp)
    h = -1
    for x in inp.X:
        for j in range(h + 1, len(inp.Xp)):
            if x <= inp.Xp[j]:
                break
        else:
            return None
        K -= inp.Xp[j]
        h = j
    return K


def match_greedy(inp: MatchInput) -> bool:
    K = greedy_leftover(inp)
    return K is not None and inp.a <= K + inp.ap


def _depth_from(P: Tree, r: int) -> int:
    return max(bfs_distances(P, [r]))


def _leaves_beyond(T: Tree, v: int, blocked: set[int]) -> int:
    """Leaves other than ``v`` in the component of ``T - blocked`` holding ``v``."""
    seen = {v}
    stack = [v]
    count = 0
    while stack:
        u = stack.pop()
        for w in T.adj[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
                if T.degree(w) <= 1:
                    count += 1
    return count


def _pattern_demands(P: Tree, r_p: int) -> tuple[tuple[int, ...], int]:
    X = []
    a = 0
    for v in P.adj[r_p]:
        if P.degree(v) == 1:
            a += 1
        else:
            X.append(P.degree(v) - 1)
    return tuple(sorted(X)), a


def embed_partial(T: RootedTree, C: Sequence[int], P: RootedTree) -> bool:
    """Rooted depth-2 embedding when the host root lies on backbone ``C``."""
    Tt, r_t = T.tree, T.root
    Pt, r_p = P.tree, P.root
    C = tuple(C)
    if r_t not in C:
        raise ValueError("backbone does not contain the host root")
    if not is_backbone(Tt, C, LOBSTER_BACKBONE_K):
        raise ValueError(f"{C} is not a backbone of the host")
    if _depth_from(Pt, r_p) > 2:
        raise ValueError("pattern has a vertex farther than 2 from its root")
    X, a = _pattern_demands(Pt, r_p)
    k = C.index(r_t)
    for y in range(k + 1):
        for z in range(k, len(C)):
            window = set(C[y:z + 1])
            supplies = []
            a_yz = 0
            for c in C[y:z + 1]:
                for v in Tt.adj[c]:
                    if v in window:
                        continue
                    if Tt.degree(v) == 1:
                        a_yz += 1
                    else:
                        supplies.append(_leaves_beyond(Tt, v, window))
            if match_greedy(MatchInput(X, tuple(sorted(supplies)), a, a_yz)):
                return True
    return False


def exists_backbone_through(T: Tree, v: int, k: int) -> TreePath | None:
    """Some ``k``-backbone of ``T`` passing through ``v``, found by trying every
    endpoint pair, longest paths first and then in lexicographic order."""
    paths = sorted(
        (path_between(T, u, w) for u in range(T.n) for w in range(u, T.n)),
        key=lambda C: (-len(C), C.vertices),
    )
    for C in paths:
        if v in C.vertices and is_backbone(T, C.vertices, k):
            return C
    return None


def embed_full(T: RootedTree, P: RootedTree) -> bool:
    """Rooted depth-2 embedding with ``f(root of T) = root of P``, host a lobster."""
    Pt, r_p = P.tree, P.root
    if _depth_from(Pt, r_p) > 2:
        raise ValueError("pattern has a vertex farther than 2 from its root")
    deg_rp = Pt.degree(r_p)
    nonleaf = [q for q in Pt.adj[r_p] if Pt.degree(q) > 1]
    Tt, r_t = T.tree, T.root
    while True:
        C = exists_backbone_through(Tt, r_t, LOBSTER_BACKBONE_K)
        if C is not None:
            return embed_partial(RootedTree(Tt, r_t), C.vertices, P)
        c = next(
            (c for c in Tt.adj[r_t]
             if exists_backbone_through(Tt, c, LOBSTER_BACKBONE_K) is not None),
            None,
        )
        deg_rt = Tt.degree(r_t)
        if c is not None:
            if not nonleaf and deg_rp <= deg_rt:
                return True
            if len(nonleaf) == 1:
                l = _leaves_beyond(Tt, c, {r_t})
                if deg_rp - 1 <= deg_rt - 1 and Pt.degree(nonleaf[0]) - 1 <= l:
                    return True
            merge = c
        else:
            if deg_rt != 1:
                raise StructuralAssertionError(
                    f"host root {r_t} is off every backbone with degree {deg_rt}"
                )
            if deg_rp == 1:
                q_p = Pt.adj[r_p][0]
                l = sum(1 for w in range(Tt.n) if w != r_t and Tt.degree(w) <= 1)
                if Pt.degree(q_p) - 1 <= l:
                    return True
            merge = Tt.adj[r_t][0]
        Tt, mapping = contract(Tt, {r_t, merge})
        r_t = mapping[r_t]


def _segments(T: Tree, C: Sequence[int]):
    """The components ``T_i`` of ``T - E[C]`` as vertex sets, in path order."""
    comps = components_minus_edges(T, zip(C, C[1:]))
    by_vertex = {}
    for _, mapping in comps:
        members = frozenset(mapping)
        for v in members:
            by_vertex[v] = members
    return [by_vertex[c] for c in C]


def _backbone_stars(P: Tree, B: Sequence[int]) -> list[tuple[Tree, int]]:
    """For each backbone vertex, its component of ``P - E[B]`` rooted there."""
    comps = components_minus_edges(P, zip(B, B[1:]))
    out = {}
    for sub, mapping in comps:
        for b in B:
            if b in mapping:
                out[b] = (sub, mapping[b])
    return [out[b] for b in B]


def cat_in_tree(T: Tree, P: Tree) -> bool:
    """Whether the caterpillar ``P`` is a minor of the tree ``T``."""
    if P.n < 2:
        raise ValueError("pattern must have at least two vertices")
    if not is_caterpillar(P):
        raise ValueError("pattern is not a caterpillar")
    B = backbone_of(P)
    demands = [
        sum(1 for w in range(sub.n) if w != root and sub.degree(w) <= 1)
        for sub, root in _backbone_stars(P, B.vertices)
    ]
    for u in range(T.n):
        for v in range(T.n):
            C = path_between(T, u, v).vertices
            supply = [
                sum(1 for w in seg if w != c and T.degree(w) <= 1)
                for c, seg in zip(C, _segments(T, C))
            ]
            x = 0
            for need in demands:
                total = 0
                for j in range(x, len(C)):
                    total += supply[j]
                    if need <= total:
                        break
                else:
                    break
                x = j + 1
            else:
                return True
    return False


def lob_in_lob(T: Tree, P: Tree) -> bool:
    """Whether the lobster ``P`` is a minor of the lobster ``T``."""
    if P.n < 2:
        raise ValueError("pattern must have at least two vertices")
    if not is_lobster(T) or not is_lobster(P):
        raise ValueError("both trees must be lobsters")
    B = backbone_of(P, LOBSTER_BACKBONE_K)
    parts = _backbone_stars(P, B.vertices)
    part_codes = [rooted_code(sub, root) for sub, root in parts]
    memo: dict[tuple[bytes, bytes], bool] = {}

    def fits(vertices, spine, i):
        host, mapping = induced_subtree(T, vertices)
        host, merged = contract(host, {mapping[c] for c in spine})
        root = merged[mapping[spine[0]]]
        key = (rooted_code(host, root), part_codes[i])
        if key not in memo:
            sub, r = parts[i]
            memo[key] = embed_full(RootedTree(host, root), RootedTree(sub, r))
        return memo[key]

    for u in range(T.n):
        for v in range(T.n):
            C = path_between(T, u, v).vertices
            segs = _segments(T, C)
            x = 0
            for i in range(len(parts)):
                vertices = set()
                for j in range(x, len(C)):
                    vertices |= segs[j]
                    if fits(vertices, C[x:j + 1], i):
                        break
                else:
                    break
                x = j + 1
            else:
                return True
    return False
