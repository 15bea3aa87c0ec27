"""Unrooted trees on vertices ``0..n-1`` and the structural operations used by
the containment algorithms: distances, diameter, leaf stripping, path
eccentricity, backbones, edge-deletion components, vertex contraction and
minor-embedding verification.

All functions are pure; a :class:`Tree` never changes after construction.
Operations that produce a new tree also return an ``old -> new`` vertex map.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]
Embedding = tuple[int, ...]


class TreeError(ValueError):
    """Base class for invalid tree input."""


class TreeFormatError(TreeError):
    """A line of a ``.tree`` file could not be understood."""


class VertexRangeError(TreeError):
    """A vertex id is negative or not smaller than ``n``."""


class DuplicateEdgeError(TreeError):
    pass


class NotATreeError(TreeError):
    """The edge set has a self-loop, a cycle, or leaves the graph disconnected."""


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.n < 1:
            raise NotATreeError(f"a tree needs at least one vertex, got n={self.n}")
        seen = set()
        for u, v in self.edges:
            for w in (u, v):
                if not 0 <= w < self.n:
                    raise VertexRangeError(f"vertex {w} out of range for n={self.n}")
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdgeError(f"duplicate edge {u} {v}")
            seen.add(key)
        if len(self.edges) != self.n - 1:
            raise NotATreeError(f"expected {self.n - 1} edges, got {len(self.edges)}")
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise NotATreeError(f"edge {u} {v} closes a cycle")
            parent[ru] = rv

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def is_leaf(self, v: int) -> bool:
        return len(self.adj[v]) <= 1

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) <= 1]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int = 0

    def __post_init__(self):
        if not 0 <= self.root < self.tree.n:
            raise VertexRangeError(f"root {self.root} out of range for n={self.tree.n}")


@dataclass(frozen=True)
class TreePath:
    """An ordered vertex sequence; validity is relative to a carrier tree."""

    vertices: tuple[int, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __contains__(self, v):
        return v in self.vertices


def _check_vertex(T: Tree, *vs: int) -> None:
    for v in vs:
        if not 0 <= v < T.n:
            raise VertexRangeError(f"vertex {v} out of range for n={T.n}")


def path_tree(n: int) -> Tree:
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(leaves: int) -> Tree:
    """K_{1,leaves} with the center at vertex 0."""
    return Tree(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def spider(legs: int, length: int) -> Tree:
    """Center 0 with ``legs`` disjoint paths of ``length`` edges each."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Tree(nxt, tuple(edges))


def relabel(T: Tree, perm: Sequence[int]) -> Tree:
    """Apply the vertex permutation ``v -> perm[v]``."""
    if sorted(perm) != list(range(T.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    return Tree(T.n, tuple((perm[u], perm[v]) for u, v in T.edges))


def bfs_distances(T: Tree, sources: Iterable[int]) -> list[int]:
    """Distance from the nearest source to every vertex."""
    dist = [-1] * T.n
    queue = deque()
    for s in sources:
        _check_vertex(T, s)
        if dist[s] < 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        for w in T.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _bfs_parents(T: Tree, src: int) -> list[int]:
    parent = [-2] * T.n
    parent[src] = -1
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in T.adj[u]:
            if parent[w] == -2:
                parent[w] = u
                queue.append(w)
    return parent


def distance(T: Tree, u: int, v: int) -> int:
    _check_vertex(T, u, v)
    return bfs_distances(T, [u])[v]


def eccentricity(T: Tree, v: int) -> int:
    return max(bfs_distances(T, [v]))


def _farthest(dist: list[int]) -> int:
    best = max(dist)
    return dist.index(best)


def diameter(T: Tree) -> int:
    a = _farthest(bfs_distances(T, [0]))
    return max(bfs_distances(T, [a]))


def path_between(T: Tree, u: int, v: int) -> TreePath:
    _check_vertex(T, u, v)
    parent = _bfs_parents(T, u)
    out = [v]
    while out[-1] != u:
        out.append(parent[out[-1]])
    out.reverse()
    return TreePath(tuple(out))


def longest_path(T: Tree) -> TreePath:
    """A longest path found by double traversal (ties broken by smallest id)."""
    a = _farthest(bfs_distances(T, [0]))
    b = _farthest(bfs_distances(T, [a]))
    return path_between(T, a, b)


def induced_subtree(T: Tree, vertices: Iterable[int]) -> tuple[Tree, dict[int, int]]:
    """The subgraph induced by a connected vertex set, relabeled in id order."""
    keep = sorted(set(vertices))
    mapping = {old: new for new, old in enumerate(keep)}
    edges = tuple(
        (mapping[u], mapping[v]) for u, v in T.edges if u in mapping and v in mapping
    )
    return Tree(len(keep), edges), mapping


def strip_leaves(T: Tree) -> tuple[Tree | None, dict[int, int]]:
    """Delete every vertex of degree <= 1 at once.

    Returns ``(None, {})`` when nothing survives.
    """
    keep = [v for v in range(T.n) if T.degree(v) > 1]
    if not keep:
        return None, {}
    return induced_subtree(T, keep)


def is_path(T: Tree | None) -> bool:
    return T is None or all(T.degree(v) <= 2 for v in range(T.n))


def path_eccentricity(T: Tree) -> int:
    """Fewest rounds of leaf stripping after which a path (or nothing) remains."""
    k = 0
    cur: Tree | None = T
    while not is_path(cur):
        cur, _ = strip_leaves(cur)
        k += 1
    return k


def is_caterpillar(T: Tree) -> bool:
    return path_eccentricity(T) <= 1


def is_lobster(T: Tree) -> bool:
    return path_eccentricity(T) <= 2


def _check_path(T: Tree, C: Sequence[int]) -> None:
    if len(C) == 0:
        raise ValueError("empty path")
    _check_vertex(T, *C)
    if len(set(C)) != len(C):
        raise ValueError(f"path {tuple(C)} repeats a vertex")
    for a, b in zip(C, C[1:]):
        if not T.has_edge(a, b):
            raise ValueError(f"path {tuple(C)} uses non-edge {a} {b}")


def distance_to_path(T: Tree, C: Sequence[int]) -> int:
    return max(bfs_distances(T, C))


def is_backbone(T: Tree, C: Sequence[int], k: int) -> bool:
    _check_path(T, C)
    return distance_to_path(T, C) <= k


def backbone_of(T: Tree, k: int | None = None) -> TreePath:
    """A longest path, checked to be a backbone for ``k`` (default: pe(T))."""
    if k is None:
        k = path_eccentricity(T)
    C = longest_path(T)
    if not is_backbone(T, C.vertices, k):
        raise AssertionError(f"longest path {C.vertices} is not a {k}-backbone")
    return C


def components_minus_edges(
    T: Tree, F: Iterable[Sequence[int]]
) -> list[tuple[Tree, dict[int, int]]]:
    """Components of ``T - F``, each with its ``old -> new`` map, ordered by
    smallest member."""
    removed = set()
    for e in F:
        u, v = e
        if not T.has_edge(u, v):
            raise ValueError(f"{u} {v} is not an edge of the tree")
        removed.add(frozenset((u, v)))
    comp = [-1] * T.n
    groups: list[list[int]] = []
    for s in range(T.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(groups)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in T.adj[u]:
                if comp[w] < 0 and frozenset((u, w)) not in removed:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        groups.append(members)
    return [induced_subtree(T, g) for g in groups]


def is_connected_subset(T: Tree, U: Iterable[int]) -> bool:
    U = set(U)
    if not U:
        return False
    start = next(iter(U))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in T.adj[u]:
            if w in U and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == U


def contract(T: Tree, U: Iterable[int]) -> tuple[Tree, dict[int, int]]:
    """``T / U``: merge the connected set ``U`` into one vertex.

    New ids follow the old order; the merged vertex takes the slot of the
    smallest member of ``U``.
    """
    U = set(U)
    _check_vertex(T, *U)
    if not U:
        raise ValueError("cannot contract an empty vertex set")
    if not is_connected_subset(T, U):
        raise ValueError(f"vertex set {sorted(U)} does not induce a connected subtree")
    mapping: dict[int, int] = {}
    merged = None
    nxt = 0
    for v in range(T.n):
        if v in U:
            if merged is None:
                merged = nxt
                nxt += 1
            mapping[v] = merged
        else:
            mapping[v] = nxt
            nxt += 1
    edges = tuple(
        (mapping[u], mapping[v]) for u, v in T.edges if not (u in U and v in U)
    )
    return Tree(nxt, edges), mapping


def contract_edges(T: Tree, F: Iterable[Sequence[int]]) -> tuple[Tree, dict[int, int]]:
    """Contract every edge of ``F`` simultaneously."""
    parent = list(range(T.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in F:
        if not T.has_edge(u, v):
            raise ValueError(f"{u} {v} is not an edge of the tree")
        parent[find(u)] = find(v)
    mapping: dict[int, int] = {}
    ids: dict[int, int] = {}
    for v in range(T.n):
        r = find(v)
        if r not in ids:
            ids[r] = len(ids)
        mapping[v] = ids[r]
    edges = tuple(
        (mapping[u], mapping[v]) for u, v in T.edges if mapping[u] != mapping[v]
    )
    return Tree(len(ids), edges), mapping


def verify_embedding(T: Tree, P: Tree, f: Sequence[int]) -> bool:
    """Check that ``f: V(T) -> V(P)`` witnesses ``P`` as a minor of ``T``."""
    if len(f) != T.n:
        raise ValueError(f"map has length {len(f)}, expected {T.n}")
    if any(not 0 <= x < P.n for x in f):
        raise ValueError("map entry out of range for the pattern tree")
    preimage: list[list[int]] = [[] for _ in range(P.n)]
    for v, x in enumerate(f):
        preimage[x].append(v)
    if any(not pre for pre in preimage):
        return False
    if not all(is_connected_subset(T, pre) for pre in preimage):
        return False
    realized = {frozenset((f[u], f[v])) for u, v in T.edges if f[u] != f[v]}
    return all(frozenset(e) in realized for e in P.edges)
