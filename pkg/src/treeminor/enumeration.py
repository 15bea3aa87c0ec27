"""Canonical codes and small-tree enumeration for test harnesses.

Free trees are generated from Prüfer sequences and deduplicated by an AHU
code computed at the tree's center.  Exhaustive generation visits
``n ** (n - 2)`` labeled trees, so it is capped (default ``n <= 7``); above the
cap a seeded sampling mode draws random Prüfer sequences instead and returns
the distinct isomorphism classes it happened to hit.
"""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator

from .tree import Tree, bfs_distances

EXHAUSTIVE_LIMIT = 7


def rooted_code(T: Tree, root: int, parent: int = -1) -> bytes:
    """AHU code of ``T`` hanging from ``root`` (optionally cut above ``parent``)."""
    order = []
    par = {root: parent}
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in T.adj[u]:
            if w != par[u]:
                par[w] = u
                stack.append(w)
    codes: dict[int, bytes] = {}
    for u in reversed(order):
        kids = sorted(codes.pop(w) for w in T.adj[u] if w != par[u])
        codes[u] = b"(" + b"".join(kids) + b")"
    return codes[root]


def centers(T: Tree) -> list[int]:
    degree = [T.degree(v) for v in range(T.n)]
    layer = [v for v in range(T.n) if degree[v] <= 1]
    remaining = T.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for w in T.adj[u]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def canonical_code(T: Tree) -> bytes:
    """Equal for two trees exactly when they are isomorphic."""
    return min(rooted_code(T, c) for c in centers(T))


def prufer_to_tree(seq) -> Tree:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Tree(n, tuple(edges))


def _labeled_trees(n: int) -> Iterator[Tree]:
    if n == 1:
        yield Tree(1)
    elif n == 2:
        yield Tree(2, ((0, 1),))
    else:
        for seq in itertools.product(range(n), repeat=n - 2):
            yield prufer_to_tree(seq)


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform random labeled tree."""
    if n <= 2:
        return next(_labeled_trees(n))
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)])


def enumerate_trees(
    n: int,
    *,
    sample: int | None = None,
    seed: int = 0,
    limit: int = EXHAUSTIVE_LIMIT,
) -> list[Tree]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    With ``sample`` set, draws that many random labeled trees (seeded) and
    keeps the distinct classes, which need not be all of them.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if sample is None:
        if n > limit:
            raise ValueError(f"exhaustive enumeration capped at n={limit}; pass sample=")
        source = _labeled_trees(n)
    else:
        rng = random.Random(seed)
        source = (random_tree(n, rng) for _ in range(sample))
    found: dict[bytes, Tree] = {}
    for T in source:
        found.setdefault(canonical_code(T), T)
    return [found[c] for c in sorted(found)]


def rooted_variants(T: Tree, max_depth: int | None = None) -> list[int]:
    """One root per orbit class (by rooted code), optionally depth-bounded."""
    seen = set()
    roots = []
    for r in range(T.n):
        if max_depth is not None and max(bfs_distances(T, [r])) > max_depth:
            continue
        code = rooted_code(T, r)
        if code not in seen:
            seen.add(code)
            roots.append(r)
    return roots
