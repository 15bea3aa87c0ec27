"""Exponential-time exact minor tests used as ground truth.

Three independent strategies live here:

* :func:`exact_minor` enumerates contraction sets.  For trees, ``P`` is a
  minor of ``T`` exactly when some set of ``|V(T)| - |V(P)|`` edges contracts
  ``T`` to a tree isomorphic to ``P`` (any extra vertices of a larger
  contraction can always be contracted into the copy of ``P``).
* :func:`exact_minor_rooted` searches branch-set assignments vertex by vertex
  from the prescribed root pair.
* :func:`exact_minor_dp` is a dynamic program over directed edges that places
  the children of each pattern vertex on an antichain of the host subtree.  It
  is exact for all inputs but costs ``3 ** deg(P)`` per state, so it is the
  one to use on the larger bounded-degree trees produced by the reductions.
"""

from __future__ import annotations

import itertools
from collections import deque

from .enumeration import canonical_code
from .tree import Tree, _check_vertex, contract_edges

DEFAULT_MAX_N = 16


class OracleLimitError(ValueError):
    """The input is larger than the configured oracle size cap."""


def _check_size(T: Tree, max_n: int) -> None:
    if T.n > max_n:
        raise OracleLimitError(
            f"host has {T.n} vertices, oracle cap is {max_n} (raise max_n explicitly)"
        )


def _match(left, candidates) -> dict | None:
    """Kuhn's augmenting-path matching saturating ``left``, or None."""
    owner: dict = {}

    def augment(u, seen):
        for d in candidates[u]:
            if d in seen:
                continue
            seen.add(d)
            if d not in owner or augment(owner[d], seen):
                owner[d] = u
                return True
        return False

    for u in left:
        if not augment(u, set()):
            return None
    return {u: d for d, u in owner.items()}


def subgraph_map(Tp: Tree, P: Tree) -> dict[int, int] | None:
    """An injective map ``V(P) -> V(Tp)`` carrying edges to edges, or None."""
    if P.n > Tp.n:
        return None
    memo: dict[tuple[int, int, int, int], dict | None] = {}

    def fits(p, pp, h, hp):
        key = (p, pp, h, hp)
        if key not in memo:
            pk = [c for c in P.adj[p] if c != pp]
            hk = [c for c in Tp.adj[h] if c != hp]
            if len(pk) > len(hk):
                memo[key] = None
            else:
                cand = {c: [d for d in hk if fits(c, p, d, h) is not None] for c in pk}
                memo[key] = _match(pk, cand)
        return memo[key]

    for h in range(Tp.n):
        if fits(0, -1, h, -1) is None:
            continue
        out = {}
        stack = [(0, -1, h, -1)]
        while stack:
            p, pp, g, gp = stack.pop()
            out[p] = g
            for c, d in memo[(p, pp, g, gp)].items():
                stack.append((c, p, d, g))
        return out
    return None


def subtree_subgraph(Tp: Tree, P: Tree) -> bool:
    """Whether ``P`` is isomorphic to a (not necessarily induced) subgraph of ``Tp``."""
    return subgraph_map(Tp, P) is not None


def _contraction_witness(T: Tree, P: Tree):
    d = T.n - P.n
    target = canonical_code(P)
    seen = set()
    for F in itertools.combinations(T.edges, d):
        Tc, mapping = contract_edges(T, F)
        code = canonical_code(Tc)
        if code in seen:
            continue
        seen.add(code)
        if code == target:
            return Tc, mapping
    return None


def exact_minor(T: Tree, P: Tree, max_n: int = DEFAULT_MAX_N) -> bool:
    _check_size(T, max_n)
    if P.n > T.n:
        return False
    return _contraction_witness(T, P) is not None


def find_minor_embedding(T: Tree, P: Tree, max_n: int = DEFAULT_MAX_N) -> tuple[int, ...] | None:
    """Materialize an embedding ``V(T) -> V(P)`` from a successful contraction."""
    _check_size(T, max_n)
    if P.n > T.n:
        return None
    found = _contraction_witness(T, P)
    if found is None:
        return None
    Tc, mapping = found
    iso = subgraph_map(Tc, P)
    inverse = {h: p for p, h in iso.items()}
    return tuple(inverse[mapping[v]] for v in range(T.n))


def find_rooted_embedding(
    T: Tree, root_t: int, P: Tree, root_p: int, max_n: int = DEFAULT_MAX_N
) -> tuple[int, ...] | None:
    """Search for an embedding ``f`` with ``f(root_t) = root_p``.

    Vertices are assigned in BFS order from ``root_t``.  A vertex either joins
    its parent's branch set or opens the branch set of an unused neighbor of
    the parent's image; this keeps every branch set connected, and in a tree
    the resulting quotient can only be ``P`` itself once all of ``P`` is used.
    """
    _check_size(T, max_n)
    _check_vertex(T, root_t)
    _check_vertex(P, root_p)
    if P.n > T.n:
        return None
    order = [root_t]
    parent = {root_t: -1}
    queue = deque([root_t])
    while queue:
        u = queue.popleft()
        for w in T.adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    f = [-1] * T.n
    used = [False] * P.n
    f[root_t] = root_p
    used[root_p] = True

    def search(i, n_used):
        if T.n - i < P.n - n_used:
            return False
        if i == T.n:
            return True
        w = order[i]
        a = f[parent[w]]
        f[w] = a
        if search(i + 1, n_used):
            return True
        for b in P.adj[a]:
            if not used[b]:
                used[b] = True
                f[w] = b
                if search(i + 1, n_used + 1):
                    return True
                used[b] = False
        f[w] = -1
        return False

    return tuple(f) if search(1, 1) else None


def exact_minor_rooted(
    T: Tree, root_t: int, P: Tree, root_p: int, max_n: int = DEFAULT_MAX_N
) -> bool:
    return find_rooted_embedding(T, root_t, P, root_p, max_n) is not None


class _AntichainDP:
    """``fits(t, pt, p, pp)``: the pattern subtree at ``p`` (away from ``pp``)
    embeds in the host subtree at ``t`` (away from ``pt``) with ``t`` the top
    of ``p``'s branch set."""

    def __init__(self, T: Tree, P: Tree):
        self.T = T
        self.P = P
        self._fits: dict = {}
        self._below: dict = {}
        self._place: dict = {}

    def kids_p(self, p, pp):
        return tuple(c for c in self.P.adj[p] if c != pp)

    def fits(self, t, pt, p, pp):
        key = (t, pt, p, pp)
        if key not in self._fits:
            kids = self.kids_p(p, pp)
            self._fits[key] = self.place(t, pt, p, pp, (1 << len(kids)) - 1)
        return self._fits[key]

    def below(self, t, pt, q, pq):
        """Some vertex of the host subtree at ``t`` can be the top for ``q``."""
        key = (t, pt, q, pq)
        if key not in self._below:
            self._below[key] = self.fits(t, pt, q, pq) or any(
                self.below(c, t, q, pq) for c in self.T.adj[t] if c != pt
            )
        return self._below[key]

    def place(self, t, pt, p, pp, mask):
        """The children of ``p`` selected by ``mask`` sit on an antichain
        strictly below ``t``."""
        if mask == 0:
            return True
        key = (t, pt, p, pp, mask)
        if key in self._place:
            return self._place[key]
        kids = self.kids_p(p, pp)
        reach = {0}
        for c in self.T.adj[t]:
            if c == pt:
                continue
            grown = set(reach)
            for m in reach:
                free = mask & ~m
                s = free
                while s:
                    if m | s not in grown and self._hosts(c, t, p, pp, kids, s):
                        grown.add(m | s)
                    s = (s - 1) & free
            reach = grown
            if mask in reach:
                break
        self._place[key] = mask in reach
        return self._place[key]

    def _hosts(self, c, t, p, pp, kids, s):
        if s & (s - 1) == 0:
            return self.below(c, t, kids[s.bit_length() - 1], p)
        return self.place(c, t, p, pp, s)


def exact_minor_dp(T: Tree, P: Tree) -> bool:
    if P.n > T.n:
        return False
    dp = _AntichainDP(T, P)
    return any(dp.fits(t, -1, 0, -1) for t in range(T.n))


def exact_minor_rooted_dp(T: Tree, root_t: int, P: Tree, root_p: int) -> bool:
    _check_vertex(T, root_t)
    _check_vertex(P, root_p)
    if P.n > T.n:
        return False
    return _AntichainDP(T, P).fits(root_t, -1, root_p, -1)
