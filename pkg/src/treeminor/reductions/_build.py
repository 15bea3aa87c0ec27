from __future__ import annotations

from ..tree import Tree


class TreeBuilder:
    """Grow a tree one vertex at a time, each new vertex hung from a parent."""

    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def add(self, parent: int | None = None) -> int:
        v = self.n
        self.n += 1
        if parent is not None:
            self.edges.append((parent, v))
        return v

    def star(self, parent: int | None, leaves: int) -> tuple[int, list[int]]:
        center = self.add(parent)
        return center, [self.add(center) for _ in range(leaves)]

    def tree(self) -> Tree:
        return Tree(self.n, tuple(self.edges))
