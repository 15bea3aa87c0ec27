"""Reading and writing the line-oriented ``.tree`` format and JSON witness files.

A ``.tree`` file looks like::

    c optional comment
    p tree 3
    e 0 1
    e 1 2
    r 1

The ``r`` line is optional.  Blank lines are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path

from .tree import Tree, TreeFormatError, VertexRangeError


def read_tree_text(text: str) -> tuple[Tree, int | None]:
    """Parse ``.tree`` content into a tree and its optional root."""
    n = None
    edges = []
    root = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        tag = fields[0]
        try:
            nums = [int(x) for x in fields[2 if tag == "p" else 1:]]
        except ValueError:
            raise TreeFormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if tag == "p":
            if n is not None:
                raise TreeFormatError(f"line {lineno}: second header")
            if len(fields) != 3 or fields[1] != "tree":
                raise TreeFormatError(f"line {lineno}: expected 'p tree <n>'")
            n = nums[0]
            if n < 1:
                raise TreeFormatError(f"line {lineno}: vertex count must be positive")
        elif tag == "e":
            if n is None:
                raise TreeFormatError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise TreeFormatError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = nums
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexRangeError(f"line {lineno}: vertex {w} out of range for n={n}")
            edges.append((u, v))
        elif tag == "r":
            if n is None:
                raise TreeFormatError(f"line {lineno}: root before header")
            if root is not None:
                raise TreeFormatError(f"line {lineno}: second root line")
            if len(fields) != 2:
                raise TreeFormatError(f"line {lineno}: expected 'r <root>'")
            root = nums[0]
            if not 0 <= root < n:
                raise VertexRangeError(f"line {lineno}: root {root} out of range for n={n}")
        else:
            raise TreeFormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise TreeFormatError("missing 'p tree <n>' header")
    return Tree(n, tuple(edges)), root


def parse_tree(text: str) -> Tree:
    return read_tree_text(text)[0]


def serialize_tree(T: Tree, root: int | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p tree {T.n}")
    lines.extend(f"e {u} {v}" for u, v in T.edges)
    if root is not None:
        lines.append(f"r {root}")
    return "\n".join(lines) + "\n"


def load_tree(path) -> tuple[Tree, int | None]:
    return read_tree_text(Path(path).read_text())


def save_tree(path, T: Tree, root: int | None = None, comment: str | None = None) -> None:
    Path(path).write_text(serialize_tree(T, root, comment))


def dump_witness(f) -> str:
    return json.dumps({"map": [int(x) for x in f]})


def parse_witness(text: str) -> tuple[int, ...]:
    data = json.loads(text)
    if not isinstance(data, dict) or not isinstance(data.get("map"), list):
        raise ValueError('witness must be a JSON object {"map": [int, ...]}')
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in data["map"]):
        raise ValueError("witness map entries must be integers")
    return tuple(data["map"])
