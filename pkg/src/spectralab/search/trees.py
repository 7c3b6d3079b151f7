"""Free trees in constant amortised time via canonical level sequences.

A rooted tree is written as its preorder depth sequence.  Free trees are
enumerated as level sequences rooted at a centre, stepping from one
canonical sequence to the next in reverse lexicographic order and skipping
sequences whose root is not the canonical centre.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from ..errors import InvalidParameters
from ..graph import Graph

MAX_TREE_ORDER = 20


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted level sequence, optionally forcing the cut point ``p``."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    period = p - q
    for i in range(p, len(out)):
        out[i] = out[i - period]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root's second child: the first subtree and the rest."""
    m = len(levels)
    seen_one = False
    for i, lv in enumerate(levels):
        if lv == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    first = [lv - 1 for lv in levels[1:m]]
    rest = [0] + levels[m:]
    return first, rest


def _canonical_or_next(levels: list[int]) -> list[int] | None:
    """Return ``levels`` if its root is the canonical centre, else the next candidate."""
    first, rest = _split(levels)
    h1, h2 = max(first), max(rest)
    ok = h2 >= h1
    if ok and h2 == h1:
        if len(first) > len(rest) or (len(first) == len(rest) and first > rest):
            ok = False
    if ok:
        return levels
    p = len(first)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        height = max(_split(nxt)[0])
        tail = list(range(1, height + 2))
        nxt[-len(tail):] = tail
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Level sequences of every free tree on ``n`` vertices, one per class."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise InvalidParameters(f"tree enumeration supports 1 <= n <= {MAX_TREE_ORDER}")
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    levels = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _canonical_or_next(levels)
        if levels is None:
            return
        yield levels
        levels = _next_rooted(levels)


def parents(levels: list[int]) -> list[int]:
    """Parent of each vertex in preorder (the root's parent is -1)."""
    stack: list[int] = []
    out = []
    for v, lv in enumerate(levels):
        del stack[lv:]
        out.append(stack[-1] if stack else -1)
        stack.append(v)
    return out


def tree_from_levels(levels: list[int]) -> Graph:
    par = parents(levels)
    return Graph.from_edges(len(levels), [(p, v) for v, p in enumerate(par) if p >= 0])


def free_trees(n: int) -> Iterator[Graph]:
    for levels in level_sequences(n):
        yield tree_from_levels(levels)


def tree_adjacency_stack(parent_rows: np.ndarray) -> np.ndarray:
    """``(B, n, n)`` adjacency matrices from a ``(B, n)`` parent array."""
    b, n = parent_rows.shape
    a = np.zeros((b, n, n))
    idx = np.arange(b)[:, None]
    child = np.broadcast_to(np.arange(1, n), (b, n - 1))
    par = parent_rows[:, 1:]
    a[idx, child, par] = 1.0
    a[idx, par, child] = 1.0
    return a


# OEIS A000055
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955, 823065]
