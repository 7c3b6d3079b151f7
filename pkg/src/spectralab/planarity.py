"""Planarity decision and rotation systems.

The decision is delegated to networkx's left-right planarity test; the
library's own Kuratowski oracle in the test suite anchors its correctness.
"""

from __future__ import annotations

import networkx as nx

from .errors import InvalidRotationSystem, MalformedInput, NotPlanar
from .graph import Graph

RotationSystem = dict[int, list[int]]


def is_planar(g: Graph) -> bool:
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return g.cached("planar", lambda h: nx.check_planarity(h.to_networkx())[0])


def rotation_system(g: Graph) -> RotationSystem:
    """A clockwise rotation system of some planar embedding of ``g``."""
    ok, emb = nx.check_planarity(g.to_networkx())
    if not ok:
        raise NotPlanar(f"graph with n={g.n}, m={g.m} is not planar")
    return {v: list(emb.neighbors_cw_order(v)) for v in range(g.n)}


def check_rotation_system(g: Graph, rot: RotationSystem) -> None:
    """Raise unless ``rot`` lists each vertex's neighbours exactly once."""
    for v in range(g.n):
        order = rot.get(v, [])
        if sorted(order) != g.neighbors(v):
            raise InvalidRotationSystem(f"rotation at {v} does not match its neighbourhood")


def faces(rot: RotationSystem) -> list[list[int]]:
    """Face boundary walks of the embedding given by a rotation system.

    Each dart ``(u, v)`` is followed by ``(v, w)`` where ``w`` follows ``u`` in
    the clockwise rotation at ``v``.
    """
    pos = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rot.items()}
    seen = set()
    out = []
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                nbrs = rot[b]
                w = nbrs[(pos[b][a] + 1) % len(nbrs)]
                a, b = b, w
            out.append(walk)
    return out


def euler_genus_ok(g: Graph, rot: RotationSystem) -> bool:
    """True iff ``rot`` describes a plane embedding (V - E + F = 1 + components)."""
    from .graph import count_components

    nonisolated = [v for v in range(g.n) if g.degree(v)]
    if not nonisolated:
        return True
    f = len(faces(rot))
    c = count_components(g.induced(nonisolated))
    return len(nonisolated) - g.m + f == 1 + c


def format_rotation_system(rot: RotationSystem) -> str:
    return "".join(f"{v}: {' '.join(map(str, rot[v]))}\n" for v in sorted(rot))


def parse_rotation_system(text: str) -> RotationSystem:
    rot: RotationSystem = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise MalformedInput(f"line {lineno}: expected 'v: a b c ...'")
        try:
            v = int(head)
            rot[v] = [int(x) for x in tail.split()]
        except ValueError:
            raise MalformedInput(f"line {lineno}: vertex labels must be integers") from None
    return rot
