"""Uniform hypergraphs, shadows, and the l^r-constrained spectral radius."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import EmptyHypergraph, InvalidParameters, InvalidRotationSystem, NonConvergence, NotPlanar
from .graph import Graph
from .planarity import RotationSystem, check_rotation_system, euler_genus_ok, faces, is_planar

MAX_RANK = 4


@dataclass(frozen=True)
class UniformHypergraph:
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 2 <= self.r <= MAX_RANK:
            raise InvalidParameters(f"rank must be in 2..{MAX_RANK}")
        norm = []
        for e in self.edges:
            s = tuple(sorted(e))
            if len(s) != self.r or len(set(s)) != self.r:
                raise InvalidParameters(f"edge {e} does not have {self.r} distinct vertices")
            if s[0] < 0 or s[-1] >= self.n:
                raise InvalidParameters(f"edge {e} out of range for n={self.n}")
            norm.append(s)
        if len(set(norm)) != len(norm):
            raise InvalidParameters("duplicate hyperedge")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], r: int | None = None) -> "UniformHypergraph":
        edges = [tuple(e) for e in edges]
        if r is None:
            if not edges:
                raise InvalidParameters("cannot infer the rank of an empty hypergraph")
            r = len(edges[0])
        return cls(n, r, tuple(edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "UniformHypergraph":
        return cls(g.n, 2, tuple(g.edges()))

    def with_edge(self, e: Iterable[int]) -> "UniformHypergraph":
        return UniformHypergraph(self.n, self.r, self.edges + (tuple(e),))

    def __len__(self) -> int:
        return len(self.edges)


def shadow(h: UniformHypergraph) -> Graph:
    """The 2-shadow: all pairs covered by some hyperedge."""
    pairs = {p for e in h.edges for p in combinations(e, 2)}
    return Graph.from_edges(h.n, sorted(pairs))


@dataclass(frozen=True)
class HypergraphRadiusResult:
    radius: float
    vector: tuple[float, ...]
    iterations: int
    residual: float


def objective(h: UniformHypergraph, x) -> float:
    """``r! * sum_e prod_{i in e} x_i``."""
    x = np.asarray(x, dtype=float)
    if not h.edges:
        return 0.0
    e = np.array(h.edges)
    return math.factorial(h.r) * float(np.prod(x[e], axis=1).sum())


def _partials(e: np.ndarray, x: np.ndarray, n: int) -> np.ndarray:
    """``y_i = sum_{e ∋ i} prod_{j in e, j != i} x_j``."""
    vals = x[e]
    y = np.zeros(n)
    r = e.shape[1]
    for j in range(r):
        others = np.prod(np.delete(vals, j, axis=1), axis=1)
        y += np.bincount(e[:, j], weights=others, minlength=n)
    return y


def _iterate(e: np.ndarray, n: int, r: int, x: np.ndarray, tol: float, max_iter: int, shift: float):
    fact = math.factorial(r)
    x = x / np.sum(x**r) ** (1.0 / r)
    rho = fact * float(np.prod(x[e], axis=1).sum())
    prev_delta = None
    for it in range(1, max_iter + 1):
        y = _partials(e, x, n) + shift * x ** (r - 1)
        x = y ** (1.0 / (r - 1))
        x = x / np.sum(x**r) ** (1.0 / r)
        new = fact * float(np.prod(x[e], axis=1).sum())
        delta = abs(new - rho)
        rho = new
        if delta < tol:
            # geometric tail estimate guards against stalling on slow contraction
            if prev_delta is None or delta == 0.0:
                return rho, x, it
            q = delta / prev_delta
            if q < 1 and delta * q / (1 - q) < tol:
                return rho, x, it
        prev_delta = delta
    raise NonConvergence(f"hypergraph power iteration did not settle in {max_iter} steps")


def spectral_radius(
    h: UniformHypergraph,
    tol: float = 1e-10,
    max_iter: int = 100_000,
    starts: int = 5,
    seed: int = 0,
) -> HypergraphRadiusResult:
    """``r! max_{||x||_r = 1} sum_e prod_{i in e} x_i`` by shifted fixed-point iteration.

    Isolated vertices are dropped (their optimal weight is zero).  Several
    positive starts are run and the best fixed point kept, which matters when
    the shadow is disconnected.
    """
    if not h.edges:
        raise EmptyHypergraph("spectral radius needs at least one hyperedge")
    covered = sorted({v for e in h.edges for v in e})
    index = {v: i for i, v in enumerate(covered)}
    e = np.array([[index[v] for v in edge] for edge in h.edges], dtype=np.int64)
    n = len(covered)
    r = h.r
    rng = np.random.default_rng(seed)
    inits = [np.ones(n)] + [np.ones(n) + 0.5 * rng.random(n) for _ in range(max(starts, 1) - 1)]
    best = None
    for x0 in inits:
        rho, x, it = _iterate(e, n, r, x0, tol, max_iter, shift=1.0)
        if best is None or rho > best[0] + tol:
            best = (rho, x, it)
    rho, x, it = best
    y = _partials(e, x, n)
    residual = float(np.max(np.abs(y - rho / math.factorial(r - 1) * x ** (r - 1))))
    full = np.zeros(h.n)
    full[covered] = x
    return HypergraphRadiusResult(rho, tuple(float(v) for v in full), it, residual)


# -- planar triangulations -------------------------------------------------


def triangular_faces(g: Graph, rot: RotationSystem) -> list[tuple[int, int, int]]:
    """Vertex sets of the triangular faces of the embedding ``rot`` of ``g``."""
    if not is_planar(g):
        raise NotPlanar("graph is not planar")
    check_rotation_system(g, rot)
    if not euler_genus_ok(g, rot):
        raise InvalidRotationSystem("rotation system is not a plane embedding")
    out = []
    for walk in faces(rot):
        if len(walk) == 3 and len(set(walk)) == 3:
            out.append(tuple(sorted(walk)))
    return out


def _outer_face(rot: RotationSystem) -> tuple[int, ...] | None:
    walks = faces(rot)
    if not walks:
        return None
    # longest boundary walk, ties broken by the sorted vertex tuple
    best = min(walks, key=lambda w: (-len(w), tuple(sorted(w))))
    return tuple(sorted(best))


def from_triangulation(
    g: Graph, rot: RotationSystem, outer: Iterable[int] | None = None
) -> UniformHypergraph:
    """3-uniform hypergraph of the interior triangular faces of an embedding.

    ``outer`` names the outer face by its vertex set; by default it is the
    longest face boundary (lexicographically least on ties).
    """
    tri = triangular_faces(g, rot)
    out = tuple(sorted(outer)) if outer is not None else _outer_face(rot)
    edges = list(tri)
    if out is not None and len(out) == 3 and out in edges:
        edges.remove(out)
    return UniformHypergraph(g.n, 3, tuple(edges))


def triangulation_candidates(g: Graph, rot: RotationSystem) -> list[UniformHypergraph]:
    """One hypergraph per choice of outer face (all faces triangular or not)."""
    tri = triangular_faces(g, rot)
    outs = sorted({tuple(sorted(set(w))) for w in faces(rot)})
    seen = set()
    result = []
    for out in outs:
        edges = tuple(e for e in tri if e != out)
        if edges not in seen:
            seen.add(edges)
            result.append(UniformHypergraph(g.n, 3, edges))
    return result
