"""Largest eigenvalue of induced subgraphs of the hypercube on ``m`` vertices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..errors import BudgetExceeded, InvalidParameters
from ..families import hypercube

EXACT_MAX_DIM = 4
HEURISTIC_MAX_DIM = 5
_TOL = 1e-9


@dataclass(frozen=True)
class HypercubeResult:
    d: int
    m: int
    lam: float
    witness: tuple[int, ...]
    boundary: int
    exact: bool

    @property
    def boundary_bound(self) -> float:
        """``(d - lambda) m``, a lower bound on the edge boundary of the witness."""
        return (self.d - self.lam) * self.m


def edge_boundary(d: int, u) -> int:
    inside = set(u)
    return sum(1 for v in inside for i in range(d) if v ^ (1 << i) not in inside)


def _radius_batch(adj: np.ndarray, subsets: np.ndarray) -> np.ndarray:
    sub = adj[subsets[:, :, None], subsets[:, None, :]]
    return np.linalg.eigvalsh(sub)[:, -1]


def _pick(values: np.ndarray, subsets: np.ndarray) -> tuple[float, tuple[int, ...]]:
    top = float(values.max())
    ties = [tuple(int(x) for x in subsets[i]) for i in np.flatnonzero(values >= top - _TOL)]
    return top, min(ties)


def _exact(d: int, m: int) -> tuple[float, tuple[int, ...]]:
    """Exhaustive search with 0 in U and the neighbours of 0 in U an initial block of unit vectors.

    Both normalisations are free: the cube is vertex-transitive and the
    coordinate permutations fixing 0 permute its neighbours arbitrarily.
    """
    n = 1 << d
    adj = np.array(hypercube(d).adjacency_matrix())
    if m == 1:
        return 0.0, (0,)
    units = {1 << i for i in range(d)}
    allowed_units = {j: {1 << i for i in range(j)} for j in range(d + 1)}
    best_val, best_set = -1.0, ()
    batch: list[tuple[int, ...]] = []

    def flush():
        nonlocal best_val, best_set, batch
        if not batch:
            return
        arr = np.array(batch, dtype=np.int64)
        val, wit = _pick(_radius_batch(adj, arr), arr)
        if val > best_val + _TOL or (abs(val - best_val) <= _TOL and wit < best_set):
            best_val, best_set = max(val, best_val), wit
        batch = []

    for rest in combinations(range(1, n), m - 1):
        nb = units.intersection(rest)
        if nb != allowed_units[len(nb)]:
            continue
        batch.append((0,) + rest)
        if len(batch) >= 4096:
            flush()
    flush()
    return best_val, best_set


def _heuristic(d: int, m: int, restarts: int, seed: int) -> tuple[float, tuple[int, ...]]:
    """Swap-move hill climbing from a subcube-anchored start plus random starts."""
    n = 1 << d
    adj = np.array(hypercube(d).adjacency_matrix())
    rng = np.random.default_rng(seed)

    def value(s):
        idx = np.array(sorted(s))
        return float(np.linalg.eigvalsh(adj[np.ix_(idx, idx)])[-1])

    starts = [set(range(m))]
    for _ in range(restarts - 1):
        starts.append(set(int(x) for x in rng.choice(n, size=m, replace=False)))
    best_val, best_set = -1.0, ()
    for s in starts:
        cur = value(s)
        improved = True
        while improved:
            improved = False
            for out in sorted(s):
                for inn in range(n):
                    if inn in s:
                        continue
                    t = (s - {out}) | {inn}
                    v = value(t)
                    if v > cur + _TOL:
                        s, cur, improved = t, v, True
                        break
                if improved:
                    break
        wit = tuple(sorted(s))
        if cur > best_val + _TOL or (abs(cur - best_val) <= _TOL and wit < best_set):
            best_val, best_set = max(cur, best_val), wit
    return best_val, best_set


def hypercube_lambda(d: int, m: int, restarts: int = 8, seed: int = 0) -> HypercubeResult:
    """Maximum of ``lambda_1(Q_d[U])`` over ``|U| = m``: exact for ``d <= 4``, heuristic for ``d = 5``."""
    if d < 1:
        raise InvalidParameters("d must be >= 1")
    if not 1 <= m <= 1 << d:
        raise InvalidParameters(f"m must be in 1..{1 << d}")
    if d <= EXACT_MAX_DIM:
        lam, wit = _exact(d, m)
        exact = True
    elif d <= HEURISTIC_MAX_DIM:
        lam, wit = _heuristic(d, m, restarts, seed)
        exact = False
    else:
        raise BudgetExceeded(f"hypercube search for d={d}", 1 << HEURISTIC_MAX_DIM)
    return HypercubeResult(d, m, lam, wit, edge_boundary(d, wit), exact)
