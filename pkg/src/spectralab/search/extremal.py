"""Constrained extremal problems: exhaustive scans and simulated annealing."""

from __future__ import annotations

import math
import multiprocessing as mp
import re
from dataclasses import dataclass, field
from itertools import combinations, islice
from typing import Callable, Iterable, Iterator

import numpy as np

from ..canon import canonical_graph6
from ..errors import InfeasibleSeed, InvalidParameters
from ..graph import Graph, from_graph6, is_bipartite, is_connected, is_tree
from ..invariants import clique_number, is_saturated
from ..planarity import is_planar
from ..spectra import adjacency_stack
from .sources import GraphSource, iter_graphs
from .trees import level_sequences, parents, tree_adjacency_stack, tree_from_levels

TIE_TOL = 1e-9
CHUNK = 4096


# -- objectives ------------------------------------------------------------


def _eigvals(stack: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(stack)


def _lambda1(stack):
    return _eigvals(stack)[:, -1]


def _gap(stack):
    v = _eigvals(stack)
    return v[:, -1] - v[:, -2]


def _energy(stack):
    return np.abs(_eigvals(stack)).sum(axis=1)


def _l1(stack):
    _, vecs = np.linalg.eigh(stack)
    return np.abs(vecs[:, :, -1]).sum(axis=1)


def _lambda1_minus_avg(stack):
    n = stack.shape[1]
    return _lambda1(stack) - stack.sum(axis=(1, 2)) / n


def _hl(stack):
    v = _eigvals(stack)[:, ::-1]
    n = stack.shape[1]
    h = (n + 1) // 2
    l = -(-(n + 1) // 2)
    return np.maximum(np.abs(v[:, h - 1]), np.abs(v[:, l - 1]))


def _first_plus_last(stack):
    v = _eigvals(stack)
    return v[:, -1] + v[:, 0]


def _lambda2(stack):
    return _eigvals(stack)[:, -2]


def _laplacian(stack):
    return np.einsum("bij->bi", stack)[:, :, None] * np.eye(stack.shape[1]) - stack


def _algebraic_connectivity(stack):
    return np.linalg.eigvalsh(_laplacian(stack))[:, 1]


@dataclass(frozen=True)
class Objective:
    name: str
    batch: Callable[[np.ndarray], np.ndarray]
    direction: str
    description: str
    min_order: int = 1

    def __call__(self, g: Graph) -> float:
        return float(self.batch(adjacency_stack([g]))[0])


OBJECTIVES = {
    o.name: o
    for o in (
        Objective("lambda1", _lambda1, "max", "largest adjacency eigenvalue"),
        Objective("spectral_gap", _gap, "min", "lambda_1 - lambda_2", 2),
        Objective("energy", _energy, "min", "sum of |lambda_i|"),
        Objective("l1_norm", _l1, "min", "l1 norm of the unit principal eigenvector"),
        Objective("lambda1_minus_avg_degree", _lambda1_minus_avg, "min", "lambda_1 - 2m/n"),
        Objective("hl_index", _hl, "max", "HL-index"),
        Objective("lambda1_plus_lambdan", _first_plus_last, "max", "lambda_1 + lambda_n"),
        Objective("lambda2", _lambda2, "max", "second largest adjacency eigenvalue", 2),
        Objective("algebraic_connectivity", _algebraic_connectivity, "min", "mu_{n-1}", 2),
    )
}


def get_objective(name: str) -> Objective:
    try:
        return OBJECTIVES[name]
    except KeyError:
        raise InvalidParameters(f"unknown objective {name!r}; known: {', '.join(OBJECTIVES)}") from None


# -- constraints -------------------------------------------------------------


@dataclass(frozen=True)
class Constraint:
    text: str
    test: Callable[[Graph], bool]
    cheap: bool

    def __call__(self, g: Graph) -> bool:
        return self.test(g)


def _triangle_free(g: Graph) -> bool:
    return clique_number(g) < 3


def parse_constraints(text: str | Iterable[str] | None) -> list[Constraint]:
    """``"connected,planar,maxdeg=3,kfree=4,edges=10"`` into predicates.

    Recognised terms: ``connected``, ``planar``, ``nonregular``, ``regular``,
    ``tree``, ``bipartite``, ``triangle_free``, ``maxdeg=D`` (maximum degree
    exactly ``D``), ``maxdeg<=D``, ``kfree=R`` (no ``K_R``), ``saturated=R``
    (``K_{R+1}``-saturated) and ``edges=M``.
    """
    if text is None:
        return []
    items = text.split(",") if isinstance(text, str) else list(text)
    out = []
    for raw in items:
        item = raw.strip().lower()
        if not item:
            continue
        m = re.fullmatch(r"([a-z_]+)\s*(<=|=)?\s*(\d+)?", item)
        if not m:
            raise InvalidParameters(f"bad constraint {raw!r}")
        name, op, num = m.group(1), m.group(2), m.group(3)
        val = int(num) if num is not None else None
        if (op is None) != (val is None):
            raise InvalidParameters(f"bad constraint {raw!r}")
        if name == "connected" and val is None:
            out.append(Constraint(item, is_connected, True))
        elif name == "planar" and val is None:
            out.append(Constraint(item, is_planar, False))
        elif name == "nonregular" and val is None:
            out.append(Constraint(item, lambda g: not g.is_regular(), True))
        elif name == "regular" and val is None:
            out.append(Constraint(item, lambda g: g.is_regular(), True))
        elif name == "tree" and val is None:
            out.append(Constraint(item, is_tree, True))
        elif name == "bipartite" and val is None:
            out.append(Constraint(item, lambda g: is_bipartite(g)[0], True))
        elif name == "triangle_free" and val is None:
            out.append(Constraint(item, _triangle_free, False))
        elif name == "maxdeg" and op == "=":
            out.append(Constraint(item, lambda g, d=val: g.max_degree() == d, True))
        elif name == "maxdeg" and op == "<=":
            out.append(Constraint(item, lambda g, d=val: g.max_degree() <= d, True))
        elif name == "kfree" and op == "=":
            out.append(Constraint(item, lambda g, r=val: clique_number(g) < r, False))
        elif name == "saturated" and op == "=":
            out.append(Constraint(item, lambda g, r=val: is_saturated(g, r), False))
        elif name == "edges" and op == "=":
            out.append(Constraint(item, lambda g, e=val: g.m == e, True))
        else:
            raise InvalidParameters(f"unknown constraint {raw!r}")
    return out


def satisfies(g: Graph, constraints: Iterable[Constraint]) -> bool:
    return all(c(g) for c in constraints)


# -- results -----------------------------------------------------------------


@dataclass
class ExtremalResult:
    objective: str
    direction: str
    best_value: float | None
    args: list[str]
    trace: dict = field(default_factory=dict)

    def payload(self) -> dict:
        return {
            "objective": self.objective,
            "direction": self.direction,
            "best_value": self.best_value,
            "args": self.args,
            "trace": {k: v for k, v in self.trace.items() if k != "meta"},
        }

    def to_dict(self) -> dict:
        return {**self.payload(), "meta": self.trace.get("meta", {})}


# -- exhaustive --------------------------------------------------------------


def _eval_chunk(args) -> list[tuple[float, object]]:
    kind, items, objective, cheap = args
    obj = OBJECTIVES[objective]
    checks = parse_constraints(cheap)
    out: list[tuple[float, object]] = []
    if kind == "trees":
        by_n: dict[int, list] = {}
        for lv in items:
            by_n.setdefault(len(lv), []).append(lv)
        for n, group in by_n.items():
            if n < obj.min_order:
                continue
            if checks:
                group = [lv for lv in group if satisfies(tree_from_levels(list(lv)), checks)]
                if not group:
                    continue
            par = np.array([parents(list(lv)) for lv in group], dtype=np.int64)
            vals = obj.batch(tree_adjacency_stack(par)) if n > 1 else obj.batch(np.zeros((len(group), 1, 1)))
            out.extend(zip(map(float, vals), group))
        return out
    by_n = {}
    for code in items:
        g = from_graph6(code)
        if g.n < obj.min_order or not satisfies(g, checks):
            continue
        by_n.setdefault(g.n, []).append(g)
    for n, group in by_n.items():
        vals = obj.batch(adjacency_stack(group))
        out.extend(zip(map(float, vals), (g.to_graph6() for g in group)))
    return out


def _items(source) -> tuple[str, Iterator]:
    if isinstance(source, GraphSource) and source.kind == "trees":
        seqs = (
            tuple(lv)
            for n in range(max(source.n_min, 1), source.n_max + 1)
            for lv in level_sequences(n)
        )
        return "trees", seqs
    graphs = iter_graphs(source) if isinstance(source, GraphSource) else iter(source)
    return "graphs", (g.to_graph6() for g in graphs)


def _materialise(kind: str, item) -> Graph:
    return tree_from_levels(list(item)) if kind == "trees" else from_graph6(item)


def exhaustive(
    source: GraphSource | Iterable[Graph],
    objective: str,
    direction: str | None = None,
    constraints: str | Iterable[str] | None = None,
    workers: int = 1,
    tol: float = TIE_TOL,
    chunk: int = CHUNK,
) -> ExtremalResult:
    """Exact optimum over a source, returning every optimal isomorphism class.

    The objective is computed in batches for every graph passing the cheap
    constraints; the expensive ones (planarity, clique tests) are evaluated
    lazily in order of objective value until the optimum is settled.
    """
    obj = get_objective(objective)
    direction = direction or obj.direction
    if direction not in ("max", "min"):
        raise InvalidParameters("direction must be 'max' or 'min'")
    cons = parse_constraints(constraints)
    cheap = [c.text for c in cons if c.cheap]
    lazy = [c for c in cons if not c.cheap]
    kind, items = _items(source)

    def jobs():
        it = iter(items)
        while True:
            block = list(islice(it, chunk))
            if not block:
                return
            yield kind, block, objective, cheap

    scored: list[tuple[float, object]] = []
    if workers <= 1:
        for part in map(_eval_chunk, jobs()):
            scored.extend(part)
    else:
        ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
        with ctx.Pool(workers) as pool:
            for part in pool.imap(_eval_chunk, jobs()):
                scored.extend(part)
    sign = -1.0 if direction == "max" else 1.0
    scored.sort(key=lambda t: sign * t[0])
    best = None
    winners: dict[str, float] = {}
    lazy_checks = 0
    for value, item in scored:
        if best is not None and sign * (value - best) > tol:
            break
        g = _materialise(kind, item)
        if lazy:
            lazy_checks += 1
            if not satisfies(g, lazy):
                continue
        if best is None:
            best = value
        code = canonical_graph6(g)
        winners.setdefault(code, value)
    args = sorted(winners)
    best_value = obj(from_graph6(args[0])) if args else None
    trace = {
        "method": "exhaustive",
        "evaluated": len(scored),
        "lazy_constraint_checks": lazy_checks,
        "constraints": [c.text for c in cons],
        "source": source.describe() if isinstance(source, GraphSource) else "graphs",
    }
    return ExtremalResult(objective, direction, best_value, args, trace)


# -- simulated annealing -------------------------------------------------------


def _default_seed(n: int, cons: list[Constraint]) -> Graph:
    from .. import families

    candidates = [families.path(n), families.complete(n), families.star(n)]
    if n >= 3:
        candidates.append(families.cycle(n))
    for g in candidates:
        if satisfies(g, cons):
            return g
    raise InfeasibleSeed("no default seed graph satisfies the constraints; pass one explicitly")


def _propose(g: Graph, rng: np.random.Generator) -> Graph | None:
    n = g.n
    pairs = list(combinations(range(n), 2))
    move = rng.integers(3)
    edges = [p for p in pairs if g.has_edge(*p)]
    non = [p for p in pairs if not g.has_edge(*p)]
    if move == 0 and non:
        u, v = non[rng.integers(len(non))]
        return g.with_edge(u, v)
    if move == 1 and edges:
        u, v = edges[rng.integers(len(edges))]
        return g.without_edge(u, v)
    if edges and non:
        a, b = edges[rng.integers(len(edges))]
        u, v = non[rng.integers(len(non))]
        return g.without_edge(a, b).with_edge(u, v)
    return None


def _anneal(args) -> tuple[float, str, int, int]:
    code, objective, direction, constraints, steps, t0, cooling, seed, restart = args
    obj = OBJECTIVES[objective]
    cons = parse_constraints(constraints)
    rng = np.random.default_rng([seed, restart])
    g = from_graph6(code)
    sign = 1.0 if direction == "max" else -1.0
    cur = sign * obj(g)
    best, best_g = cur, g
    temp = t0
    accepted = 0
    for _ in range(steps):
        h = _propose(g, rng)
        temp *= cooling
        if h is None or not satisfies(h, cons):
            continue
        val = sign * obj(h)
        if val >= cur or rng.random() < math.exp((val - cur) / max(temp, 1e-12)):
            g, cur = h, val
            accepted += 1
            if cur > best + TIE_TOL or (abs(cur - best) <= TIE_TOL and canonical_graph6(g) < canonical_graph6(best_g)):
                best, best_g = cur, g
    return sign * best, canonical_graph6(best_g), restart, accepted


def local_search(
    n: int,
    objective: str,
    direction: str | None = None,
    constraints: str | Iterable[str] | None = None,
    seed_graph: Graph | None = None,
    restarts: int = 32,
    steps: int = 2000,
    seed: int = 0,
    t0: float = 1.0,
    cooling: float = 0.995,
    workers: int = 1,
) -> ExtremalResult:
    """Simulated annealing over graphs of order ``n`` with edge add/remove/swap moves.

    Every restart starts from the seed graph and uses its own generator
    seeded by ``(seed, restart)``, so results do not depend on ``workers``.
    """
    obj = get_objective(objective)
    direction = direction or obj.direction
    cons = parse_constraints(constraints)
    if seed_graph is None:
        seed_graph = _default_seed(n, cons)
    elif seed_graph.n != n or not satisfies(seed_graph, cons):
        raise InfeasibleSeed("seed graph violates the constraints")
    texts = [c.text for c in cons]
    jobs = [
        (seed_graph.to_graph6(), objective, direction, texts, steps, t0, cooling, seed, r)
        for r in range(restarts)
    ]
    if workers <= 1:
        runs = list(map(_anneal, jobs))
    else:
        ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
        with ctx.Pool(workers) as pool:
            runs = pool.map(_anneal, jobs)
    sign = 1.0 if direction == "max" else -1.0
    top = max(sign * v for v, _, _, _ in runs)
    winners = sorted({code for v, code, _, _ in runs if sign * v >= top - TIE_TOL})
    trace = {
        "method": "local_search",
        "seed": seed,
        "restarts": restarts,
        "steps": steps,
        "t0": t0,
        "cooling": cooling,
        "constraints": texts,
        "per_restart": [{"restart": r, "value": v, "graph6": c, "accepted": a} for v, c, r, a in runs],
    }
    return ExtremalResult(objective, direction, obj(from_graph6(winners[0])), winners, trace)
