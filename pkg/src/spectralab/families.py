"""Named graph families and the ``family(param,...)`` text grammar.

Labelling conventions (fixed so reports are reproducible):

* clique blocks come first, then independent/path blocks;
* ``split(n,k)``: clique ``0..k-1``, independent set ``k..n-1``;
  ``splitplus`` adds the edge ``{k, k+1}``;
* ``doublekite(r,s)``: cliques ``0..r-1`` and ``r..2r-1``, internal path
  vertices ``2r..2r+s-1`` running from vertex ``0`` to vertex ``r``;
* ``doublecomet(k,l)``: path ``0..l-1``, then ``k`` leaves on ``0``, then
  ``k`` leaves on ``l-1``;
* ``kite(r,s)`` (``P_r . K_s``): clique ``0..s-1``, path leaving from
  vertex ``s-1`` through ``s..s+r-2``;
* ``gkrs(k,r,d1,...,ds)``: clique ``0..k-1``, the ``r`` fully joined
  vertices, then ``s`` vertices with ``N(v_i) = {0..d_i-1}``;
* ``k2path(n)`` is ``K_2 v P_{n-2}`` (``0,1`` the ``K_2``), ``fan(n)`` is
  ``K_1 v P_{n-1}``; ``hypercube(d)`` labels vertices by their bit strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParameters, MalformedInput
from .graph import Graph, join


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.tag}({','.join(map(str, self.params))})"


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameters(msg)


def complete(n: int) -> Graph:
    _need(n >= 1, "complete(n) needs n >= 1")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty(n) needs n >= 1")
    return Graph.empty(n)


def path(n: int) -> Graph:
    _need(n >= 1, "path(n) needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle(n) needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre ``0``."""
    _need(n >= 1, "star(n) needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "part sizes must be >= 1")
    label = []
    for i, p in enumerate(parts):
        label.extend([i] * p)
    n = len(label)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def turan(n: int, k: int) -> Graph:
    _need(1 <= k <= n, "turan(n,k) needs 1 <= k <= n")
    q, r = divmod(n, k)
    return complete_multipartite(*([q + 1] * r + [q] * (k - r)))


def complete_split(n: int, k: int) -> Graph:
    """``S_{n,k}``: ``K_k`` joined to an independent set of ``n-k`` vertices."""
    _need(0 <= k <= n and n >= 1, "split(n,k) needs 0 <= k <= n")
    edges = [(u, v) for u, v in combinations(range(k), 2)]
    edges += [(u, v) for u in range(k) for v in range(k, n)]
    return Graph.from_edges(n, edges)


def complete_split_plus(n: int, k: int) -> Graph:
    """``S+_{n,k}``: ``S_{n,k}`` plus one edge inside the independent set."""
    _need(n - k >= 2, "splitplus(n,k) needs n - k >= 2")
    return complete_split(n, k).with_edge(k, k + 1)


def double_kite(r: int, s: int) -> Graph:
    """``DK(r,s)``: two ``K_r`` linked through a path with ``s`` internal vertices."""
    _need(r >= 1 and s >= 0, "doublekite(r,s) needs r >= 1, s >= 0")
    n = 2 * r + s
    edges = [(u, v) for u, v in combinations(range(r), 2)]
    edges += [(r + u, r + v) for u, v in combinations(range(r), 2)]
    chain = [0] + list(range(2 * r, 2 * r + s)) + [r]
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def double_comet(k: int, l: int) -> Graph:
    """``C(k,l)``: path ``P_l`` with ``k`` pendant vertices at each end."""
    _need(k >= 1 and l >= 2, "doublecomet(k,l) needs k >= 1, l >= 2")
    n = l + 2 * k
    edges = [(i, i + 1) for i in range(l - 1)]
    edges += [(0, l + i) for i in range(k)]
    edges += [(l - 1, l + k + i) for i in range(k)]
    return Graph.from_edges(n, edges)


def kite(r: int, s: int) -> Graph:
    """``P_r . K_s``: an end of ``P_r`` identified with a vertex of ``K_s``."""
    _need(r >= 1 and s >= 1, "kite(r,s) needs r, s >= 1")
    n = r + s - 1
    edges = [(u, v) for u, v in combinations(range(s), 2)]
    chain = [s - 1] + list(range(s, n))
    edges += list(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges)


def hypercube(d: int) -> Graph:
    _need(0 <= d <= 9, "hypercube(d) needs 0 <= d <= 9")
    n = 1 << d
    return Graph.from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def gkrs(k: int, r: int, sizes: tuple[int, ...] = ()) -> Graph:
    """``G_{k,r,s}`` with nested neighbourhood sizes ``|N(v_1)| >= ... >= |N(v_s)|``."""
    _need(k >= 1 and r >= 1, "gkrs needs k >= 1, r >= 1")
    sizes = tuple(sizes)
    _need(all(0 <= d < k for d in sizes), "each |N(v_i)| must be a proper subset size < k")
    _need(all(a >= b for a, b in zip(sizes, sizes[1:])), "neighbourhood sizes must be non-increasing")
    n = k + r + len(sizes)
    edges = [(u, v) for u, v in combinations(range(k), 2)]
    edges += [(u, v) for u in range(k) for v in range(k, k + r)]
    for i, d in enumerate(sizes):
        edges += [(u, k + r + i) for u in range(d)]
    return Graph.from_edges(n, edges)


def k2_path(n: int) -> Graph:
    """``K_2 v P_{n-2}``, the conjectured planar maximiser."""
    _need(n >= 3, "k2path(n) needs n >= 3")
    return join(complete(2), path(n - 2))


def fan(n: int) -> Graph:
    """``K_1 v P_{n-1}``."""
    _need(n >= 2, "fan(n) needs n >= 2")
    return join(complete(1), path(n - 1))


def wheel(n: int) -> Graph:
    _need(n >= 4, "wheel(n) needs n >= 4")
    return join(complete(1), cycle(n - 1))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def heawood() -> Graph:
    """Incidence graph of the Fano plane: points ``0..6``, lines ``7..13``."""
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    return Graph.from_edges(14, [(p, 7 + i) for i, line in enumerate(lines) for p in line])


_BUILDERS = {
    "complete": complete,
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "star": star,
    "bipartite": complete_bipartite,
    "multipartite": complete_multipartite,
    "turan": turan,
    "split": complete_split,
    "splitplus": complete_split_plus,
    "doublekite": double_kite,
    "doublecomet": double_comet,
    "kite": kite,
    "hypercube": hypercube,
    "k2path": k2_path,
    "fan": fan,
    "wheel": wheel,
    "petersen": petersen,
    "heawood": heawood,
}

_ALIASES = {
    "k": "complete",
    "p": "path",
    "c": "cycle",
    "q": "hypercube",
    "completesplit": "split",
    "dk": "doublekite",
    "comet": "doublecomet",
    "lollipop": "kite",
}

FAMILIES = tuple(sorted(_BUILDERS) + ["gkrs"])


def generate(spec: FamilySpec | str) -> Graph:
    """Build the graph described by ``spec`` (a :class:`FamilySpec` or its text form)."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    tag = _ALIASES.get(spec.tag, spec.tag)
    if tag == "gkrs":
        _need(len(spec.params) >= 2, "gkrs(k,r,d1,...,ds) needs k and r")
        k, r, *sizes = spec.params
        return gkrs(k, r, tuple(sizes))
    try:
        builder = _BUILDERS[tag]
    except KeyError:
        raise InvalidParameters(f"unknown family {spec.tag!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return builder(*spec.params)
    except TypeError as exc:
        raise InvalidParameters(f"{spec}: {exc}") from None


_SPEC_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\((.*)\))?\s*$")


def _split_args(body: str | None) -> list[str]:
    if body is None or not body.strip():
        return []
    return [a.strip() for a in body.split(",")]


def parse_family(text: str) -> FamilySpec:
    """Parse ``name(p1,p2,...)`` into a :class:`FamilySpec`."""
    m = _SPEC_RE.match(text)
    if not m:
        raise MalformedInput(f"bad family spec {text!r}")
    try:
        params = tuple(int(a) for a in _split_args(m.group(2)))
    except ValueError:
        raise MalformedInput(f"family parameters must be integers: {text!r}") from None
    return FamilySpec(m.group(1).lower(), params)


def parse_family_sweep(text: str) -> list[FamilySpec]:
    """Expand ``name(a..b, c, ...)`` ranges into every combination of parameters."""
    m = _SPEC_RE.match(text)
    if not m:
        raise MalformedInput(f"bad family spec {text!r}")
    choices: list[list[int]] = []
    for arg in _split_args(m.group(2)):
        try:
            if ".." in arg:
                lo, hi = (int(x) for x in arg.split(".."))
                choices.append(list(range(lo, hi + 1)))
            else:
                choices.append([int(arg)])
        except ValueError:
            raise MalformedInput(f"bad family parameter {arg!r} in {text!r}") from None
    specs = [()]
    for opts in choices:
        specs = [p + (o,) for p in specs for o in opts]
    return [FamilySpec(m.group(1).lower(), p) for p in specs]
