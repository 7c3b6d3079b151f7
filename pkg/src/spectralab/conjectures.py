"""Registry of conjectured spectral inequalities, each checked on a single graph.

Every checker returns a :class:`ConjectureVerdict` whose ``slack`` is
oriented so that non-negative means the inequality holds (``slack =
RHS - LHS`` for upper bounds, ``LHS - RHS`` for lower bounds).  Structural
failures (a required cycle is missing, an equality graph outside the
predicted family) carry ``slack = -inf``.  Implications whose hypothesis
fails are reported as not applicable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable

import numpy as np

from . import families
from .canon import canonical_graph6, is_isomorphic
from .cycles import count_copies, cycle_spectrum, is_hamiltonian
from .errors import BudgetExceeded, InvalidParameters, NotConnected
from .graph import Graph, components, count_components, is_bipartite, is_complete, is_connected, is_tree, members
from .invariants import (
    chromatic_number,
    clique_number,
    independence_number,
    is_saturated,
    maximal_independent_sets,
    toughness,
)
from .planarity import is_planar
from .signed import MAX_CYCLE_RANK, min_signature_radius
from .spectra import (
    PREDICATE_TOL,
    TOL,
    eigenvalue_array,
    hereditary_density_bound,
    principal_eigenvector,
    spectral_radius,
    summary,
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "na"

EIGENVECTOR_MAX_N = 18


@dataclass(frozen=True)
class ConjectureVerdict:
    id: str
    outcome: str
    slack: float | None = None
    witness: dict | None = None
    argmin: Any = None
    reason: str | None = None
    notes: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.outcome == HOLDS

    @property
    def violated(self) -> bool:
        return self.outcome == VIOLATED

    @property
    def applicable(self) -> bool:
        return self.outcome != NOT_APPLICABLE

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "outcome": self.outcome,
            "slack": encode_float(self.slack),
            "witness": self.witness,
            "argmin": self.argmin,
            "reason": self.reason,
            "notes": list(self.notes),
        }


def encode_float(x):
    """JSON-safe float: infinities become the strings ``"inf"``/``"-inf"``."""
    if x is None:
        return None
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return x


class _NA(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass
class _Result:
    slack: float
    argmin: Any = None
    witness: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()
    structural_failure: bool = False


@dataclass(frozen=True)
class ConjectureInfo:
    id: str
    topic: str
    anchor: str
    statement: str
    applicability: str
    params: dict
    input_kind: str = "graph"
    uses: tuple[str, ...] = ()


@dataclass(frozen=True)
class _Entry:
    info: ConjectureInfo
    checker: Callable[[Graph, dict, float], _Result]


_REGISTRY: dict[str, _Entry] = {}


def _register(id_, topic, anchor, statement, applicability, params=None, uses=()):
    def deco(fn):
        info = ConjectureInfo(id_, topic, anchor, statement, applicability, dict(params or {}), "graph", tuple(uses))
        _REGISTRY[id_] = _Entry(info, fn)
        return fn

    return deco


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise _NA(reason)


def _positive_sum(g: Graph, tol: float = TOL) -> float:
    vals = eigenvalue_array(g)
    return float(vals[vals > tol].sum())


# -- sums of squares -------------------------------------------------------


@_register(
    "C01_HongExt", "sum-of-squares", r"\min\{s^+(G),s^-(G)\}\geq n-1",
    "min(s+, s-) >= n - 1", "connected graphs",
)
def _c01(g, params, tol):
    _require(g.n >= 1 and is_connected(g), "graph is not connected")
    s = summary(g)
    return _Result(min(s.s_plus, s.s_minus) - (g.n - 1))


@_register(
    "C01b_HongExtComponents", "sum-of-squares", r"\min\{s^+(G),s^-(G)\}\geq n-\kappa",
    "min(s+, s-) >= n - (number of components)", "all graphs",
)
def _c01b(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    s = summary(g)
    return _Result(min(s.s_plus, s.s_minus) - (g.n - count_components(g)))


def is_complete_regular_multipartite(g: Graph) -> bool:
    """True iff the complement is a disjoint union of equal-size cliques."""
    comp = g.complement()
    parts = components(comp)
    if len({len(p) for p in parts}) != 1:
        return False
    return all(is_complete(comp.induced(p)) for p in parts)


@_register(
    "C02_WilfExt", "sum-of-squares", r"\sqrt{s^+(G)} \leq \Big(1 - \frac{1}{\omega}\Big) n",
    "sqrt(s+) <= (1 - 1/omega) n", "all graphs",
)
def _c02(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    w = clique_number(g)
    slack = (1 - 1 / w) * g.n - math.sqrt(summary(g).s_plus)
    notes = ()
    if abs(slack) <= tol and not is_complete_regular_multipartite(g):
        notes = ("equality outside complete regular multipartite graphs",)
    return _Result(slack, notes=notes)


@_register(
    "C03_BollobasNikiforov", "sum-of-squares", r"\lambda^2_1(G)+\lambda^2_2(G)",
    "lambda_1^2 + lambda_2^2 <= 2 (1 - 1/omega) m",
    "graphs with n >= 2 other than complete graphs (whose lambda_2 is negative)",
)
def _c03(g, params, tol):
    _require(g.n >= 2, "needs two eigenvalues")
    _require(not is_complete(g), "complete graph: lambda_2 = -1 is outside the intended range")
    vals = eigenvalue_array(g)
    w = clique_number(g)
    return _Result(2 * (1 - 1 / w) * g.m - float(vals[0] ** 2 + vals[1] ** 2))


@_register(
    "C04_ELW", "sum-of-squares", r"\sum_{i=1}^{\ell} \lambda_i^2(G) \leq 2\Big(1 - \frac{1}{\omega(G)} \Big) m",
    "sum of the l largest squared eigenvalues <= 2 (1 - 1/omega) m with l = min(n+, omega)",
    "all graphs; ell_mode='n_plus' uses l = n+ instead",
    params={"ell_mode": "min"},
)
def _c04(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    mode = params.get("ell_mode", "min")
    if mode not in ("min", "n_plus"):
        raise InvalidParameters("ell_mode must be 'min' or 'n_plus'")
    w = clique_number(g)
    npl = summary(g).n_plus
    ell = npl if mode == "n_plus" else min(npl, w)
    vals = eigenvalue_array(g)
    lhs = float(np.sum(vals[:ell] ** 2))
    return _Result(2 * (1 - 1 / w) * g.m - lhs, argmin=ell)


# -- planar and cycle problems ----------------------------------------------


@lru_cache(maxsize=None)
def _k2_path_radius(n: int) -> float:
    return spectral_radius(families.k2_path(n))


@_register(
    "C05_PlanarMax", "planar", r"K_2\vee P_{n-2}",
    "lambda(G) <= lambda(K_2 v P_{n-2}) for planar G", "planar graphs with n >= 9",
)
def _c05(g, params, tol):
    _require(g.n >= 9, "needs n >= 9")
    _require(is_planar(g), "graph is not planar")
    ref = _k2_path_radius(g.n)
    slack = ref - spectral_radius(g)
    notes = ()
    if abs(slack) <= tol:
        if is_isomorphic(g, families.k2_path(g.n)):
            notes = ("equals the conjectured extremal graph",)
        else:
            notes = ("ties the conjectured extremal value but is not isomorphic to it",)
    return _Result(slack, notes=notes)


def zls_threshold(m: int, k: int) -> float:
    return (k - 1 + math.sqrt(4 * m - k * k + 1)) / 2


@_register(
    "C07_ZhaiLinShu", "cycles", r"\lambda (G) \geq \frac{k-1+\sqrt{4m-k^2+1}}{2}",
    "lambda >= (k-1+sqrt(4m-k^2+1))/2 implies cycles of every length 3..2k+2, "
    "unless G is S_{m/k+(k+1)/2, k}",
    "graphs without isolated vertices whose spectral radius reaches the threshold",
    params={"k": 2},
)
def _c07(g, params, tol):
    k = int(params.get("k", 2))
    if k < 1:
        raise InvalidParameters("k must be a positive integer")
    _require(g.m >= 1 and g.min_degree() >= 1, "graph has isolated vertices or no edges")
    _require(4 * g.m - k * k + 1 >= 0, "threshold undefined for this size")
    lam = spectral_radius(g)
    _require(lam >= zls_threshold(g.m, k) - tol, "spectral radius below the threshold")
    order = Fraction(g.m, k) + Fraction(k + 1, 2)
    if order.denominator == 1 and order == g.n and k < g.n:
        if is_isomorphic(g, families.complete_split(g.n, k)):
            return _Result(0.0, notes=("exceptional complete split graph",))
    have = cycle_spectrum(g, max_len=2 * k + 2)
    missing = [t for t in range(3, 2 * k + 3) if t not in have]
    if missing:
        return _Result(-math.inf, argmin=missing[0], witness={"missing_lengths": missing}, structural_failure=True)
    return _Result(0.0)


# -- toughness ---------------------------------------------------------------


@_register(
    "C08_HaemersToughness", "toughness", r"\mu_{n-1}/(\mu_1 - \delta)",
    "t(G) >= mu_{n-1} / (mu_1 - delta)", "connected graphs with n >= 2",
)
def _c08(g, params, tol):
    _require(g.n >= 2 and is_connected(g), "needs a connected graph with n >= 2")
    mu = eigenvalue_array(g, "laplacian")
    ratio = float(mu[g.n - 2] / (mu[0] - g.min_degree()))
    t = toughness(g)
    slack = math.inf if t == math.inf else float(t) - ratio
    return _Result(slack, witness={"toughness": str(t), "ratio": ratio})


# -- saturation --------------------------------------------------------------


@lru_cache(maxsize=None)
def _split_radius(n: int, k: int) -> float:
    return spectral_radius(families.complete_split(n, k))


@_register(
    "C14_Saturation", "saturation", r"\lambda(G) \geq \lambda (S_{n, r-1})",
    "K_{r+1}-saturated G has lambda(G) >= lambda(S_{n,r-1}), equality only for S_{n,r-1}",
    "K_{r+1}-saturated graphs; r defaults to the clique number",
    params={"r": None},
)
def _c14(g, params, tol):
    r = params.get("r")
    r = clique_number(g) if r is None else int(r)
    _require(r >= 2, "needs r >= 2")
    _require(g.n >= max(r - 1, 2), "needs n >= r - 1")
    _require(is_saturated(g, r), f"graph is not K_{r + 1}-saturated")
    ref = families.complete_split(g.n, r - 1)
    slack = spectral_radius(g) - _split_radius(g.n, r - 1)
    if abs(slack) <= tol and not is_isomorphic(g, ref):
        return _Result(
            -math.inf,
            witness={"r": r, "equality_graph": g.to_graph6()},
            notes=("inequality holds with equality, but the graph is not the complete split graph",),
            structural_failure=True,
        )
    return _Result(slack, argmin=r)


# -- Laplacian partial sums --------------------------------------------------


def _brouwer_slacks(g: Graph) -> list[float]:
    sums = np.cumsum(eigenvalue_array(g, "laplacian"))
    return [g.m + math.comb(k + 1, 2) - float(sums[k - 1]) for k in range(1, g.n + 1)]


@_register(
    "C15_Brouwer", "laplacian", r"S_k(G) \leq e(G) + \binom{k+1}{2}",
    "S_k <= e + C(k+1, 2) for every k", "all graphs",
)
def _c15(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    slacks = _brouwer_slacks(g)
    k = min(range(len(slacks)), key=lambda i: slacks[i])
    return _Result(slacks[k], argmin=k + 1)


@lru_cache(maxsize=None)
def gkrs_forms(n: int, k: int, e: int) -> frozenset[str]:
    """Canonical graph6 of every ``G_{k,r,s}`` with ``n`` vertices and ``e`` edges."""
    forms = set()
    for r in range(1, n - k + 1):
        s = n - k - r
        rest = e - math.comb(k, 2) - k * r
        if rest < 0:
            continue
        for sizes in _nonincreasing(s, k - 1, rest):
            forms.add(canonical_graph6(families.gkrs(k, r, sizes)))
    return frozenset(forms)


def _nonincreasing(length: int, top: int, total: int):
    """Nonincreasing tuples of ``length`` integers in ``0..top`` summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    if total > length * top:
        return
    for first in range(min(top, total), -1, -1):
        if first * length < total:
            break
        for tail in _nonincreasing(length - 1, first, total - first):
            yield (first,) + tail


@_register(
    "C16_FullBrouwer", "laplacian", r"G\cong G_{k,r,s}",
    "S_k <= e + C(k+1, 2) for every k, with equality only for G_{k,r,s}",
    "all graphs",
)
def _c16(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    slacks = _brouwer_slacks(g)
    form = None
    for k in range(1, g.n + 1):
        if abs(slacks[k - 1]) <= tol:
            if form is None:
                form = canonical_graph6(g)
            if k > g.n - 1 or form not in gkrs_forms(g.n, k, g.m):
                return _Result(-math.inf, argmin=k, witness={"k": k}, structural_failure=True)
    k = min(range(len(slacks)), key=lambda i: slacks[i])
    return _Result(slacks[k], argmin=k + 1)


# -- spectral gap ------------------------------------------------------------


def spectral_gap(g: Graph) -> float:
    vals = eigenvalue_array(g)
    return float(vals[0] - vals[1])


@lru_cache(maxsize=None)
def min_double_kite_gap(n: int) -> tuple[float, tuple[int, int]]:
    best = None
    for r in range(1, n // 2 + 1):
        s = n - 2 * r
        gap = spectral_gap(families.double_kite(r, s))
        if best is None or gap < best[0] - TOL:
            best = (gap, (r, s))
    return best


@lru_cache(maxsize=None)
def min_double_comet_gap(n: int) -> tuple[float, tuple[int, int]]:
    best = None
    for k in range(1, (n - 2) // 2 + 1):
        l = n - 2 * k
        gap = spectral_gap(families.double_comet(k, l))
        if best is None or gap < best[0] - TOL:
            best = (gap, (k, l))
    return best


@_register(
    "C17_SpectralGapKite", "spectral-gap", r"DK(r, s)",
    "lambda_1 - lambda_2 >= min over double kites DK(r,s) on n vertices", "connected graphs with n >= 2",
)
def _c17(g, params, tol):
    _require(g.n >= 2 and is_connected(g), "needs a connected graph with n >= 2")
    ref, arg = min_double_kite_gap(g.n)
    return _Result(spectral_gap(g) - ref, argmin=list(arg))


@_register(
    "C18_SpectralGapComet", "spectral-gap", r"C(k, \ell)",
    "lambda_1 - lambda_2 >= min over double comets C(k,l) on n vertices", "trees with n >= 4",
)
def _c18(g, params, tol):
    _require(g.n >= 4 and is_tree(g), "needs a tree with n >= 4")
    ref, arg = min_double_comet_gap(g.n)
    return _Result(spectral_gap(g) - ref, argmin=list(arg))


# -- energy ------------------------------------------------------------------


@_register(
    "C19_EnergyIndependence", "energy", r"\sum_{\lambda_i(G)>0} \lambda_i(G) \geq n - \alpha",
    "sum of positive eigenvalues >= n - alpha", "all graphs",
)
def _c19(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    return _Result(_positive_sum(g) - (g.n - independence_number(g)))


@_register(
    "C19b_EnergyInertia", "energy", r"\sum_{\lambda_i(G)>0} \lambda_i(G) \geq \max\{n^+, n^-\}",
    "sum of positive eigenvalues >= max(n+, n-)", "all graphs",
)
def _c19b(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    s = summary(g)
    return _Result(_positive_sum(g) - max(s.n_plus, s.n_minus))


@_register(
    "C20_AkbariH", "energy", r"\mathcal{E}(G) \geq \Delta + \delta",
    "nonsingular A(G) implies energy >= Delta + delta, equality only for complete graphs",
    "graphs with nonsingular adjacency matrix; forced=True evaluates singular graphs too",
    params={"forced": False},
)
def _c20(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    s = summary(g)
    forced = bool(params.get("forced", False))
    notes = ()
    if s.n_zero:
        _require(forced, "adjacency matrix is singular")
        notes = ("forced evaluation of a singular graph",)
    slack = s.energy - (g.max_degree() + g.min_degree())
    if abs(slack) <= tol and not is_complete(g):
        return _Result(-math.inf, witness={"equality_graph": g.to_graph6()}, notes=notes, structural_failure=True)
    return _Result(slack, notes=notes)


@_register(
    "C21_Brandt", "triangle-free", r"\lambda_1(G) + \lambda_n(G) \leq \frac{4}{25} n",
    "lambda_1 + lambda_n <= 4n/25", "regular triangle-free graphs",
)
def _c21(g, params, tol):
    _require(g.n >= 1 and g.is_regular(), "graph is not regular")
    _require(count_copies(g, "triangle") == 0, "graph contains a triangle")
    vals = eigenvalue_array(g)
    return _Result(4 * g.n / 25 - float(vals[0] + vals[-1]))


@_register(
    "C22_Powers", "eigenvalue-bounds", r"\lambda_i(G) \leq \left\lfloor \frac{n}{i} \right\rfloor",
    "lambda_i <= floor(n / i) for i = 3 or 4", "graphs with n >= i",
    params={"i": 3},
)
def _c22(g, params, tol):
    i = int(params.get("i", 3))
    if i not in (3, 4):
        raise InvalidParameters("i must be 3 or 4")
    _require(g.n >= i, f"needs n >= {i}")
    return _Result(g.n // i - float(eigenvalue_array(g)[i - 1]), argmin=i)


@_register(
    "C23_Mohar", "eigenvalue-bounds", r"R(G)\leq1",
    "HL-index R(G) <= 1", "planar graphs with maximum degree at most 3",
)
def _c23(g, params, tol):
    _require(g.n >= 1 and g.max_degree() <= 3, "maximum degree exceeds 3")
    _require(is_planar(g), "graph is not planar")
    return _Result(1 - summary(g).hl_index)


# -- principal eigenvector -----------------------------------------------------


def gregory_bound(n: int, k: int, form: str = "tight") -> float:
    """Right-hand side of the eigenvector bound for ``n`` vertices and ``chi = k``.

    ``form="tight"`` carries the factor 2 in the denominator that makes the
    complete split graph ``S_{n,k-1}`` an equality case; ``form="literal"``
    omits it (that version already fails on ``C_5``).
    """
    root = math.sqrt((k - 2) ** 2 + 4 * (k - 1) * (n - k + 1))
    if form == "tight":
        return 0.5 - (k - 2) / (2 * root)
    if form == "literal":
        return 0.5 - (k - 2) / root
    raise InvalidParameters("form must be 'tight' or 'literal'")


def heaviest_independent_set(g: Graph) -> tuple[float, list[int]]:
    """Maximum of ``sum x_v^2`` over independent sets (attained at a maximal one)."""
    x2 = np.array(principal_eigenvector(g).entries) ** 2
    best = (-1.0, 0)
    for mask in maximal_independent_sets(g):
        w = float(sum(x2[v] for v in members(mask)))
        if w > best[0] + 1e-15 or (abs(w - best[0]) <= 1e-15 and mask < best[1]):
            best = (w, mask)
    return best[0], members(best[1])


@_register(
    "C24_GregoryEigenvector", "eigenvector",
    r"\frac{1}{2} - \frac{k-2}{\sqrt{(k-2)^2 + 4(k-1)(n-k+1)}}",
    "sum over an independent set of x_v^2 <= 1/2 - (k-2)/(2 sqrt((k-2)^2 + 4(k-1)(n-k+1))), k = chi",
    "connected graphs with chromatic number >= 2 and n <= 18; form='literal' drops the factor 2",
    params={"form": "tight"},
)
def _c24(g, params, tol):
    _require(is_connected(g) and g.m >= 1, "needs a connected graph with an edge")
    _require(g.n <= EIGENVECTOR_MAX_N, f"n exceeds {EIGENVECTOR_MAX_N}")
    k = chromatic_number(g)
    w, s = heaviest_independent_set(g)
    return _Result(gregory_bound(g.n, k, params.get("form", "tight")) - w, argmin=s)


@_register(
    "C25_Cioaba", "eigenvector", r"\sum_{v\in S} x_v^2 \leq \frac{1}{2}",
    "sum over an independent set of x_v^2 <= 1/2, equality only for a colour class of a bipartite graph",
    "connected graphs with n <= 18",
)
def _c25(g, params, tol):
    _require(is_connected(g) and g.n >= 1, "graph is not connected")
    _require(g.n <= EIGENVECTOR_MAX_N, f"n exceeds {EIGENVECTOR_MAX_N}")
    w, s = heaviest_independent_set(g)
    slack = 0.5 - w
    if abs(slack) <= tol:
        bip, colouring = is_bipartite(g)
        if not (bip and g.n >= 2 and _is_colour_class(colouring, s)):
            return _Result(-math.inf, argmin=s, witness={"vertex_set": s}, structural_failure=True)
    return _Result(slack, argmin=s)


def _is_colour_class(colouring, s) -> bool:
    return any(sorted(v for v, c in enumerate(colouring) if c == side) == sorted(s) for side in (0, 1))


# -- hereditary density ----------------------------------------------------


@_register(
    "C26_Guiduli_Ptr", "density", r"\lambda (G) \leq \sqrt{tn} + \sqrt{t(t+1) + 2r} + \frac{t-1}{2}",
    "property P_{t,r} implies lambda <= sqrt(tn) + sqrt(t(t+1) + 2r) + (t-1)/2",
    "graphs with property P_{t,r} and n <= 24",
    params={"t": 3, "r": -6},
)
def _c26(g, params, tol):
    t = int(params.get("t", 3))
    r = params.get("r", -6)
    _require(g.n >= 1, "empty vertex set")
    try:
        check = hereditary_density_bound(g, t, r)
    except BudgetExceeded:
        raise _NA("n exceeds the hereditary density limit") from None
    _require(check.holds_P_tr, f"graph lacks property P_{{{t},{r}}}")
    return _Result(check.guiduli_bound - spectral_radius(g))


# -- signatures ----------------------------------------------------------------


def _cycle_rank_ok(g: Graph) -> bool:
    return g.m - g.n + count_components(g) <= MAX_CYCLE_RANK


@_register(
    "C27_BiluLinial", "signed", r"2\sqrt{d-1}",
    "every connected d-regular graph has a signature with spectral radius <= 2 sqrt(d-1)",
    "connected d-regular graphs with d >= 2 and cycle rank <= 24",
    uses=("signed",),
)
def _c27(g, params, tol):
    _require(g.n >= 1 and is_connected(g), "graph is not connected")
    _require(g.is_regular(), "graph is not regular")
    d = g.max_degree()
    _require(d >= 2, "needs degree >= 2")
    _require(_cycle_rank_ok(g), "too many switching classes")
    res = min_signature_radius(g)
    bound = 2 * math.sqrt(d - 1)
    lam_note = f"min largest eigenvalue {res.lambda1_min:.12g} vs bound {bound:.12g}"
    return _Result(
        bound - res.rho_min,
        witness={"signature": _fmt(res.rho_witness)},
        argmin=_fmt(res.rho_witness),
        notes=(lam_note,),
    )


def _fmt(sg) -> str:
    from .signed import format_signed

    return format_signed(sg)


@_register(
    "C28_Gregory_Signed", "signed", r"\rho(G,\sigma) < 2\sqrt{\Delta - 1}",
    "some signature has spectral radius < 2 sqrt(Delta - 1) (strict)",
    "graphs with maximum degree >= 2 and cycle rank <= 24",
    uses=("signed",),
)
def _c28(g, params, tol):
    _require(g.n >= 1, "empty vertex set")
    delta = g.max_degree()
    _require(delta >= 2, "needs maximum degree >= 2")
    _require(_cycle_rank_ok(g), "too many switching classes")
    # the radius of a disjoint union is the largest radius of its parts
    rho, parts = 0.0, []
    for comp in components(g):
        if len(comp) < 2:
            continue
        res = min_signature_radius(g.induced(comp))
        rho = max(rho, res.rho_min)
        parts.append(_fmt(res.rho_witness))
    slack = 2 * math.sqrt(delta - 1) - rho
    strict = "strict inequality satisfied" if slack > tol else "strict inequality not satisfied"
    return _Result(slack, witness={"signatures": parts}, notes=(strict,))


# -- public interface ------------------------------------------------------------


def ids() -> list[str]:
    return list(_REGISTRY)


def catalog() -> list[ConjectureInfo]:
    """Every registered conjecture with its topic tag, formula anchor and parameters."""
    return [e.info for e in _REGISTRY.values()]


list_conjectures = catalog


def resolve(id_: str) -> str:
    """Map a full id or its unique ``Cnn`` prefix to the registered id."""
    if id_ in _REGISTRY:
        return id_
    hits = [k for k in _REGISTRY if id_.lower() in (k.split("_")[0].lower(), k.lower())]
    if len(hits) == 1:
        return hits[0]
    raise InvalidParameters(f"unknown conjecture id {id_!r}; known ids: {', '.join(_REGISTRY)}")


def check(id_: str, g: Graph, params: dict | None = None, tol: float = PREDICATE_TOL) -> ConjectureVerdict:
    """Evaluate one conjecture on one graph."""
    key = resolve(id_)
    entry = _REGISTRY[key]
    merged = dict(entry.info.params)
    if params:
        unknown = set(params) - set(merged)
        if unknown:
            raise InvalidParameters(f"{key} has no parameter(s) {sorted(unknown)}")
        merged.update(params)
    try:
        res = entry.checker(g, merged, tol)
    except _NA as exc:
        return ConjectureVerdict(key, NOT_APPLICABLE, reason=exc.reason)
    except BudgetExceeded as exc:
        return ConjectureVerdict(key, NOT_APPLICABLE, reason=f"budget: {exc}")
    except NotConnected as exc:
        return ConjectureVerdict(key, NOT_APPLICABLE, reason=str(exc))
    if res.structural_failure or res.slack < -tol:
        witness = {"graph6": g.to_graph6(), **res.witness}
        return ConjectureVerdict(key, VIOLATED, res.slack, witness, res.argmin, None, res.notes)
    return ConjectureVerdict(key, HOLDS, res.slack, None, res.argmin, None, res.notes)


# -- diagnostics (no verdict) ------------------------------------------------------


@dataclass(frozen=True)
class Diagnostic:
    name: str
    values: dict


def spectral_mubayi(g: Graph) -> Diagnostic:
    """Triangle count against the threshold ``lambda >= sqrt(floor(n^2/4))``."""
    lam = spectral_radius(g)
    thr = math.sqrt(g.n * g.n // 4)
    return Diagnostic("spectral_mubayi", {
        "lambda": lam, "threshold": thr, "above": lam > thr + TOL,
        "triangles": count_copies(g, "triangle"), "floor_half_n": g.n // 2,
    })


def split_plus_threshold(g: Graph, k: int) -> Diagnostic:
    """Spectral radius against ``S^+_{n,k}`` and whether ``C_{2k+2}`` is present."""
    ref = spectral_radius(families.complete_split_plus(g.n, k))
    lam = spectral_radius(g)
    has = (2 * k + 2) in cycle_spectrum(g, max_len=2 * k + 2)
    return Diagnostic("split_plus_threshold", {"lambda": lam, "reference": ref, "above": lam > ref + TOL, "has_cycle": has})


def pseudo_random_ratio(g: Graph) -> Diagnostic:
    """``d / lambda'`` for a regular graph together with its Hamiltonicity."""
    if not g.is_regular():
        raise InvalidParameters("graph is not regular")
    vals = eigenvalue_array(g)
    second = max(abs(vals[1]), abs(vals[-1])) if g.n >= 2 else 0.0
    d = g.max_degree()
    ratio = math.inf if second <= TOL else d / second
    return Diagnostic("pseudo_random_ratio", {"d": d, "lambda_prime": float(second), "ratio": ratio, "hamiltonian": is_hamiltonian(g)})
