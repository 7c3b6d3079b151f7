"""Eigenvalues of graph matrices and the invariants derived from them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .errors import BudgetExceeded, InvalidParameters, NonConvergence, NotConnected
from .graph import Graph, is_connected

MatrixKind = Literal["adjacency", "laplacian", "signless_laplacian"]
KINDS = ("adjacency", "laplacian", "signless_laplacian")

TOL = 1e-9
PREDICATE_TOL = 1e-6
# eigenvalues this close to zero (but above TOL) get an exact inertia recheck
_AMBIGUOUS = 1e-6
EXACT_INERTIA_MAX_N = 12


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    kind: str = "adjacency"
    tol: float = TOL

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> float:
        return self.values[i]

    def lam(self, i: int) -> float:
        """1-indexed eigenvalue, ``lam(1)`` the largest."""
        return self.values[i - 1]

    @property
    def radius(self) -> float:
        return max(abs(self.values[0]), abs(self.values[-1])) if self.values else 0.0

    def as_array(self) -> np.ndarray:
        return np.array(self.values)


def matrix(g: Graph, kind: str = "adjacency") -> np.ndarray:
    a = g.adjacency_matrix()
    if kind == "adjacency":
        return a
    d = np.diag(a.sum(axis=1))
    if kind == "laplacian":
        return d - a
    if kind == "signless_laplacian":
        return d + a
    raise InvalidParameters(f"unknown matrix kind {kind!r}")


def _eigvals_desc(g: Graph, kind: str) -> np.ndarray:
    if g.n == 0:
        return np.zeros(0)
    vals = np.linalg.eigvalsh(matrix(g, kind))[::-1].copy()
    vals.setflags(write=False)
    return vals


def eigenvalue_array(g: Graph, kind: str = "adjacency") -> np.ndarray:
    """Eigenvalues as a read-only array, non-increasing (cached per graph)."""
    if kind not in KINDS:
        raise InvalidParameters(f"unknown matrix kind {kind!r}")
    return g.cached(("eig", kind), lambda h: _eigvals_desc(h, kind))


def eigenvalues(g: Graph, kind: str = "adjacency", tol: float = TOL) -> Spectrum:
    """All eigenvalues of the chosen matrix, sorted non-increasing.

    LAPACK's symmetric solver (Householder tridiagonalisation followed by an
    implicit-shift QR/QL sweep) is deterministic for a fixed input.
    """
    if g.n < 1:
        raise InvalidParameters("eigenvalues need n >= 1")
    vals = eigenvalue_array(g, kind)
    if not np.all(np.isfinite(vals)):
        raise NonConvergence("eigensolver returned non-finite values")
    return Spectrum(tuple(float(x) for x in vals), kind, tol)


def adjacency_stack(graphs) -> np.ndarray:
    """Adjacency matrices of equal-order graphs stacked into a ``(B, n, n)`` array."""
    rows = np.array([g.adj for g in graphs], dtype=np.int64)
    if rows.size == 0:
        return np.zeros((len(graphs), 0, 0))
    n = rows.shape[1]
    return ((rows[:, :, None] >> np.arange(n)) & 1).astype(np.float64)


def prime_eigenvalues(graphs) -> None:
    """Compute adjacency spectra in batches and store them in each graph's cache."""
    by_order: dict[int, list[Graph]] = {}
    for g in graphs:
        if g.n and ("eig", "adjacency") not in g._cache:
            by_order.setdefault(g.n, []).append(g)
    for group in by_order.values():
        vals = np.linalg.eigvalsh(adjacency_stack(group))[:, ::-1]
        for g, v in zip(group, vals):
            v = v.copy()
            v.setflags(write=False)
            g._cache[("eig", "adjacency")] = v


# -- exact characteristic polynomial --------------------------------------


def charpoly(g: Graph, kind: str = "adjacency") -> list[int]:
    """Integer coefficients ``c`` of ``det(xI - M) = sum c[k] x^k`` (Faddeev-LeVerrier)."""
    n = g.n
    a = [[int(round(x)) for x in row] for row in matrix(g, kind)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M_k = A M_{k-1} + c_{n-k+1} I
        new = [[sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            new[i][i] += c_prev
        mk = new
        tr = sum(a[i][t] * mk[t][i] for i in range(n) for t in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = q
    return coeffs


def exact_inertia(g: Graph, kind: str = "adjacency") -> tuple[int, int, int]:
    """``(n_plus, n_zero, n_minus)`` from sign changes of the characteristic polynomial.

    Symmetric matrices have real-rooted characteristic polynomials, for which
    Descartes' rule of signs is exact.
    """
    c = charpoly(g, kind)
    zero = 0
    while zero < len(c) and c[zero] == 0:
        zero += 1
    nz = [x for x in c[zero:] if x != 0]
    plus = sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))
    return plus, zero, g.n - zero - plus


# -- summaries -------------------------------------------------------------


@dataclass(frozen=True)
class SpectralSummary:
    s_plus: float
    s_minus: float
    n_plus: int
    n_zero: int
    n_minus: int
    energy: float
    hl_index: float
    spectral_gap: float
    lam: float
    exact_inertia: bool = False


def hl_index(vals) -> float:
    n = len(vals)
    h = (n + 1) // 2
    l = -(-(n + 1) // 2)
    return max(abs(vals[h - 1]), abs(vals[l - 1]))


def _classify(g: Graph, vals: np.ndarray, tol: float) -> tuple[np.ndarray, bool]:
    """Sign class (+1/0/-1) per eigenvalue, with an exact recheck near zero."""
    sign = np.where(vals > tol, 1, np.where(vals < -tol, -1, 0))
    near = np.abs(vals)
    if g.n <= EXACT_INERTIA_MAX_N and np.any((near > tol) & (near < _AMBIGUOUS)):
        p, z, mi = exact_inertia(g)
        order = np.argsort(near, kind="stable")
        sign = np.sign(vals).astype(int)
        sign[order[:z]] = 0
        if int((sign > 0).sum()) != p or int((sign < 0).sum()) != mi:
            raise NonConvergence("floating inertia disagrees with exact inertia")
        return sign, True
    return sign, False


def summary(g: Graph, tol: float = TOL) -> SpectralSummary:
    return g.cached(("summary", tol), lambda h: _summary(h, tol))


def _summary(g: Graph, tol: float) -> SpectralSummary:
    vals = eigenvalue_array(g)
    sign, exact = _classify(g, vals, tol)
    pos = vals[sign > 0]
    neg = vals[sign < 0]
    return SpectralSummary(
        s_plus=float(np.sum(pos * pos)),
        s_minus=float(np.sum(neg * neg)),
        n_plus=int(pos.size),
        n_zero=int((sign == 0).sum()),
        n_minus=int(neg.size),
        energy=float(np.sum(np.abs(vals))),
        hl_index=float(hl_index(vals)) if g.n else 0.0,
        spectral_gap=float(vals[0] - vals[1]) if g.n >= 2 else math.nan,
        lam=float(vals[0]) if g.n else 0.0,
        exact_inertia=exact,
    )


def spectral_radius(g: Graph) -> float:
    return float(eigenvalue_array(g)[0]) if g.n else 0.0


def laplacian_partial_sum(g: Graph, k: int) -> float:
    """``S_k``: sum of the ``k`` largest Laplacian eigenvalues."""
    if not 1 <= k <= g.n:
        raise InvalidParameters(f"k={k} outside 1..{g.n}")
    return float(np.sum(eigenvalue_array(g, "laplacian")[:k]))


def laplacian_partial_sums(g: Graph) -> np.ndarray:
    return np.cumsum(eigenvalue_array(g, "laplacian"))


# -- principal eigenvector -------------------------------------------------


@dataclass(frozen=True)
class PrincipalEigenvector:
    entries: tuple[float, ...]
    eigenvalue: float
    iterations: int
    residual: float

    def as_array(self) -> np.ndarray:
        return np.array(self.entries)

    @property
    def l1_norm(self) -> float:
        return float(sum(self.entries))


def principal_eigenvector(g: Graph, tol: float = 1e-10, max_iter: int = 20000) -> PrincipalEigenvector:
    """Unit positive Perron vector of a connected graph.

    Shifted power iteration on ``A + cI`` from the degree vector, where the
    shift ``c = -(lam_2 + lam_n)/2`` balances the two competing eigenvalues.
    If the spectral gap is too small for ``max_iter`` sweeps, shifted inverse
    iteration finishes the job.  Stops when ``max|Ax - lam x| <= tol``.
    """
    if not is_connected(g) or g.n == 0:
        raise NotConnected("the principal eigenvector needs a connected graph")
    return g.cached(("perron", tol), lambda h: _perron(h, tol, max_iter))


def _perron(g: Graph, tol: float, max_iter: int) -> PrincipalEigenvector:
    n = g.n
    if n == 1:
        return PrincipalEigenvector((1.0,), 0.0, 0, 0.0)
    a = g.adjacency_matrix()
    vals = eigenvalue_array(g)
    shift = -(vals[1] + vals[-1]) / 2 if n > 2 else 0.5
    x = a.sum(axis=1)
    x = x / np.linalg.norm(x)
    lam = float(x @ a @ x)
    residual = math.inf
    it = 0
    for it in range(1, max_iter + 1):
        y = a @ x + shift * x
        x = y / np.linalg.norm(y)
        ax = a @ x
        lam = float(x @ ax)
        residual = float(np.max(np.abs(ax - lam * x)))
        if residual <= tol:
            break
    else:
        sigma = vals[0] + 1e-7 * max(1.0, vals[0])
        m = a - sigma * np.eye(n)
        for extra in range(1, 51):
            x = np.linalg.solve(m, x)
            x = x / np.linalg.norm(x)
            if x.sum() < 0:
                x = -x
            ax = a @ x
            lam = float(x @ ax)
            residual = float(np.max(np.abs(ax - lam * x)))
            if residual <= tol:
                it += extra
                break
        else:
            raise NonConvergence(f"Perron vector residual {residual:.3g} after {it} iterations")
    if np.any(x <= 0):
        raise NonConvergence("Perron vector has non-positive entries")
    return PrincipalEigenvector(tuple(float(v) for v in x), lam, it, residual)


# -- hereditary density ----------------------------------------------------


@dataclass(frozen=True)
class DensityCheck:
    holds_P_tr: bool
    guiduli_bound: float
    max_excess: float
    witness: int | None


def guiduli_bound(n: int, t: int, r) -> float:
    """Upper bound on lambda for graphs with the hereditary property ``P_{t,r}``."""
    return math.sqrt(t * n) + math.sqrt(t * (t + 1) + 2 * float(r)) + (t - 1) / 2


def induced_edge_counts(g: Graph) -> np.ndarray:
    """``e[U]`` for every vertex subset ``U`` (as a bitmask index)."""
    n = g.n
    e = np.zeros(1 << n, dtype=np.int32)
    for v in range(n):
        lo = 1 << v
        below = np.arange(lo, dtype=np.int64)
        nb = g.adj[v] & (lo - 1)
        e[lo : 2 * lo] = e[:lo] + np.bitwise_count(below & nb)
    return e


def hereditary_density_bound(g: Graph, t: int, r, max_n: int = 24) -> DensityCheck:
    """Check ``e(H) <= t|V(H)| + r`` for all induced ``H`` with ``|V(H)| >= t``."""
    if t < 1:
        raise InvalidParameters("t must be a positive integer")
    r = Fraction(r)
    if r < -Fraction(t * (t + 1), 2):
        raise InvalidParameters("r must be at least -C(t+1, 2)")
    if g.n > max_n:
        raise BudgetExceeded("hereditary density check", 1 << max_n)
    e = induced_edge_counts(g)
    size = np.bitwise_count(np.arange(1 << g.n, dtype=np.int64))
    excess = e.astype(np.float64) - t * size.astype(np.float64)
    excess[size < t] = -np.inf
    worst = int(np.argmax(excess))
    max_excess = float(excess[worst])
    holds = max_excess <= float(r)
    return DensityCheck(holds, guiduli_bound(g.n, t, r), max_excess, None if holds else worst)
