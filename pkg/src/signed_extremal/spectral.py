"""Dense spectra of signed graphs, equitable partitions, and closed-form polynomials.

Eigenvalues come from LAPACK's symmetric solver; convergence failures are
surfaced as SpectralError, never returned silently. Comparisons elsewhere use
1e-8 for eigenvalue-identity checks and 1e-9 for closed-form formula checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import SignedGraph

__all__ = [
    "SpectralError",
    "NotEquitableError",
    "BracketError",
    "Spectrum",
    "QuotientMatrix",
    "CharPolyId",
    "eigenvalues",
    "spectral_radius",
    "quotient_matrix",
    "quotient_spectrum_check",
    "char_poly_eval",
    "largest_root",
    "interlacing_check",
    "spectrum_to_json",
    "multiset_contains",
    "IDENTITY_TOL",
    "FORMULA_TOL",
]

IDENTITY_TOL = 1e-8   # eigenvalue multiset identity checks
FORMULA_TOL = 1e-9    # closed-form formula checks


class SpectralError(RuntimeError):
    """The eigensolver failed to converge."""


class NotEquitableError(ValueError):
    """A partition is not equitable; names the violating block pair and rows."""

    def __init__(self, block_i, block_j, rows):
        self.block_i = block_i
        self.block_j = block_j
        self.rows = tuple(rows)
        super().__init__(
            f"partition not equitable: rows {self.rows} of block {block_i} have "
            f"differing sums into block {block_j}"
        )


class BracketError(RuntimeError):
    """No sign change found when bracketing a polynomial root."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order with the spectral radius max(l1, -ln)."""

    eigenvalues: tuple[float, ...]
    rho: float
    principal_vector: tuple[float, ...] | None
    tol: float


def _symmetric_eigh(a: np.ndarray):
    try:
        return np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise SpectralError(f"symmetric eigensolver failed: {exc}") from exc


def eigenvalues(g: SignedGraph) -> Spectrum:
    """Full spectrum of the sign-adjacency matrix, deterministic for fixed input.

    The principal eigenvector is sign-normalized so its largest-magnitude entry
    is positive, ties broken by lowest index.
    """
    a = g.adj.astype(np.float64)
    w, vecs = _symmetric_eigh(a)
    w = w[::-1]
    x = vecs[:, -1].copy()
    k = int(np.argmax(np.abs(x)))
    if x[k] < 0:
        x = -x
    rho = max(float(w[0]), -float(w[-1]))
    eps = np.finfo(np.float64).eps
    tol = max(1e-12, 16.0 * g.n * eps * max(1.0, rho))
    return Spectrum(tuple(float(v) for v in w), rho, tuple(float(v) for v in x), tol)


def spectral_radius(g: SignedGraph) -> float:
    return eigenvalues(g).rho


@dataclass(frozen=True)
class QuotientMatrix:
    """Block row-sum matrix of an equitable partition, with the partition itself."""

    q: tuple[tuple[int, ...], ...]
    partition: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.q)

    def as_array(self) -> np.ndarray:
        return np.array(self.q, dtype=np.float64)

    def eigenvalues(self) -> tuple[float, ...]:
        """Descending eigenvalues, via the symmetrizing block-size similarity."""
        q = self.as_array()
        sizes = np.array([len(b) for b in self.partition], dtype=np.float64)
        d = np.sqrt(sizes)
        s = (d[:, None] / d[None, :]) * q
        s = 0.5 * (s + s.T)
        w, _ = _symmetric_eigh(s)
        return tuple(float(v) for v in w[::-1])


def quotient_matrix(g: SignedGraph, partition) -> QuotientMatrix:
    """Quotient of the sign matrix over an equitable partition.

    Equitability is verified in exact integer arithmetic on block row sums;
    violations raise NotEquitableError identifying the block pair and rows.
    """
    blocks = [tuple(sorted(int(v) for v in b)) for b in partition]
    flat = [v for b in blocks for v in b]
    if sorted(flat) != list(range(g.n)):
        raise ValueError("partition blocks must be disjoint and cover all vertices")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("partition blocks must be nonempty")
    a = g.adj.astype(np.int64)
    m = len(blocks)
    q = np.zeros((m, m), dtype=np.int64)
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            sums = a[np.ix_(bi, bj)].sum(axis=1)
            if not np.all(sums == sums[0]):
                bad = [bi[r] for r in range(len(bi)) if sums[r] != sums[0]]
                raise NotEquitableError(i, j, [bi[0]] + bad)
            q[i, j] = sums[0]
    return QuotientMatrix(tuple(tuple(int(x) for x in row) for row in q), tuple(blocks))


def multiset_contains(haystack, needles, tol: float) -> bool:
    """True iff every needle matches a distinct haystack value within tol.

    Both inputs are treated as multisets of reals; matching is done by a
    monotone sweep over the sorted sequences.
    """
    hs = sorted(haystack)
    i = 0
    for q in sorted(needles):
        while i < len(hs) and hs[i] < q - tol:
            i += 1
        if i >= len(hs) or abs(hs[i] - q) > tol:
            return False
        i += 1
    return True


def quotient_spectrum_check(g: SignedGraph, partition, tol: float = IDENTITY_TOL) -> bool:
    """True iff every quotient eigenvalue (with multiplicity) appears in the full spectrum."""
    qm = quotient_matrix(g, partition)
    return multiset_contains(eigenvalues(g).eigenvalues, qm.eigenvalues(), tol)


# ---------------------------------------------------------------------------
# Closed-form characteristic polynomials of the quotient matrices used by the
# named constructions. Coefficients are exact integers, descending powers.
# ---------------------------------------------------------------------------

_FAMILIES = ("F_GST", "F1_S1", "F1_GEN", "F2_GEN", "F2_S2", "F3")


@dataclass(frozen=True)
class CharPolyId:
    """Selector for one of the closed-form polynomial families.

    F_GST(s,t): quotient of the clique-plus-two-apexes signed family, s,t >= 1.
    F1_S1(n):   quotient of that family's underlying graph minus one cross
                clique edge at split (1, n-3), n >= 5.
    F1_GEN(s,t): same with both split sides >= 2.
    F2_GEN(s,t): underlying graph minus an edge inside the s-side, s >= 3.
    F2_S2(n):    the s = 2 case of the above.
    F3(s,t):     one extra vertex joined to the whole clique, s,t >= 1.
    """

    family: str
    s: int | None = None
    t: int | None = None
    n: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown polynomial family {self.family!r}")
        if self.family in ("F_GST", "F1_GEN", "F2_GEN", "F3"):
            if self.s is None or self.t is None:
                raise ValueError(f"{self.family} needs parameters s and t")
            s, t = self.s, self.t
            if self.family == "F_GST" and not (s >= 1 and t >= 1):
                raise ValueError("F_GST needs s,t >= 1")
            if self.family == "F1_GEN" and not (s >= 2 and t >= 2):
                raise ValueError("F1_GEN needs s,t >= 2")
            if self.family == "F2_GEN" and not (s >= 3 and t >= 1):
                raise ValueError("F2_GEN needs s >= 3 and t >= 1")
            if self.family == "F3" and not (s >= 1 and t >= 1):
                raise ValueError("F3 needs s,t >= 1")
        else:
            if self.n is None:
                raise ValueError(f"{self.family} needs parameter n")
            if self.n < 5:
                raise ValueError(f"{self.family} needs n >= 5")

    def coefficients(self) -> tuple[int, ...]:
        s, t, n = self.s, self.t, self.n
        if self.family == "F_GST":
            return (1, 2 - s - t, -2 * s - 2 * t, 2 * s * t - 2, 3 * s * t + s + t - 1)
        if self.family == "F1_S1":
            return (1, 5 - n, 9 - 3 * n, n - 7, 3 * n - 11, 5 - n)
        if self.family == "F1_GEN":
            return (
                1,
                4 - s - t,
                6 - 4 * s - 4 * t,
                2 * s * t - 4 * s - 4 * t,
                3 * s * t + s + t - 7,
                4 * s + 4 * t - 2 * s * t - 4,
                3 - s - t,
            )
        if self.family == "F2_GEN":
            return (
                1,
                4 - s - t,
                6 - 4 * s - 4 * t,
                2 - 4 * s - 4 * t + 2 * s * t,
                -5 + s - 3 * t + 3 * s * t,
                -4 + 2 * s + 4 * t - 2 * s * t,
                0,
            )
        if self.family == "F2_S2":
            return (1, 5 - n, 9 - 3 * n, 3 * n - 15, 0, 0)
        # F3
        return (
            1,
            2 - s - t,
            -3 * s - 3 * t,
            2 * s * t - s - t - 2,
            s * t + 2 * s + 2 * t - 1,
            s + t - 2 * s * t,
        )

    @property
    def matrix_order(self) -> int:
        """Order of the graph the polynomial's quotient matrix comes from."""
        if self.family in ("F1_S1", "F2_S2"):
            return self.n
        if self.family == "F3":
            return self.s + self.t + 3
        return self.s + self.t + 2


def char_poly_eval(poly_id: CharPolyId, x: float) -> float:
    """Exact-integer-coefficient polynomial evaluated at x by Horner's rule."""
    acc = 0.0
    for c in poly_id.coefficients():
        acc = acc * x + c
    return acc


def _poly_eval(coeffs, x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _poly_derivative(coeffs):
    deg = len(coeffs) - 1
    return tuple((deg - i) * c for i, c in enumerate(coeffs[:-1]))


def _bisect_root(coeffs, lo, hi, refine_tol):
    flo = _poly_eval(coeffs, lo)
    while hi - lo > refine_tol:
        mid = 0.5 * (lo + hi)
        if (_poly_eval(coeffs, mid) < 0) == (flo < 0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _roots_in_interval(coeffs, lo, hi, refine_tol):
    """Real roots in (lo, hi], ascending: bisection on the monotone segments
    cut out by the derivative's roots. Even-multiplicity roots show up as
    critical points where the polynomial vanishes."""
    if len(coeffs) <= 1:
        return []
    if len(coeffs) == 2:
        r = -coeffs[1] / coeffs[0]
        return [r] if lo < r <= hi else []
    deg = len(coeffs) - 1
    breaks = _roots_in_interval(_poly_derivative(coeffs), lo, hi, refine_tol)
    points = [lo] + [b for b in breaks if lo < b < hi] + [hi]
    roots: list[float] = []

    def accept(r):
        if not roots or r - roots[-1] > 1e-9:
            roots.append(r)

    for a, b in zip(points, points[1:]):
        fa, fb = _poly_eval(coeffs, a), _poly_eval(coeffs, b)
        zb = 1e-9 * max(1.0, abs(b)) ** deg
        za = 1e-9 * max(1.0, abs(a)) ** deg
        if abs(fb) <= zb:
            accept(b)
        elif abs(fa) > za and (fa < 0) != (fb < 0):
            accept(_bisect_root(coeffs, a, b, refine_tol))
    return roots


def largest_root(poly_id: CharPolyId, refine_tol: float = 1e-12) -> float:
    """Largest real root in (0, n], by sign-bracketed bisection.

    n is the order of the underlying graph, which bounds every eigenvalue.
    The bisection runs on the monotone segments between critical points, so
    even-multiplicity roots (critical points where the value vanishes) are
    found as well.
    """
    hi = float(poly_id.matrix_order)
    roots = _roots_in_interval(poly_id.coefficients(), 0.0, hi, refine_tol)
    if not roots:
        raise BracketError(f"{poly_id}: no real root found in (0, {hi}]")
    return roots[-1]


def interlacing_check(g: SignedGraph, kept, tol: float = IDENTITY_TOL) -> bool:
    """Cauchy interlacing of the principal submatrix on the kept vertices."""
    idx = sorted(set(int(v) for v in kept))
    if not idx:
        raise ValueError("kept vertex set must be nonempty")
    if idx[0] < 0 or idx[-1] >= g.n:
        raise ValueError("kept vertices out of range")
    lam = eigenvalues(g).eigenvalues
    b = g.adj[np.ix_(idx, idx)].astype(np.float64)
    mu = _symmetric_eigh(b)[0][::-1]
    n, m = g.n, len(idx)
    for i in range(m):
        if not (lam[i] >= mu[i] - tol and mu[i] >= lam[n - m + i] - tol):
            return False
    return True


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def spectrum_to_json(sp: Spectrum) -> str:
    """Fixed 15-significant-digit JSON rendering of a spectrum."""
    vals = ",".join(_fmt(v) for v in sp.eigenvalues)
    return f'{{"eigenvalues":[{vals}],"rho":{_fmt(sp.rho)},"tol":{_fmt(sp.tol)}}}'


def check_spectrum_identities(g: SignedGraph, sp: Spectrum) -> None:
    """Assert the trace and Frobenius identities of a computed spectrum."""
    e = g.edge_count
    if abs(math.fsum(sp.eigenvalues)) > sp.tol:
        raise SpectralError("trace identity violated")
    if abs(math.fsum(v * v for v in sp.eigenvalues) - 2 * e) > g.n * sp.tol:
        raise SpectralError("Frobenius identity violated")
