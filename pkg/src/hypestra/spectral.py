"""Adjacency matrices, eigendecomposition and spectrum-derived statistics.

The eigensolver is a cyclic Jacobi iteration: deterministic, accurate to
solver precision for the small dense symmetric matrices this library
works with (a few hundred rows at most).  Walk counting never touches
floating point; powers of the adjacency matrix are taken over Python's
unbounded integers so counts are exact at any size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypercore import Hypergraph

#: exp overflows double precision just above this exponent
_EXP_OVERFLOW = 709.0

#: walk_dominance outcomes
STRICT = "strict"
WEAK = "weak"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


class ConvergenceError(RuntimeError):
    """Jacobi sweep cap reached before the off-diagonal mass vanished."""


class DenseSymmetricMatrix:
    """A real symmetric matrix with cached extreme entries.

    ``entries`` is an exactly symmetric float array; symmetry is checked
    at construction.  ``entry_min`` / ``entry_max`` are the smallest and
    largest entries anywhere in the matrix (diagonal included).
    """

    __slots__ = ("order", "entries", "entry_min", "entry_max")

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not exactly symmetric")
        a.flags.writeable = False
        object.__setattr__(self, "order", a.shape[0])
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "entry_min", float(a.min()) if a.size else 0.0)
        object.__setattr__(self, "entry_max", float(a.max()) if a.size else 0.0)

    def __setattr__(self, name, value):
        raise AttributeError("DenseSymmetricMatrix is immutable")

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def __repr__(self) -> str:
        return f"DenseSymmetricMatrix(order={self.order})"


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with the classification tolerance.

    ``zero_tolerance`` separates numerically-zero eigenvalues from signed
    ones; it scales with the Frobenius norm of the source matrix.
    """

    eigenvalues: np.ndarray
    zero_tolerance: float
    frobenius_norm: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda1(self) -> float:
        return float(self.eigenvalues[0]) if self.n else 0.0


@dataclass(frozen=True)
class SpectralSummary:
    """The headline spectrum statistics in one bundle."""

    lambda1: float
    estrada: float
    energy: float
    negative_count: int
    distinct_count: int
    moments: tuple[float, ...]


def adjacency(h: Hypergraph) -> DenseSymmetricMatrix:
    """Pair-multiplicity adjacency matrix: entry (i, j) counts the edges
    containing both i and j; the diagonal is zero."""
    a = np.zeros((h.n, h.n), dtype=float)
    for e in h.edges:
        for x in range(len(e)):
            for y in range(x + 1, len(e)):
                a[e[x], e[y]] += 1.0
                a[e[y], e[x]] += 1.0
    return DenseSymmetricMatrix(a)


def adjacency_int(h: Hypergraph) -> np.ndarray:
    """Adjacency matrix over Python integers (object dtype), for exact powers."""
    a = np.zeros((h.n, h.n), dtype=object)  # object zeros are Python ints
    for e in h.edges:
        for x in range(len(e)):
            for y in range(x + 1, len(e)):
                a[e[x], e[y]] += 1
                a[e[y], e[x]] += 1
    return a


def jacobi_eigh(
    matrix,
    *,
    tol_factor: float = 1e-14,
    max_sweeps: int = 100,
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns ``(values, vectors)`` with values sorted descending and
    ``matrix == vectors @ diag(values) @ vectors.T`` up to solver
    precision.  Sweeps rotate every (p, q) plane in a fixed order, so the
    result is bit-reproducible for identical input.  Convergence is
    declared when the off-diagonal Frobenius norm drops below
    ``tol_factor * max(1, ||matrix||_F)``; a ConvergenceError after
    ``max_sweeps`` sweeps indicates pathological input.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    q = np.eye(n)
    if n < 2:
        return a.diagonal().copy(), q
    threshold = tol_factor * max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off_entries = a.copy()
        np.fill_diagonal(off_entries, 0.0)
        if float(np.linalg.norm(off_entries)) <= threshold:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apq = a[p, r]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[r, r]
                diff = aqq - app
                if abs(diff) + 100.0 * abs(apq) == abs(diff):
                    # rotation angle below roundoff of the diagonal gap
                    t = apq / diff
                else:
                    tau = diff / (2.0 * apq)
                    if tau >= 0.0:
                        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # two-sided rotation in the (p, r) plane
                col_p = a[:, p].copy()
                col_r = a[:, r].copy()
                a[:, p] = c * col_p - s * col_r
                a[:, r] = s * col_p + c * col_r
                row_p = a[p, :].copy()
                row_r = a[r, :].copy()
                a[p, :] = c * row_p - s * row_r
                a[r, :] = s * row_p + c * row_r
                tapq = t * apq
                a[p, p] = app - tapq
                a[r, r] = aqq + tapq
                a[p, r] = 0.0
                a[r, p] = 0.0
                q_p = q[:, p].copy()
                q_r = q[:, r].copy()
                q[:, p] = c * q_p - s * q_r
                q[:, r] = s * q_p + c * q_r
    else:
        raise ConvergenceError(f"no convergence after {max_sweeps} sweeps")
    values = a.diagonal().copy()
    order = np.argsort(-values, kind="stable")
    return values[order], q[:, order]


def eigendecompose(matrix: DenseSymmetricMatrix) -> Spectrum:
    """Spectrum of a symmetric matrix, eigenvalues descending."""
    values, _ = jacobi_eigh(matrix.entries)
    fro = matrix.frobenius_norm
    return Spectrum(
        eigenvalues=values,
        zero_tolerance=1e-9 * max(1.0, fro),
        frobenius_norm=fro,
    )


def spectrum_of(h: Hypergraph) -> Spectrum:
    """Adjacency spectrum of a hypergraph."""
    return eigendecompose(adjacency(h))


def spectral_moment(spectrum: Spectrum, t: int) -> float:
    """t-th spectral moment: sum of eigenvalues raised to the t-th power."""
    if t < 0:
        raise ValueError(f"moment order must be >= 0, got {t}")
    return float(np.sum(spectrum.eigenvalues**t))


def estrada_index(spectrum: Spectrum) -> float:
    """Sum of exp(eigenvalue) over the spectrum.

    Raises OverflowError instead of returning infinity once the leading
    eigenvalue exceeds what double precision can exponentiate (~709).
    """
    if spectrum.n and spectrum.lambda1 > _EXP_OVERFLOW:
        raise OverflowError(
            f"estrada index overflows double precision (lambda1={spectrum.lambda1:g})"
        )
    return float(sum(math.exp(v) for v in spectrum.eigenvalues))


def energy(spectrum: Spectrum) -> float:
    """Sum of absolute eigenvalues."""
    return float(np.sum(np.abs(spectrum.eigenvalues)))


def negative_count(spectrum: Spectrum) -> int:
    """Number of eigenvalues below -zero_tolerance."""
    return int(np.sum(spectrum.eigenvalues < -spectrum.zero_tolerance))


def positive_count(spectrum: Spectrum) -> int:
    """Number of eigenvalues above +zero_tolerance."""
    return int(np.sum(spectrum.eigenvalues > spectrum.zero_tolerance))


def distinct_eigenvalues(spectrum: Spectrum) -> list[tuple[float, int]]:
    """Cluster the sorted eigenvalues with the zero-tolerance gap.

    Returns (value, multiplicity) pairs, descending, where each value is
    the mean of its cluster; multiplicities sum to n.
    """
    out: list[tuple[float, int]] = []
    values = spectrum.eigenvalues
    i = 0
    while i < len(values):
        j = i + 1
        while j < len(values) and values[j - 1] - values[j] <= spectrum.zero_tolerance:
            j += 1
        out.append((float(np.mean(values[i:j])), j - i))
        i = j
    return out


def summarize(spectrum: Spectrum, max_moment: int = 8) -> SpectralSummary:
    """Headline statistics plus moments 0..max_moment."""
    return SpectralSummary(
        lambda1=spectrum.lambda1,
        estrada=estrada_index(spectrum),
        energy=energy(spectrum),
        negative_count=negative_count(spectrum),
        distinct_count=len(distinct_eigenvalues(spectrum)),
        moments=tuple(spectral_moment(spectrum, t) for t in range(max_moment + 1)),
    )


# --- exact integer walk machinery ------------------------------------------


def _int_matrix_power(a: np.ndarray, s: int) -> np.ndarray:
    """a**s by binary exponentiation over Python integers."""
    n = a.shape[0]
    result = np.zeros((n, n), dtype=object)
    np.fill_diagonal(result, 1)
    base = a
    while s:
        if s & 1:
            result = result @ base
        s >>= 1
        if s:
            base = base @ base
    return result


def trace_power(matrix, t: int) -> int:
    """Exact trace of the t-th power of an integer matrix."""
    if t < 0:
        raise ValueError(f"power must be >= 0, got {t}")
    a = np.array(matrix, dtype=object)
    return int(np.trace(_int_matrix_power(a, t)))


def walk_count(h: Hypergraph, u: int, v: int, s: int) -> int:
    """Number of length-s walks from u to v, counted with edge multiplicity.

    Consecutive walk vertices are distinct, and each step may use any
    edge containing both endpoints, so the count is the (u, v) entry of
    the s-th power of the adjacency matrix.  Arithmetic is exact.
    """
    if s < 0:
        raise ValueError(f"walk length must be >= 0, got {s}")
    for x in (u, v):
        if not 0 <= x < h.n:
            raise ValueError(f"vertex {x} outside 0..{h.n - 1}")
    power = _int_matrix_power(adjacency_int(h), s)
    return int(power[u, v])


def closed_walk_counts(h: Hypergraph, u: int, s_max: int) -> list[int]:
    """Closed walk counts at u for every length 1..s_max (exact)."""
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    a = adjacency_int(h)
    out = []
    power = a
    for _ in range(s_max):
        out.append(int(power[u, u]))
        power = power @ a
    return out


def walk_dominance(h: Hypergraph, u: int, v: int, s_max: int) -> str:
    """Compare closed walk counts at u against those at v for lengths <= s_max.

    Returns ``"equal"`` when the counts agree at every length,
    ``"strict"`` when u's counts never exceed v's and fall short at least
    once, ``"incomparable"`` when each side exceeds the other somewhere,
    and ``"weak"`` when the counts only dominate in the reverse direction
    (v's never exceed u's).  A finite certificate: ``strict`` at one
    s_max cannot be revoked by larger s_max, while ``equal`` may refine.
    """
    if s_max < 1:
        raise ValueError(f"s_max must be >= 1, got {s_max}")
    a = adjacency_int(h)
    u_below = False
    u_above = False
    power = a
    for _ in range(s_max):
        mu = power[u, u]
        mv = power[v, v]
        if mu < mv:
            u_below = True
        elif mu > mv:
            u_above = True
        power = power @ a
    if u_below and u_above:
        return INCOMPARABLE
    if u_below:
        return STRICT
    if u_above:
        return WEAK
    return EQUAL


# --- report rendering -------------------------------------------------------


def format_float(x: float) -> str:
    """Render with 12 significant digits, locale independent."""
    if x == int(x) and abs(x) < 1e15:
        return np.format_float_positional(
            x, precision=12, unique=False, fractional=False, trim="-"
        )
    return np.format_float_positional(x, precision=12, unique=False, fractional=False)


def _snapped_eigenvalues(spectrum: Spectrum) -> list[float]:
    """Eigenvalues with solver-noise zeros reported as exact zeros."""
    return [
        0.0 if abs(v) <= spectrum.zero_tolerance else float(v)
        for v in spectrum.eigenvalues
    ]


def spectrum_to_csv(spectrum: Spectrum) -> str:
    """CSV with a single ``eigenvalue`` column, descending."""
    lines = ["eigenvalue"]
    lines += [format_float(v) for v in _snapped_eigenvalues(spectrum)]
    return "\n".join(lines) + "\n"


def summary_to_dict(spectrum: Spectrum, max_moment: int = 8) -> dict:
    """JSON-ready summary object (lambda1, estrada, energy, counts, moments)."""
    s = summarize(spectrum, max_moment)

    def rounded(x: float) -> float:
        return float(f"{x:.12g}")

    return {
        "n": spectrum.n,
        "lambda1": rounded(s.lambda1),
        "estrada": rounded(s.estrada),
        "energy": rounded(s.energy),
        "negative_count": s.negative_count,
        "distinct_count": s.distinct_count,
        "moments": [rounded(mt) for mt in s.moments],
        "eigenvalues": [rounded(v) for v in _snapped_eigenvalues(spectrum)],
    }
