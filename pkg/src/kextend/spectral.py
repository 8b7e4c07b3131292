"""Signless Laplacian, top eigenpairs, quotient matrices and characteristic polynomials."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import ConvergenceError, PreconditionError
from .graph import Graph
from .polynomial import Polynomial, largest_real_root

EIGEN_TOLERANCE = 1e-12
MAX_ITERATIONS = 1_000_000
STALL_WINDOW = 2_000
CHAR_POLY_MAX_ORDER = 4


@dataclass(frozen=True)
class SpectralResult:
    value: float
    vector: np.ndarray
    residual: float
    iterations: int
    method: str

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "residual": self.residual,
            "iterations": self.iterations,
            "method": self.method,
        }


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple, ...]
    block_sizes: tuple[int, ...]
    equitable: bool

    @property
    def order(self) -> int:
        return len(self.block_sizes)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])


def signless_laplacian(G: Graph) -> np.ndarray:
    """Q(G) = D(G) + A(G) as an integer matrix."""
    q = G.adjacency_matrix()
    q[np.diag_indices(G.n)] = G.degrees()
    return q


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {M.shape}", "square")
    if not np.array_equal(M, M.T):
        raise PreconditionError("matrix is not symmetric", "symmetric")
    return M


def _residual(M: np.ndarray, v: np.ndarray, lam: float) -> float:
    return float(np.max(np.abs(M @ v - lam * v))) if len(v) else 0.0


def _orient(v: np.ndarray) -> np.ndarray:
    return -v if v.sum() < 0 else v


def largest_eigenvalue(
    M: np.ndarray,
    tol: float = EIGEN_TOLERANCE,
    max_iter: int = MAX_ITERATIONS,
    fallback: bool = True,
) -> SpectralResult:
    """Largest eigenvalue of a symmetric matrix with a unit eigenvector.

    Power iteration from the normalised all-ones vector, with the Rayleigh
    quotient as the estimate.  A diagonal shift makes the iterated matrix
    positive semidefinite (none is needed for a signless Laplacian), so the
    dominant eigenvalue is the largest one.  Convergence is declared when
    ``max|Mv - lambda v| <= tol * max(1, |lambda|)``.  If the residual stops
    improving for ``STALL_WINDOW`` iterations, or ``max_iter`` is reached, a
    dense symmetric eigensolver finishes the job (``fallback=False`` raises
    instead).
    """
    M = _check_symmetric(M).astype(float)
    n = M.shape[0]
    if n == 0:
        raise PreconditionError("empty matrix", "order_positive")
    if n == 1:
        return SpectralResult(float(M[0, 0]), np.ones(1), 0.0, 0, "closed")

    off = np.abs(M).sum(axis=1) - np.abs(np.diag(M))
    shift = float(max(0.0, np.max(off - np.diag(M))))
    A = M + shift * np.eye(n) if shift else M
    # Rounding floor for the residual of a dense matvec.
    floor = 16 * n * np.finfo(float).eps

    v = np.full(n, 1.0 / math.sqrt(n))
    best, best_at = math.inf, 0
    lam = float(v @ M @ v)
    res = _residual(M, v, lam)
    it = 0
    while it < max_iter:
        scale = max(1.0, abs(lam))
        if res <= max(tol, floor) * scale:
            return SpectralResult(lam, _orient(v), res, it, "power")
        if res < 0.9 * best:
            best, best_at = res, it
        elif it - best_at > STALL_WINDOW:
            break
        w = A @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            break
        v = w / norm
        lam = float(v @ M @ v)
        res = _residual(M, v, lam)
        it += 1

    if not fallback:
        raise ConvergenceError("power iteration did not converge", res, it)
    vals, vecs = np.linalg.eigh(M)
    lam, v = float(vals[-1]), _orient(vecs[:, -1])
    res = _residual(M, v, lam)
    if res > max(tol, 4 * floor) * max(1.0, abs(lam)):
        raise ConvergenceError("dense eigensolver residual above tolerance", res, it)
    return SpectralResult(lam, v, res, it, "eigh")


def q_spectral_radius(G: Graph, **kwargs) -> SpectralResult:
    """q(G), the largest eigenvalue of the signless Laplacian."""
    return largest_eigenvalue(signless_laplacian(G), **kwargs)


def adjacency_spectral_radius(G: Graph, **kwargs) -> SpectralResult:
    return largest_eigenvalue(G.adjacency_matrix(), **kwargs)


def _validate_partition(order: int, partition: Sequence[Sequence[int]]) -> None:
    seen: set[int] = set()
    for block in partition:
        if not block:
            raise PreconditionError("partition has an empty block", "partition_nonempty")
        for v in block:
            if not 0 <= v < order:
                raise PreconditionError(f"index {v} outside 0..{order - 1}", "partition_range")
            if v in seen:
                raise PreconditionError(f"index {v} appears in two blocks", "partition_disjoint")
            seen.add(v)
    if len(seen) != order:
        raise PreconditionError("partition does not cover every index", "partition_cover")


def quotient_matrix(
    M: np.ndarray, partition: Sequence[Sequence[int]], tol: float = 1e-9
) -> QuotientMatrix:
    """Block-average-row-sum matrix over ``partition``.

    Integer input is handled in exact arithmetic: entries are Fractions and
    equitability is an exact constant-row-sum test.  Float input uses ``tol``.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {M.shape}", "square")
    _validate_partition(M.shape[0], partition)
    exact = np.issubdtype(M.dtype, np.integer) or M.dtype == bool
    blocks = [list(b) for b in partition]
    entries = []
    equitable = True
    for bi in blocks:
        row = []
        for bj in blocks:
            sums = M[np.ix_(bi, bj)].sum(axis=1)
            if exact:
                sums = [int(x) for x in sums]
                row.append(Fraction(sum(sums), len(bi)))
                equitable &= min(sums) == max(sums)
            else:
                row.append(float(sums.sum()) / len(bi))
                equitable &= float(sums.max() - sums.min()) <= tol
        entries.append(tuple(row))
    return QuotientMatrix(tuple(entries), tuple(len(b) for b in blocks), bool(equitable))


def _det(rows: list[list]) -> object:
    # Laplace expansion along the first row; orders here are at most 4.
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * a * _det(minor)
    return total


def char_poly(B: QuotientMatrix | Sequence[Sequence], max_order: int = CHAR_POLY_MAX_ORDER) -> Polynomial:
    """det(xI - B), from sums of principal minors in exact arithmetic."""
    rows = [[Fraction(x) for x in r] for r in (B.entries if isinstance(B, QuotientMatrix) else B)]
    r = len(rows)
    if r > max_order:
        raise PreconditionError(f"order {r} exceeds the characteristic-polynomial cap {max_order}", "order_cap")
    if any(len(row) != r for row in rows):
        raise PreconditionError("matrix is not square", "square")
    coeffs = [Fraction(1)]
    for k in range(1, r + 1):
        e = sum((_det([[rows[i][j] for j in idx] for i in idx]) for idx in combinations(range(r), k)), Fraction(0))
        coeffs.append((-1) ** k * e)
    return Polynomial(tuple(coeffs))


def quotient_spectral_radius(G: Graph, partition: Sequence[Sequence[int]] | None = None) -> float:
    """Largest root of the quotient matrix's characteristic polynomial.

    Defaults to the construction blocks recorded on ``G``; the bracket is
    [0, 2(n-1)], which holds every signless Laplacian eigenvalue.
    """
    partition = partition if partition is not None else G.blocks
    if partition is None:
        raise PreconditionError("graph carries no construction blocks", "blocks")
    B = quotient_matrix(signless_laplacian(G), partition)
    return largest_real_root(char_poly(B), (0.0, float(max(2 * (G.n - 1), 1))))


def closed_form_split_join(s: int, n: int) -> float:
    """q(K_s joined with (n-s) isolated vertices), for 1 <= s <= n-1."""
    if not 1 <= s <= n - 1:
        raise PreconditionError(f"need 1 <= s <= n-1, got s={s}, n={n}", "s_range")
    t = n + 2 * s - 2
    return (t + math.sqrt(t * t - 8 * s * (s - 1))) / 2
