"""Dense symmetric eigendecomposition, small-matrix SVD, Rayleigh quotients,
and executable checks of the classical eigenvalue theorems.

Eigenvalues are ascending everywhere in this package. Classical statements
of Rayleigh-Ritz / Courant-Fischer / interlacing index eigenvalues in
descending order; the check functions below do the index translation
internally (descending position k corresponds to ascending position
n - k + 1, 1-based).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SYM_RTOL = 1e-12


class ConvergenceError(RuntimeError):
    """Eigen/SVD solver failed to converge; carries the offending matrix shape."""


def _check_symmetric(s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=float)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {s.shape}")
    scale = np.maximum(1.0, np.abs(s))
    if np.any(np.abs(s - s.T) > SYM_RTOL * scale):
        raise ValueError("matrix is not symmetric within tolerance")
    return s


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Scale each column so its largest-magnitude entry is positive (ties: lowest index)."""
    v = vectors.copy()
    idx = np.abs(v).argmax(axis=0)
    flip = v[idx, np.arange(v.shape[1])] < 0
    v[:, flip] *= -1.0
    return v


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and orthonormal eigenvectors (column k for values[k])."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SvdResult:
    """A = U diag(s) V^T with descending nonnegative singular values."""

    u: np.ndarray
    singular_values: np.ndarray
    v: np.ndarray


def eigh(s: np.ndarray) -> EigenDecomposition:
    """Eigendecomposition of a symmetric matrix, ascending, deterministic signs."""
    s = _check_symmetric(s)
    s = (s + s.T) / 2.0
    try:
        values, vectors = np.linalg.eigh(s)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigh failed to converge on shape {s.shape}: {exc}") from exc
    return EigenDecomposition(values=values, vectors=_fix_signs(vectors))


def svd(a: np.ndarray) -> SvdResult:
    """Thin SVD with deterministic signs (fixed on U's columns, mirrored into V)."""
    a = np.asarray(a, dtype=float)
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    try:
        u, sing, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"svd failed to converge on shape {a.shape}: {exc}") from exc
    v = vt.T
    idx = np.abs(u).argmax(axis=0)
    flip = u[idx, np.arange(u.shape[1])] < 0
    u[:, flip] *= -1.0
    v[:, flip] *= -1.0
    return SvdResult(u=u, singular_values=sing, v=v)


def rayleigh(s: np.ndarray, x: np.ndarray) -> float:
    """Rayleigh quotient x^T S x / x^T x."""
    s = _check_symmetric(s)
    x = np.asarray(x, dtype=float)
    nx2 = float(x @ x)
    if nx2 == 0.0:
        raise ValueError("Rayleigh quotient undefined for the zero vector")
    return float(x @ s @ x) / nx2


def restricted_extremes(s: np.ndarray, basis: np.ndarray) -> tuple:
    """(min, max) of the Rayleigh quotient over span(basis columns), basis orthonormal."""
    b = basis.T @ s @ basis
    vals = np.linalg.eigvalsh((b + b.T) / 2.0)
    return float(vals[0]), float(vals[-1])


def check_rayleigh_ritz(s: np.ndarray, samples: int = 50, seed: int = 0) -> dict:
    """Verify the Rayleigh-Ritz characterization: for each ascending index k,
    the minimum Rayleigh quotient over span(u_k, ..., u_n) equals lambda_k.

    Checks the exact restriction and `samples` random unit vectors per
    subspace; returns the worst violations found.
    """
    dec = eigh(s)
    rng = np.random.default_rng(seed)
    n = dec.n
    max_exact = 0.0
    max_sample = 0.0
    for k in range(n):
        basis = dec.vectors[:, k:]
        lo, _ = restricted_extremes(s, basis)
        max_exact = max(max_exact, abs(lo - dec.values[k]))
        # attained at u_k
        max_exact = max(max_exact, abs(rayleigh(s, dec.vectors[:, k]) - dec.values[k]))
        coeffs = rng.standard_normal((n - k, samples))
        xs = basis @ coeffs
        for col in range(samples):
            x = xs[:, col]
            if np.linalg.norm(x) < 1e-12:
                continue
            max_sample = max(max_sample, dec.values[k] - rayleigh(s, x))
    return {"max_exact_violation": max_exact, "max_sample_violation": max_sample}


def check_interlacing(a: np.ndarray, r: np.ndarray, tol: float = 1e-8) -> tuple:
    """Check eigenvalue interlacing for B = R^T A R with orthonormal R.

    With descending eigenvalues lambda_1 >= ... >= lambda_n of A and
    mu_1 >= ... >= mu_m of B, asserts
    lambda_{n-m+i} <= mu_i <= lambda_i for every i. Returns
    (ok, margins) where margins[i] = min(upper slack, lower slack).
    """
    a = _check_symmetric(a)
    r = np.asarray(r, dtype=float)
    n, m = r.shape
    if np.linalg.norm(r.T @ r - np.eye(m)) > 1e-8 * max(1.0, np.linalg.norm(r)):
        raise ValueError("R does not have orthonormal columns")
    lam = np.sort(np.linalg.eigvalsh(a))[::-1]  # descending
    b = r.T @ a @ r
    mu = np.sort(np.linalg.eigvalsh((b + b.T) / 2.0))[::-1]
    margins = np.empty(m)
    ok = True
    for i in range(m):
        upper = lam[i] - mu[i]
        lower = mu[i] - lam[n - m + i]
        margins[i] = min(upper, lower)
        if upper < -tol or lower < -tol:
            ok = False
    return ok, margins


def check_courant_fischer(s: np.ndarray, k: int, trials: int = 20, seed: int = 0) -> dict:
    """Verify the Courant-Fischer characterization for descending index k (1-based).

    Exact part: the extremal subspace spanned by the n-k+1 eigenvectors with
    smallest eigenvalues realizes max ratio = lambda_k (descending), and the
    subspace spanned by the n-k+1 largest realizes min ratio = lambda_k of
    the max-min form. Sampled part: `trials` random (n-k+1)-dimensional
    subspaces never have max ratio below / min ratio above lambda_k.
    """
    s = _check_symmetric(s)
    dec = eigh(s)
    n = dec.n
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    lam_k = float(dec.values[n - k])  # descending position k
    rng = np.random.default_rng(seed)

    # min-max form: over subspaces of dim n-k+1, the minimal max-ratio is
    # lambda_k, realized by the span of the n-k+1 smallest eigenvectors.
    _, hi = restricted_extremes(s, dec.vectors[:, : n - k + 1])
    exact_minmax = abs(hi - lam_k)
    # max-min form: over subspaces of dim k, the maximal min-ratio is
    # lambda_k, realized by the span of the k largest eigenvectors.
    lo, _ = restricted_extremes(s, dec.vectors[:, n - k:])
    exact_maxmin = abs(lo - lam_k)

    worst_minmax = 0.0  # how far a sampled max ratio fell below lam_k
    worst_maxmin = 0.0  # how far a sampled min ratio rose above lam_k
    for _ in range(trials):
        q, _ = np.linalg.qr(rng.standard_normal((n, n - k + 1)))
        _, hi = restricted_extremes(s, q)
        worst_minmax = max(worst_minmax, lam_k - hi)
        q, _ = np.linalg.qr(rng.standard_normal((n, k)))
        lo, _ = restricted_extremes(s, q)
        worst_maxmin = max(worst_maxmin, lo - lam_k)
    return {
        "lambda_k": lam_k,
        "exact_minmax_violation": exact_minmax,
        "exact_maxmin_violation": exact_maxmin,
        "sampled_minmax_violation": worst_minmax,
        "sampled_maxmin_violation": worst_maxmin,
    }


def subspace_distance(u1: np.ndarray, u2: np.ndarray) -> float:
    """Frobenius distance between the orthogonal projectors onto two column spans.

    Basis-independent, which is how eigenspaces with multiple eigenvalues
    must be compared.
    """
    q1, _ = np.linalg.qr(np.asarray(u1, dtype=float))
    q2, _ = np.linalg.qr(np.asarray(u2, dtype=float))
    return float(np.linalg.norm(q1 @ q1.T - q2 @ q2.T))


def random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random orthogonal matrix via QR of a standard normal matrix."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))
