"""Graph Laplacians L = D - W, L_sym, L_rw, and their defining identities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import graphs, spectra
from .graphs import WeightedGraph


class IsolatedVertexError(ValueError):
    """Normalized Laplacians require every vertex to have positive degree."""


def laplacian(g: WeightedGraph) -> np.ndarray:
    """Unnormalized graph Laplacian D - W."""
    return np.diag(g.w.sum(axis=1)) - g.w


def laplacian_from_weights(w: np.ndarray) -> np.ndarray:
    """D - W for a raw symmetric matrix, without graph invariants.

    Exists so tests can probe the quadratic form's independence from the
    diagonal of W, which WeightedGraph forbids by construction.
    """
    w = np.asarray(w, dtype=float)
    return np.diag(w.sum(axis=1)) - w


@dataclass(frozen=True)
class LaplacianBundle:
    """L, vertex degrees, and the normalized Laplacians L_sym, L_rw."""

    l: np.ndarray
    degrees: np.ndarray
    l_sym: np.ndarray
    l_rw: np.ndarray


def normalized_laplacians(g: WeightedGraph) -> LaplacianBundle:
    """L_sym = D^{-1/2} L D^{-1/2} and L_rw = D^{-1} L; requires no isolated vertices."""
    d = g.w.sum(axis=1)
    isolated = np.nonzero(d == 0.0)[0]
    if isolated.size:
        raise IsolatedVertexError(f"isolated vertex {int(isolated[0])} (degree 0)")
    l = laplacian(g)
    d_inv_sqrt = 1.0 / np.sqrt(d)
    l_sym = d_inv_sqrt[:, None] * l * d_inv_sqrt[None, :]
    l_sym = (l_sym + l_sym.T) / 2.0
    l_rw = l / d[:, None]
    return LaplacianBundle(l=l, degrees=d, l_sym=l_sym, l_rw=l_rw)


def quadratic_form(l: np.ndarray, x: np.ndarray) -> float:
    """x^T L x."""
    x = np.asarray(x, dtype=float)
    if x.shape[0] != l.shape[0]:
        raise ValueError("dimension mismatch")
    return float(x @ l @ x)


def pairwise_form(g: WeightedGraph, x: np.ndarray) -> float:
    """(1/2) sum_ij w_ij (x_i - x_j)^2; equals x^T L x for L = D - W."""
    x = np.asarray(x, dtype=float)
    if x.shape[0] != g.n:
        raise ValueError("dimension mismatch")
    diff = x[:, None] - x[None, :]
    return float(0.5 * (g.w * diff**2).sum())


def component_count_spectral(g: WeightedGraph, tol: float | None = None) -> int:
    """Number of connected components = dimension of the nullspace of L."""
    vals = spectra.eigh(laplacian(g)).values
    if tol is None:
        tol = 1e-8 * max(1.0, float(vals[-1]))
    elif tol <= 0:
        raise ValueError("tol must be positive")
    return int((vals < tol).sum())


def generalized_eigen(g: WeightedGraph) -> tuple:
    """Solutions of L u = lambda D u via the L_sym similarity.

    Returns (values, vectors) with values equal to the spectrum of L_sym
    and column k of vectors satisfying L u = values[k] D u.
    """
    bundle = normalized_laplacians(g)
    dec = spectra.eigh(bundle.l_sym)
    u = dec.vectors / np.sqrt(bundle.degrees)[:, None]
    return dec.values, u


def check_adjp2(g: WeightedGraph, trials: int = 10) -> bool:
    """Check that D~ D~^T = D - A = L for `trials` seeded orientations (exact
    integer arithmetic), and D~ D~^T = D + A for the unoriented incidence."""
    if not g.is_binary():
        raise ValueError("check requires 0/1 weights")
    a = graphs.adjacency_matrix(g)
    d = np.diag(a.sum(axis=1))
    for seed in range(trials):
        dt = graphs.incidence_matrix(graphs.orient(g, seed=seed))
        if not np.array_equal(dt @ dt.T, d - a):
            return False
    dt = graphs.unoriented_incidence_matrix(g)
    return np.array_equal(dt @ dt.T, d + a)
