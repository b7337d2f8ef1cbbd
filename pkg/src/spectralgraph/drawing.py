"""Minimum-energy spectral graph drawings and SVG emission.

A drawing of an m-vertex graph in R^n is an m x n matrix whose row i holds
the coordinates of vertex i. Its energy is the weighted sum of squared edge
lengths, equal to trace(R^T L R).
"""

from __future__ import annotations

import json
import warnings

import numpy as np

from . import graphs, laplacian, spectra
from .graphs import DisconnectedGraphError, WeightedGraph


def energy(g: WeightedGraph, r: np.ndarray) -> float:
    """Weighted sum of squared segment lengths of the drawing r."""
    r = np.asarray(r, dtype=float)
    if r.shape[0] != g.n:
        raise ValueError(f"drawing has {r.shape[0]} rows for a {g.n}-node graph")
    total = 0.0
    for i, j, w in graphs.edge_list(g):
        diff = r[i] - r[j]
        total += w * float(diff @ diff)
    return total


def spectral_drawing(g: WeightedGraph, n: int) -> np.ndarray:
    """Minimum-energy balanced orthogonal drawing in R^n.

    Columns are unit eigenvectors of L for the n smallest nonzero
    eigenvalues; the achieved energy is lambda_2 + ... + lambda_{n+1}.
    Any rotation of the result is an equally good drawing, and with
    multiple eigenvalues the column basis itself is only determined up to
    rotation within eigenspaces.
    """
    if n < 1:
        raise ValueError("embedding dimension must be >= 1")
    if n + 1 > g.n:
        raise ValueError(f"need n + 1 <= node count, got n={n} for {g.n} nodes")
    if not graphs.is_connected(g):
        raise DisconnectedGraphError(
            "spectral drawing requires a connected graph; draw each component separately"
        )
    dec = spectra.eigh(laplacian.laplacian(g))
    r = dec.vectors[:, 1 : n + 1].copy()
    coincident = _coincident_rows(r)
    if coincident:
        warnings.warn(
            f"drawing maps distinct vertices to the same point: {coincident[:5]}",
            stacklevel=2,
        )
    return r


def _coincident_rows(r: np.ndarray, tol: float = 1e-9) -> list:
    pairs = []
    for i in range(r.shape[0]):
        for j in range(i + 1, r.shape[0]):
            if np.linalg.norm(r[i] - r[j]) <= tol:
                pairs.append((i, j))
    return pairs


def minimum_energy_lower_bound(g: WeightedGraph, n: int) -> float:
    """lambda_2 + ... + lambda_{n+1}: the least energy any balanced orthogonal
    drawing in R^n can achieve."""
    if n + 1 > g.n:
        raise ValueError(f"need n + 1 <= node count, got n={n} for {g.n} nodes")
    vals = spectra.eigh(laplacian.laplacian(g)).values
    return float(vals[1 : n + 1].sum())


def rotate_drawing(r: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Apply an orthogonal change of basis; energy and pairwise distances are preserved."""
    r = np.asarray(r, dtype=float)
    q = np.asarray(q, dtype=float)
    if q.shape[0] != q.shape[1] or q.shape[0] != r.shape[1]:
        raise ValueError("Q must be square with size matching the drawing dimension")
    if np.linalg.norm(q.T @ q - np.eye(q.shape[0])) > 1e-8:
        raise ValueError("Q is not orthogonal")
    return r @ q


def random_balanced_orthogonal(m: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Random m x n matrix with orthonormal columns summing to zero."""
    x = rng.standard_normal((m, n))
    x -= x.mean(axis=0, keepdims=True)
    q, r = np.linalg.qr(x)
    return q * np.sign(np.diag(r))


def to_svg(g: WeightedGraph, r: np.ndarray) -> str:
    """Deterministic SVG rendering of a 2-D drawing.

    One line per edge (stroke width proportional to weight), one circle per
    vertex; viewBox is the bounding box plus a 5% margin; vertex radius
    is 2% of the bounding-box diagonal.
    """
    r = np.asarray(r, dtype=float)
    if r.ndim != 2 or r.shape[1] != 2:
        raise ValueError("SVG rendering needs an m x 2 drawing")
    if r.shape[0] != g.n:
        raise ValueError("drawing and graph size mismatch")
    lo = r.min(axis=0)
    hi = r.max(axis=0)
    span = np.maximum(hi - lo, 1e-9)
    margin = 0.05 * span
    lo_m = lo - margin
    size = span + 2 * margin
    diag = float(np.hypot(size[0], size[1]))
    radius = 0.02 * diag
    edges = graphs.edge_list(g)
    wmax = max((w for _, _, w in edges), default=1.0)

    def fmt(x: float) -> str:
        return f"{x:.6f}"

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{fmt(lo_m[0])} {fmt(lo_m[1])} {fmt(size[0])} {fmt(size[1])}">'
    ]
    for i, j, w in edges:
        width = 0.006 * diag * (w / wmax)
        out.append(
            f'<line x1="{fmt(r[i, 0])}" y1="{fmt(r[i, 1])}" '
            f'x2="{fmt(r[j, 0])}" y2="{fmt(r[j, 1])}" '
            f'stroke="black" stroke-width="{fmt(width)}"/>'
        )
    for i in range(g.n):
        out.append(
            f'<circle cx="{fmt(r[i, 0])}" cy="{fmt(r[i, 1])}" r="{fmt(radius)}" fill="steelblue"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_coordinate_json(g: WeightedGraph, r: np.ndarray) -> str:
    """JSON dump {"nodes": [[x, y], ...], "edges": [[u, v, w], ...]}."""
    r = np.asarray(r, dtype=float)
    if r.shape[0] != g.n:
        raise ValueError("drawing and graph size mismatch")
    payload = {
        "nodes": [[float(x) for x in row] for row in r],
        "edges": [[u, v, w] for u, v, w in graphs.edge_list(g)],
    }
    return json.dumps(payload)
