"""Graph types, degree/incidence/adjacency matrices, cut quantities, generators, and file I/O.

Nodes are 0-based contiguous integers. Weight matrices are dense, symmetric,
nonnegative, with zero diagonal; an edge exists iff its weight is strictly
positive.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

import numpy as np


class GraphParseError(ValueError):
    """Malformed graph file; carries the 1-based line number when known."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected weighted graph (V, W) stored as a dense weight matrix."""

    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
            raise ValueError(f"weight matrix must be square and nonempty, got shape {w.shape}")
        if not np.array_equal(w, w.T):
            raise ValueError("weight matrix must be symmetric")
        if np.any(np.diag(w) != 0.0):
            raise ValueError("weight matrix must have zero diagonal (no self-loops)")
        if np.any(w < 0.0):
            raise ValueError("weights must be nonnegative")
        w = w.copy()
        w.flags.writeable = False
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    def is_binary(self) -> bool:
        return bool(np.isin(self.w, (0.0, 1.0)).all())


@dataclass(frozen=True)
class DirectedGraph:
    """Simple directed graph: ordered (source, target) pairs of distinct nodes."""

    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((int(s), int(t)) for s, t in self.edges)
        seen = set()
        for s, t in edges:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ValueError(f"edge ({s}, {t}) out of range for n={self.n}")
            if s == t:
                raise ValueError(f"self-loop ({s}, {t}) not allowed")
            if (s, t) in seen:
                raise ValueError(f"duplicate edge ({s}, {t})")
            seen.add((s, t))
        object.__setattr__(self, "edges", edges)


@dataclass(frozen=True)
class Partition:
    """Partition of {0, ..., n-1} into K nonempty disjoint blocks."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(frozenset(int(i) for i in b) for b in self.blocks)
        if not blocks:
            raise ValueError("partition needs at least one block")
        seen: set = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block in partition")
            if not all(0 <= i < self.n for i in b):
                raise ValueError("block contains out-of-range node index")
            if seen & b:
                raise ValueError("blocks are not disjoint")
            seen |= b
        if seen != set(range(self.n)):
            raise ValueError("blocks do not cover all nodes")
        object.__setattr__(self, "blocks", blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    def labels(self) -> np.ndarray:
        lab = np.empty(self.n, dtype=int)
        for j, b in enumerate(self.blocks):
            lab[list(b)] = j
        return lab


def degree(g, i: int) -> float:
    """Weighted degree of node i (for directed graphs: incident edge count)."""
    if isinstance(g, DirectedGraph):
        if not 0 <= i < g.n:
            raise IndexError(f"node {i} out of range")
        return float(sum(1 for s, t in g.edges if i in (s, t)))
    if not 0 <= i < g.n:
        raise IndexError(f"node {i} out of range")
    return float(g.w[i].sum())


def degrees(g) -> np.ndarray:
    if isinstance(g, DirectedGraph):
        d = np.zeros(g.n)
        for s, t in g.edges:
            d[s] += 1
            d[t] += 1
        return d
    return g.w.sum(axis=1)


def degree_matrix(g) -> np.ndarray:
    return np.diag(degrees(g))


def edge_list(g: WeightedGraph) -> list:
    """Edges (i, j, w) with i < j, lexicographic by (i, j)."""
    ii, jj = np.nonzero(np.triu(g.w, k=1))
    return [(int(i), int(j), float(g.w[i, j])) for i, j in zip(ii, jj)]


def incidence_matrix(g: DirectedGraph) -> np.ndarray:
    """Oriented incidence matrix: column j has +1 at the source and -1 at the target of edge j."""
    m = np.zeros((g.n, len(g.edges)), dtype=int)
    for j, (s, t) in enumerate(g.edges):
        m[s, j] = 1
        m[t, j] = -1
    return m


def unoriented_incidence_matrix(g: WeightedGraph) -> np.ndarray:
    """Unoriented incidence matrix of a binary graph: +1 at both endpoints of each edge."""
    if not g.is_binary():
        raise ValueError("unoriented incidence matrix requires 0/1 weights")
    edges = edge_list(g)
    m = np.zeros((g.n, len(edges)), dtype=int)
    for col, (i, j, _) in enumerate(edges):
        m[i, col] = 1
        m[j, col] = 1
    return m


def adjacency_matrix(g) -> np.ndarray:
    """0/1 adjacency matrix; for weighted graphs a_ij = 1 iff w_ij > 0."""
    if isinstance(g, DirectedGraph):
        a = np.zeros((g.n, g.n), dtype=int)
        for s, t in g.edges:
            a[s, t] = 1
            a[t, s] = 1
        return a
    return (g.w > 0).astype(int)


def orient(g: WeightedGraph, seed: int = 0) -> DirectedGraph:
    """Assign each undirected edge one direction, deterministically from the seed."""
    if not g.is_binary():
        raise ValueError("orient requires 0/1 weights")
    rng = np.random.default_rng(seed)
    edges = []
    for i, j, _ in edge_list(g):
        edges.append((i, j) if rng.integers(2) == 0 else (j, i))
    return DirectedGraph(g.n, tuple(edges))


def vol(g: WeightedGraph, a) -> float:
    """Sum of degrees over the node set a."""
    idx = sorted(set(a))
    return float(g.w[idx].sum())


def links(g: WeightedGraph, a, b) -> float:
    """Total weight between node sets a and b."""
    ia = sorted(set(a))
    ib = sorted(set(b))
    if not ia or not ib:
        return 0.0
    return float(g.w[np.ix_(ia, ib)].sum())


def cut(g: WeightedGraph, a) -> float:
    comp = set(range(g.n)) - set(a)
    return links(g, a, comp)


def assoc(g: WeightedGraph, a) -> float:
    return links(g, a, a)


def ncut(g: WeightedGraph, p: Partition) -> float:
    """Normalized cut: sum over blocks of cut(A_j) / vol(A_j)."""
    if p.n != g.n:
        raise ValueError("partition and graph size mismatch")
    total = 0.0
    for b in p.blocks:
        v = vol(g, b)
        if v == 0.0:
            raise ValueError(f"block {sorted(b)} has zero volume (isolated-vertex cluster)")
        total += cut(g, b) / v
    return total


def connected_components(g: WeightedGraph) -> list:
    """Node sets of the connected components, each sorted, ordered by smallest member."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in np.nonzero(g.w[i] > 0)[0]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(int(j))
        comps.append(sorted(comp))
    return comps


def is_connected(g: WeightedGraph) -> bool:
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# Generators

def ring(n: int) -> WeightedGraph:
    if n < 3:
        raise ValueError("ring needs n >= 3")
    w = np.zeros((n, n))
    for i in range(n):
        j = (i + 1) % n
        w[i, j] = w[j, i] = 1.0
    return WeightedGraph(w)


def path(n: int) -> WeightedGraph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    w = np.zeros((n, n))
    for i in range(n - 1):
        w[i, i + 1] = w[i + 1, i] = 1.0
    return WeightedGraph(w)


def complete(n: int) -> WeightedGraph:
    if n < 2:
        raise ValueError("complete needs n >= 2")
    w = np.ones((n, n)) - np.eye(n)
    return WeightedGraph(w)


def bucky() -> WeightedGraph:
    """60-node 3-regular truncated-icosahedron skeleton, loaded from bundled data."""
    text = importlib.resources.files("spectralgraph.data").joinpath("bucky.txt").read_text()
    return parse_graph(text)


# ---------------------------------------------------------------------------
# File format: one edge per line `u v w` (w optional, default 1.0), optional
# leading header `nodes N`, `#` comments and blank lines ignored.

def parse_graph(text: str) -> WeightedGraph:
    n_declared = None
    entries = []  # (line_no, u, v, w)
    saw_edge = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "nodes":
            if saw_edge or n_declared is not None:
                raise GraphParseError(f"line {line_no}: 'nodes' header must appear once, before edges")
            if len(parts) != 2:
                raise GraphParseError(f"line {line_no}: malformed header {line!r}")
            try:
                n_declared = int(parts[1])
            except ValueError:
                raise GraphParseError(f"line {line_no}: malformed node count {parts[1]!r}") from None
            if n_declared < 1:
                raise GraphParseError(f"line {line_no}: node count must be >= 1")
            continue
        if len(parts) not in (2, 3):
            raise GraphParseError(f"line {line_no}: malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {line_no}: malformed node id in {line!r}") from None
        if u < 0 or v < 0:
            raise GraphParseError(f"line {line_no}: negative node id in {line!r}")
        if u == v:
            raise GraphParseError(f"line {line_no}: self-loop {u} {v}")
        if len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise GraphParseError(f"line {line_no}: malformed weight {parts[2]!r}") from None
        else:
            w = 1.0
        if not np.isfinite(w) or w <= 0.0:
            raise GraphParseError(f"line {line_no}: weight must be a positive finite number, got {parts[2]}")
        entries.append((line_no, u, v, w))
        saw_edge = True

    if not entries and n_declared is None:
        raise GraphParseError("no edges and no 'nodes' header")

    max_id = max((max(u, v) for _, u, v, _ in entries), default=-1)
    if n_declared is not None:
        if max_id >= n_declared:
            bad = next(ln for ln, u, v, _ in entries if max(u, v) >= n_declared)
            raise GraphParseError(f"line {bad}: node id exceeds declared count {n_declared}")
        n = n_declared
    else:
        n = max_id + 1
        used = set()
        for _, u, v, _ in entries:
            used.add(u)
            used.add(v)
        missing = sorted(set(range(n)) - used)
        if missing:
            raise GraphParseError(
                f"node ids are not contiguous (missing {missing}); add a 'nodes {n}' header "
                "if isolated nodes are intended"
            )

    w = np.zeros((n, n))
    for line_no, u, v, weight in entries:
        if w[u, v] != 0.0:
            raise GraphParseError(f"line {line_no}: duplicate edge {{{u}, {v}}}")
        w[u, v] = weight
        w[v, u] = weight
    return WeightedGraph(w)


def serialize_graph(g: WeightedGraph) -> str:
    """Graph file text: `nodes N` header plus one `u v w` line per edge, lexicographic."""
    lines = [f"nodes {g.n}"]
    for i, j, w in edge_list(g):
        lines.append(f"{i} {j} {w:.12g}")
    return "\n".join(lines) + "\n"
