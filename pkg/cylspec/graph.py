# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Base graphs, circulants, commutative decompositions and compatible numbering."""

import math
from collections import deque
from dataclasses import dataclass

import mpmath
import networkx as nx
import numpy as np

from cylspec import SCHEMA
from cylspec.algebra import eig_symmetric
from cylspec.display import Display
from cylspec.errors import ArgumentError, DegeneracyError, DimensionError, ValidationError


display = Display(__name__)

RESIDUAL_THRESHOLD = 1e-8
NUMBERING_ATTEMPTS = 5


def _frozen(arr):
    arr = np.array(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on ``0..n-1`` with a sorted edge list."""

    n: int
    adj: np.ndarray
    edges: tuple

    @classmethod
    def from_edges(cls, n, edges):
        if n < 0:
            raise ArgumentError("'n' value %r is invalid. Valid values are integers >= 0" % (n,))
        seen = set()
        adj = np.zeros((n, n), dtype=np.int64)
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError("edge (%d, %d) is outside the vertex range 0..%d" % (u, v, n - 1))
            if u == v:
                raise ArgumentError("edge (%d, %d) is a loop" % (u, v))
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ArgumentError("edge %s appears twice" % (key,))
            seen.add(key)
            adj[u, v] = adj[v, u] = 1
        return cls(n, _frozen(adj), tuple(sorted(seen)))

    @classmethod
    def from_adjacency(cls, adj):
        adj = np.array(adj, dtype=np.int64)
        if adj.size == 0:
            return cls(0, _frozen(np.zeros((0, 0))), ())
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise DimensionError("'adjacency' shape %s is invalid. Valid shapes are n x n" % (adj.shape,))
        if not np.isin(adj, (0, 1)).all():
            raise ValidationError("adjacency entries must be 0/1", identity="entries in {0,1}")
        if (adj != adj.T).any():
            raise ValidationError("adjacency is not symmetric", identity="A = A*")
        if np.diagonal(adj).any():
            raise ValidationError("adjacency has a loop", identity="zero diagonal")
        us, vs = np.nonzero(np.triu(adj))
        return cls(adj.shape[0], _frozen(adj), tuple(zip(us.tolist(), vs.tolist())))

    @property
    def m(self):
        return len(self.edges)

    @property
    def degrees(self):
        return tuple(int(d) for d in self.adj.sum(axis=1))

    @property
    def regular_degree(self):
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def neighbours(self):
        return [np.flatnonzero(row).tolist() for row in self.adj]

    def is_connected(self):
        if self.n == 0:
            return True
        return nx.is_connected(self.to_networkx())

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def to_dot(self, name="G"):
        g = self.to_networkx()
        g.graph["name"] = name
        return nx.nx_pydot.to_pydot(g).to_string()

    def to_json(self):
        return {"schema": SCHEMA, "n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ArgumentError):
                raise
            raise ArgumentError("'graph' document is invalid: %s" % exc)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.m)


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n):
    if n < 3:
        raise ArgumentError("'n' value %r is invalid. Valid values are integers >= 3" % (n,))
    return Graph.from_edges(n, [(u, (u + 1) % n) for u in range(n)])


def path(n):
    """P_n, the path on n vertices."""
    return Graph.from_edges(n, [(u, u + 1) for u in range(n - 1)])


def circulant(n, ks):
    """Cayley graph of Z_n with connection set {±k : k in ks}."""
    if n < 3:
        raise ArgumentError("'n' value %r is invalid. Valid values are integers >= 3" % (n,))
    ks = [int(k) for k in ks]
    if not ks:
        raise ArgumentError("'ks' is empty")
    if len(set(ks)) != len(ks):
        raise ArgumentError("'ks' value %s is invalid. Valid values are distinct" % (ks,))
    for k in ks:
        if not 1 <= k or not 2 * k < n:
            raise ArgumentError("'k' value %d is invalid. Valid values are 1 <= k < %s" % (k, n / 2))
    return Graph.from_edges(n, [(u, (u + k) % n) for k in ks for u in range(n)])


def tree_level_counts(shape, h, arity=3):
    """Vertices per level of the complete rooted or unrooted arity-regular tree."""
    if h < 0:
        raise ArgumentError("'h' value %r is invalid. Valid values are integers >= 0" % (h,))
    if shape == "rooted":
        return tuple([1] + [arity * (arity - 1) ** (level - 1) for level in range(1, h + 1)])
    if shape == "unrooted":
        return tuple(2 * (arity - 1) ** level for level in range(h + 1))
    raise ArgumentError("'shape' value %r is invalid. Valid values are rooted, unrooted" % (shape,))


def tree_level_offsets(counts):
    offsets, total = [], 0
    for c in counts:
        offsets.append(total)
        total += c
    return tuple(offsets)


def tree_parent(shape, level, k, arity=3):
    """Index within level-1 of the parent of vertex k of the given level."""
    if level == 0:
        return None
    if shape == "rooted" and level == 1:
        return 0
    return k // (arity - 1)


def tree_graph(shape, h, arity=3):
    """Complete tree in level-major order; unrooted trees start with the two joined centers."""
    counts = tree_level_counts(shape, h, arity)
    offsets = tree_level_offsets(counts)
    edges = []
    if shape == "unrooted":
        edges.append((0, 1))
    for level in range(1, h + 1):
        for k in range(counts[level]):
            parent = offsets[level - 1] + tree_parent(shape, level, k, arity)
            edges.append((parent, offsets[level] + k))
    return Graph.from_edges(sum(counts), edges)


def rooted_tree(h, arity=3):
    return tree_graph("rooted", h, arity)


def unrooted_tree(h, arity=3):
    return tree_graph("unrooted", h, arity)


def tree_leaves(shape, h, arity=3):
    counts = tree_level_counts(shape, h, arity)
    start = sum(counts[:-1])
    return tuple(range(start, start + counts[-1]))


def girth(g):
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    nbrs = g.neighbours()
    for s in range(g.n):
        dist, parent = {s: 0}, {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in nbrs[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def check_commutative(parts):
    """True iff the adjacency matrices of ``parts`` pairwise commute."""
    sizes = {p.n for p in parts}
    if len(sizes) > 1:
        raise ArgumentError("'parts' have different vertex counts %s" % sorted(sizes))
    mats = [p.adj for p in parts]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not np.array_equal(mats[i] @ mats[j], mats[j] @ mats[i]):
                return False
    return True


def _order_columns(vals, vecs):
    """Ascending by combined eigenvalue, with the all-ones direction moved last."""
    n = vecs.shape[0]
    order = sorted(range(n), key=lambda c: vals[c])
    ones = None
    for c in order:
        if abs(abs(float(np.sum(vecs[:, c]))) / math.sqrt(n) - 1.0) < 1e-9:
            ones = c
            break
    if ones is not None:
        order.remove(ones)
        order.append(ones)
    return order


def compatible_numbering_numeric(parts, rng=None, attempts=NUMBERING_ATTEMPTS, threshold=RESIDUAL_THRESHOLD):
    """Simultaneously diagonalize commuting parts.

    Returns ``(theta, residual, weights)`` where ``theta[i][j]`` is the
    eigenvalue of part i on the j-th shared eigenvector and ``weights`` is the
    random combination that separated the joint eigenspaces.
    """
    if not parts:
        raise ArgumentError("'parts' is empty")
    if not check_commutative(parts):
        raise ValidationError("parts do not commute", identity="G_i G_j = G_j G_i")
    rng = rng if rng is not None else np.random.default_rng(0)
    mats = [p.adj.astype(float) for p in parts]
    residual = math.inf
    for attempt in range(attempts):
        weights = rng.uniform(0.5, 1.5, size=len(mats)) if len(mats) > 1 else np.ones(1)
        combined = sum(w * a for w, a in zip(weights, mats))
        vals, vecs = np.linalg.eigh(combined)
        order = _order_columns(vals, vecs)
        vecs = vecs[:, order]
        theta, residual = [], 0.0
        for a in mats:
            d = vecs.T @ a @ vecs
            diag = np.diagonal(d).copy()
            residual = max(residual, float(np.max(np.abs(d - np.diag(diag)), initial=0.0)))
            theta.append(tuple(float(v) for v in diag))
        if residual < threshold:
            return tuple(theta), residual, tuple(float(w) for w in weights)
        display.warning(
            "simultaneous diagonalization attempt %d left residual %.3g, retrying", attempt + 1, residual
        )
    raise DegeneracyError(
        "no random combination separated the joint eigenspaces (residual %.3g after %d attempts)"
        % (residual, attempts)
    )


def compatible_numbering_mp(parts, weights):
    """The compatible numbering at the current mpmath precision, columns ordered as the float one."""
    n = parts[0].n
    combined = mpmath.matrix(n, n)
    for w, p in zip(weights, parts):
        wm = mpmath.mpf(w)
        for u, v in p.edges:
            combined[u, v] += wm
            combined[v, u] += wm
    vals, vecs = mpmath.eigsy(combined)
    cols = np.array([[float(vecs[r, c]) for c in range(n)] for r in range(n)])
    order = _order_columns([vals[c] for c in range(n)], cols)
    theta = []
    for p in parts:
        row = []
        for c in order:
            acc = mpmath.mpf(0)
            for u, v in p.edges:
                acc += 2 * vecs[u, c] * vecs[v, c]
            row.append(acc)
        theta.append(row)
    return theta


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Commutative decomposition of ``parent`` into edge-disjoint spanning parts.

    ``theta`` holds the compatible numbering in double precision; for
    circulant decompositions ``circulant = (n, ks)`` lets :meth:`theta_mp`
    recompute it in closed form at any precision.
    """

    parent: Graph
    parts: tuple
    theta: tuple
    regular_degrees: tuple = None
    circulant: tuple = None
    weights: tuple = None

    @property
    def t(self):
        return len(self.parts)

    @property
    def n(self):
        return self.parent.n

    @property
    def degree_matrices(self):
        return tuple(np.diag(p.adj.sum(axis=1)) for p in self.parts)

    @property
    def edge_counts(self):
        return tuple(p.m for p in self.parts)

    def theta_mp(self):
        """t x n table of mpf at the current working precision."""
        if self.circulant is not None:
            n, ks = self.circulant
            return [[2 * mpmath.cos(2 * mpmath.pi * j * k / n) for j in range(1, n + 1)] for k in ks]
        return compatible_numbering_mp(self.parts, self.weights)

    def to_json(self):
        data = {
            "schema": SCHEMA,
            "n": self.n,
            "parts": [[list(e) for e in p.edges] for p in self.parts],
            "theta": [list(row) for row in self.theta],
        }
        if self.circulant is not None:
            data["circulant"] = {"n": self.circulant[0], "ks": list(self.circulant[1])}
        return data


def validate_parts(parts):
    """Check the decomposition identities and return the parent graph."""
    if not parts:
        raise ArgumentError("'parts' is empty")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise ArgumentError("'parts' have different vertex counts")
    total = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(parts):
        if p.n and min(p.degrees) == 0:
            raise ValidationError("part %d has an isolated vertex" % i, identity="no isolated vertex")
        total += p.adj
    if total.max(initial=0) > 1:
        raise ValidationError("parts are not edge-disjoint", identity="edge-disjoint parts")
    if not check_commutative(parts):
        raise ValidationError("parts do not commute", identity="G_i G_j = G_j G_i")
    return Graph.from_adjacency(total)


def make_decomposition(parts, seed=0):
    parts = tuple(parts)
    parent = validate_parts(parts)
    theta, residual, weights = compatible_numbering_numeric(parts, np.random.default_rng(seed))
    display.vv("compatible numbering residual %.3g", residual)
    degs = [p.regular_degree for p in parts]
    regular = tuple(degs) if all(d is not None for d in degs) else None
    return Decomposition(parent, parts, theta, regular, None, weights)


def single_part_decomposition(g):
    return make_decomposition((g,))


def decompose_circulant(n, ks):
    parent = circulant(n, ks)
    parts = tuple(circulant(n, [k]) for k in ks)
    if not check_commutative(parts):
        raise ValidationError("circulant parts do not commute", identity="G_i G_j = G_j G_i")
    theta = tuple(tuple(2 * math.cos(2 * math.pi * j * k / n) for j in range(1, n + 1)) for k in ks)
    return Decomposition(parent, parts, theta, (2,) * len(ks), (n, tuple(int(k) for k in ks)), None)


def decomposition_from_json(data, seed=0):
    if "circulant" in data:
        spec = data["circulant"]
        return decompose_circulant(int(spec["n"]), [int(k) for k in spec["ks"]])
    try:
        n = int(data["n"])
        parts = [Graph.from_edges(n, [tuple(e) for e in edges]) for edges in data["parts"]]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ArgumentError):
            raise
        raise ArgumentError("'decomposition' document is invalid: %s" % exc)
    return make_decomposition(parts, seed)


def spectrum(g):
    return eig_symmetric(g.adj)
