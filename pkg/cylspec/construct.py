# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Assembly of a cylindrical construct from a decomposition and a coherent cylinder list."""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from cylspec import SCHEMA
from cylspec.cylinder import CoherentList, check_coherent, require_bsymmetric
from cylspec.display import Display
from cylspec.errors import ArgumentError, ConstructionError, ValidationError
from cylspec.graph import Graph


display = Display(__name__)


@dataclass(frozen=True, eq=False)
class Construct:
    """The assembled graph plus the bookkeeping to map vertices back.

    Vertex order: base blocks for v = 0..n-1, then the inner blocks of part 0
    edge by edge, then part 1, and so on.
    """

    graph: Graph
    n: int
    base_size: int
    inner_sizes: tuple
    edges: tuple
    inner_offsets: tuple

    @property
    def vertex_count(self):
        return self.graph.n

    def base_index(self, v, slot):
        return v * self.base_size + slot

    def inner_index(self, part, edge_index, slot):
        return self.inner_offsets[part] + edge_index * self.inner_sizes[part] + slot

    def manifest(self):
        rows = []
        for v in range(self.n):
            for s in range(self.base_size):
                rows.append({"vertex": self.base_index(v, s), "kind": "base", "v": v, "slot": s})
        for i, (size, edges) in enumerate(zip(self.inner_sizes, self.edges)):
            for e, (u, v) in enumerate(edges):
                for c in range(size):
                    rows.append(
                        {
                            "vertex": self.inner_index(i, e, c),
                            "kind": "inner",
                            "part": i,
                            "edge_index": e,
                            "edge": [u, v],
                            "slot": c,
                        }
                    )
        return rows

    def to_json(self):
        data = self.graph.to_json()
        data["degree_histogram"] = {str(k): v for k, v in sorted(degree_histogram(self).items())}
        return data

    def to_dot(self, name="construct"):
        return self.graph.to_dot(name)

    def manifest_json(self):
        return {"schema": SCHEMA, "vertices": self.manifest()}


def _place(a, rows, cols, block, what):
    target = a[np.ix_(rows, cols)]
    if (target & block).any():
        raise ConstructionError("%s would duplicate an existing edge" % what)
    a[np.ix_(rows, cols)] = target | block


def assemble(d, H):
    """Adjacency of the construct, block by block."""
    cylinders = tuple(H)
    if len(cylinders) != d.t:
        raise ArgumentError(
            "'cylinders' length %d is invalid. Valid length is the number of parts %d" % (len(cylinders), d.t)
        )
    for c in cylinders:
        require_bsymmetric(c)
    if not check_coherent(cylinders):
        raise ValidationError("cylinder bases differ", identity="identical bases")
    H = H if isinstance(H, CoherentList) else CoherentList(cylinders)

    n, b = d.n, H.base_size
    inner_sizes = tuple(c.inner_size for c in cylinders)
    edges = tuple(p.edges for p in d.parts)
    offsets, total = [], n * b
    for size, part_edges in zip(inner_sizes, edges):
        offsets.append(total)
        total += size * len(part_edges)

    a = np.zeros((total, total), dtype=np.int64)
    base = H.base
    for v in range(n):
        slots = list(range(v * b, (v + 1) * b))
        a[np.ix_(slots, slots)] = base
    for i, (cyl, part_edges) in enumerate(zip(cylinders, edges)):
        m = cyl.inner_size
        for e, (u, v) in enumerate(part_edges):
            bu = list(range(u * b, (u + 1) * b))
            bv = list(range(v * b, (v + 1) * b))
            _place(a, bu, bv, cyl.Ebb, "part %d edge (%d, %d)" % (i, u, v))
            _place(a, bv, bu, cyl.Ebb.T, "part %d edge (%d, %d)" % (i, v, u))
            if not m:
                continue
            inner = list(range(offsets[i] + e * m, offsets[i] + (e + 1) * m))
            a[np.ix_(inner, inner)] = cyl.C
            a[np.ix_(bu, inner)] = cyl.Ebc
            a[np.ix_(inner, bu)] = cyl.Ebc.T
            a[np.ix_(bv, inner)] = cyl.Ebpc
            a[np.ix_(inner, bv)] = cyl.Ebpc.T

    graph = Graph.from_adjacency(a)
    display.v("assembled construct with %d vertices and %d edges", graph.n, graph.m)
    return Construct(graph, n, b, inner_sizes, edges, tuple(offsets))


def degree_histogram(c):
    g = c.graph if isinstance(c, Construct) else c
    return dict(sorted(Counter(g.degrees).items()))
