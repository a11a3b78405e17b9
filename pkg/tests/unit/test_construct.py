# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import pytest

from cylspec.algebra import charpoly_exact
from cylspec.construct import assemble, degree_histogram
from cylspec.cylinder import coherent, myexample_cylinder, path_cylinder, pi_t_cylinder, zoo
from cylspec.errors import ArgumentError, ConstructionError, ValidationError
from cylspec.graph import Decomposition, complete, cycle, decompose_circulant, girth, single_part_decomposition


def test_petersen_from_k2_cylinders(x):
    d = decompose_circulant(5, [1, 2])
    construct = assemble(d, coherent([pi_t_cylinder(2, 0), pi_t_cylinder(2, 1)]))
    g = construct.graph
    assert g.n == 10 and g.regular_degree == 3
    assert girth(g) == 5
    assert charpoly_exact(g.adj) == (x - 3) * (x - 1) ** 5 * (x + 2) ** 4


def test_subdivision_layout():
    construct = assemble(single_part_decomposition(complete(4)), coherent([path_cylinder(1)]))
    assert construct.vertex_count == 10
    assert construct.graph.m == 12
    assert degree_histogram(construct) == {2: 6, 3: 4}
    assert construct.inner_offsets == (4,)
    u, v = construct.edges[0][0]
    inner = construct.inner_index(0, 0, 0)
    assert construct.graph.adj[inner, construct.base_index(u, 0)] == 1
    assert construct.graph.adj[inner, construct.base_index(v, 0)] == 1


def test_manifest_maps_every_vertex():
    construct = assemble(single_part_decomposition(complete(4)), coherent([myexample_cylinder()]))
    rows = construct.manifest()
    assert [r["vertex"] for r in rows] == list(range(construct.vertex_count))
    assert sum(1 for r in rows if r["kind"] == "base") == 8
    inner = [r for r in rows if r["kind"] == "inner"]
    assert len(inner) == 6
    assert inner[0]["edge"] == list(construct.edges[0][0])
    doc = construct.to_json()
    assert doc["n"] == 14
    assert doc["degree_histogram"] == {"4": 6, "7": 8}


def test_assemble_checks_lengths_and_bases():
    d = decompose_circulant(5, [1, 2])
    with pytest.raises(ArgumentError):
        assemble(d, coherent([path_cylinder(0)]))
    with pytest.raises(ValidationError):
        assemble(d, (path_cylinder(0), zoo("pi:0")))


def test_overlapping_parts_are_caught():
    c3 = cycle(3)
    d = Decomposition(c3, (c3, c3), ((0.0,) * 3, (0.0,) * 3))
    with pytest.raises(ConstructionError):
        assemble(d, coherent([path_cylinder(0), path_cylinder(0)]))
