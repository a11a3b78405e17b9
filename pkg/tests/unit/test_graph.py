# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import json
import math

import numpy as np
import pytest

from conftest import fixture_path

from cylspec.errors import ArgumentError, DimensionError, ValidationError
from cylspec.graph import (
    Graph,
    circulant,
    complete,
    cycle,
    decompose_circulant,
    decomposition_from_json,
    girth,
    make_decomposition,
    path,
    single_part_decomposition,
    spectrum,
    tree_graph,
    tree_leaves,
    tree_level_counts,
    validate_parts,
)


def petersen():
    with open(fixture_path("graph.json")) as f:
        return Graph.from_json(json.load(f))


def test_from_edges_rejects_bad_edges():
    with pytest.raises(ArgumentError, match="loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ArgumentError, match="twice"):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ArgumentError, match="outside"):
        Graph.from_edges(3, [(0, 3)])


def test_from_adjacency_validates():
    with pytest.raises(ValidationError) as info:
        Graph.from_adjacency([[0, 1], [0, 0]])
    assert info.value.identity == "A = A*"
    with pytest.raises(ValidationError):
        Graph.from_adjacency([[1, 0], [0, 0]])
    with pytest.raises(DimensionError):
        Graph.from_adjacency([[0, 1, 0]])
    g = Graph.from_adjacency(complete(4).adj)
    assert g == complete(4)


def test_json_round_trip():
    g = petersen()
    assert g.n == 10 and g.m == 15
    assert Graph.from_json(g.to_json()) == g
    with pytest.raises(ArgumentError):
        Graph.from_json({"n": 3})


def test_circulant():
    assert circulant(7, [1, 2, 3]) == complete(7)
    assert circulant(6, [1]) == cycle(6)
    assert circulant(5, [2]).regular_degree == 2
    with pytest.raises(ArgumentError):
        circulant(6, [3])
    with pytest.raises(ArgumentError):
        circulant(7, [1, 1])
    with pytest.raises(ArgumentError):
        circulant(7, [])


def test_tree_shapes():
    assert tree_level_counts("rooted", 2) == (1, 3, 6)
    assert tree_level_counts("unrooted", 2) == (2, 4, 8)
    rooted = tree_graph("rooted", 2)
    assert rooted.n == 10 and rooted.m == 9
    assert rooted.degrees[:4] == (3, 3, 3, 3)
    unrooted = tree_graph("unrooted", 1)
    assert unrooted.n == 6 and unrooted.m == 5
    assert tree_leaves("unrooted", 1) == (2, 3, 4, 5)
    with pytest.raises(ArgumentError):
        tree_level_counts("binary", 1)


def test_girth():
    assert girth(petersen()) == 5
    assert girth(complete(4)) == 3
    assert girth(cycle(8)) == 8
    assert girth(path(5)) == math.inf


def test_connectivity_and_dot():
    assert petersen().is_connected()
    assert not Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    dot = cycle(3).to_dot("triangle")
    assert "triangle" in dot
    assert "--" in dot


def test_validate_parts_rejects_non_commuting():
    c6 = cycle(6)
    matching = Graph.from_edges(6, [(0, 2), (1, 4), (3, 5)])
    with pytest.raises(ValidationError) as info:
        validate_parts((c6, matching))
    assert info.value.identity == "G_i G_j = G_j G_i"


def test_validate_parts_rejects_isolated_and_overlap():
    with pytest.raises(ValidationError) as info:
        validate_parts((Graph.from_edges(3, [(0, 1)]),))
    assert info.value.identity == "no isolated vertex"
    with pytest.raises(ValidationError) as info:
        validate_parts((cycle(4), cycle(4)))
    assert info.value.identity == "edge-disjoint parts"


def test_compatible_numbering_sums_to_spectrum():
    with open(fixture_path("d_parts.json")) as f:
        d = decomposition_from_json(json.load(f))
    assert d.t == 2
    assert d.regular_degrees == (2, 1)
    combined = np.sort(np.sum(np.array(d.theta), axis=0))
    assert combined == pytest.approx(np.sort(spectrum(d.parent)), abs=1e-9)
    # the all-ones vector comes last
    assert [row[-1] for row in d.theta] == pytest.approx([2, 1])


def test_compatible_numbering_diagonalizes_each_part():
    d = make_decomposition((cycle(6), Graph.from_edges(6, [(0, 3), (1, 4), (2, 5)])), seed=3)
    for part, row in zip(d.parts, d.theta):
        assert np.sort(row) == pytest.approx(np.sort(spectrum(part)), abs=1e-9)


def test_decompose_circulant_closed_form():
    d = decompose_circulant(5, [1, 2])
    assert d.parent == complete(5)
    assert d.circulant == (5, (1, 2))
    assert d.theta[0][-1] == pytest.approx(2)
    assert decomposition_from_json(d.to_json()).circulant == (5, (1, 2))
    with open(fixture_path("d.json")) as f:
        assert decomposition_from_json(json.load(f)).parent == complete(5)


@pytest.mark.parametrize("n, ks", [(5, [1, 2]), (7, [1, 2, 3]), (12, [1, 5]), (13, [1, 5, 3, 2, 4, 6]), (17, [2, 7])])
def test_circulant_numbering_matches_spectra(n, ks):
    d = decompose_circulant(n, ks)
    for part, row in zip(d.parts, d.theta):
        assert np.sort(row) == pytest.approx(np.sort(spectrum(part)), abs=1e-9)
    parent = np.sort(spectrum(d.parent))
    sums = np.sum(np.array(d.theta), axis=0)
    for s in sums:
        assert np.min(np.abs(parent - s)) < 1e-9
    assert np.sort(sums) == pytest.approx(parent, abs=1e-9)


def test_single_part_decomposition_of_irregular_graph():
    d = single_part_decomposition(path(4))
    assert d.regular_degrees is None
    assert np.sort(d.theta[0]) == pytest.approx(np.sort(spectrum(path(4))), abs=1e-9)
