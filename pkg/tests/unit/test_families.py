# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import numpy as np
import pytest

from cylspec.algebra import charpoly_exact, eig_symmetric
from cylspec.checks import rooted_h2_expected, unrooted_h2_expected
from cylspec.construct import assemble
from cylspec.errors import ArgumentError, UnsupportedHeightError
from cylspec.families import (
    binary_strings,
    coxeter,
    cyclic_labeling,
    factor_profile,
    family_by_name,
    generalized_petersen,
    gi_graph,
    i_graph,
    i_graph_eigenvalues,
    inner_vertex_demo,
    ramanujan_check,
    ramanujan_outliers,
    reverse_bits,
    rooted_leaf_ks,
    symmetric_family_rooted,
    symmetric_family_unrooted,
    unrooted_leaf_ks,
)
from cylspec.graph import Graph, complete, decompose_circulant, girth
from cylspec.spectra import compare_with_oracle


def test_reverse_bits():
    assert reverse_bits("") == 0
    assert reverse_bits("011") == 6
    assert reverse_bits("1") == 1
    assert binary_strings(2) == ["00", "01", "10", "11"]
    assert binary_strings(0) == [""]


@pytest.mark.parametrize("h, N", [(1, 4), (2, 16), (3, 32)])
def test_cyclic_labeling_splits_cosets(h, N):
    labeling = cyclic_labeling(h, N)
    assert labeling.check_union()
    assert labeling.residues("") == frozenset(range(N))


def test_cyclic_labeling_needs_divisible_order():
    with pytest.raises(ArgumentError):
        cyclic_labeling(3, 12)


def test_leaf_steps():
    assert rooted_leaf_ks(1) == (7, [1, 2, 3])
    assert rooted_leaf_ks(2) == (13, [1, 5, 3, 2, 4, 6])
    n, ks = unrooted_leaf_ks(2)
    assert n == 17
    assert sorted(ks) == list(range(1, 9))


def test_unsupported_heights():
    for h in (0, -1):
        with pytest.raises(UnsupportedHeightError, match=">= 1"):
            unrooted_leaf_ks(h)
        with pytest.raises(UnsupportedHeightError, match=">= 1"):
            rooted_leaf_ks(h)
    with pytest.raises(UnsupportedHeightError):
        symmetric_family_unrooted(0)
    with pytest.raises(UnsupportedHeightError):
        rooted_leaf_ks(3)
    with pytest.raises(UnsupportedHeightError):
        unrooted_leaf_ks(3)


def _translate(ks, g, n):
    return [min(g * k % n, n - g * k % n) for k in ks]


@pytest.mark.parametrize("leaf_ks", [unrooted_leaf_ks, rooted_leaf_ks])
def test_leaf_steps_are_translation_invariant(leaf_ks):
    n, ks = leaf_ks(2)
    for g in range(1, n):
        assert sorted(_translate(ks, g, n)) == sorted(ks)


@pytest.mark.parametrize("h", [1, pytest.param(2, marks=pytest.mark.slow)])
def test_translated_family_has_the_same_spectrum(h):
    spec = symmetric_family_rooted(h)
    n, ks = spec.parameters["n"], spec.ks
    expected = charpoly_exact(spec.assemble().graph.adj)
    for g in range(2, n):
        d = decompose_circulant(n, _translate(ks, g, n))
        assert charpoly_exact(assemble(d, spec.cylinders).graph.adj) == expected


def test_coxeter_graph():
    spec = coxeter()
    g = spec.assemble().graph
    assert spec.vertex_count == g.n == 28
    assert g.regular_degree == 3
    assert girth(g) == 7
    assert spec.ks == [1, 2, 3]


def test_generalized_petersen_is_petersen(x):
    spec = generalized_petersen(5, 2)
    report = compare_with_oracle(spec.decomposition, spec.cylinders)
    assert report.match
    assert report.oracle_poly == (x - 3) * (x - 1) ** 5 * (x + 2) ** 4
    assert spec.to_json()["parameters"] == {"n": 5, "k": 2}


@pytest.mark.parametrize("n, k, l", [(7, 1, 2), (8, 1, 3), (9, 2, 4), (12, 1, 5)])
def test_i_graph_closed_form(n, k, l):
    eigs = np.sort(eig_symmetric(i_graph(n, k, l).assemble().graph.adj))
    assert eigs == pytest.approx(i_graph_eigenvalues(n, k, l), abs=1e-8)


def test_i_graph_needs_distinct_steps():
    with pytest.raises(ArgumentError):
        i_graph(7, 2, 2)


def test_family_by_name():
    assert family_by_name("gi", n=7, ks=[1, 2, 3]).vertex_count == 21
    assert family_by_name("petersen").vertex_count == 10
    assert family_by_name("sym-rooted", h=1).ks == [1, 2, 3]
    with pytest.raises(ArgumentError):
        family_by_name("gi")
    with pytest.raises(ArgumentError):
        family_by_name("heawood")


def test_ramanujan_check():
    two_squares = Graph.from_edges(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
    report = ramanujan_check(gi_graph(5, [1, 2]).assemble().graph, 3)
    assert report.is_ramanujan
    assert report.second == pytest.approx(2)
    with pytest.raises(ArgumentError):
        ramanujan_check(two_squares, 2)
    with pytest.raises(ArgumentError):
        ramanujan_check(complete(4), 2)


def test_factor_profile_of_coxeter_family():
    profile = factor_profile(symmetric_family_rooted(1))
    assert profile["groups"] == [[1, 2, 3, 4, 5, 6], [7]]
    assert profile["uniform_term_match"]
    assert profile["max_spread"] < 1e-8


def test_ramanujan_outliers():
    outliers = ramanujan_outliers(symmetric_family_rooted(1))
    assert len(outliers["per_j"]) == 7
    assert outliers["other"] == 0


def test_inner_vertex_demo_on_k4():
    report = inner_vertex_demo(complete(4))
    assert report["vertices"] == report["expected_vertices"] == 14
    assert report["zero_multiplicity"] == 2
    assert report["zero_bound_holds"]
    assert report["shifted_present"]
    assert report["pairs_present"]
    assert report["predicted_distance"] < 1e-8
    # the displayed spectrum claims nd/2 = 6 zeros
    assert len(report["deviations"]) == 1


def test_inner_vertex_demo_needs_regular_base():
    with pytest.raises(ArgumentError):
        inner_vertex_demo(Graph.from_edges(3, [(0, 1), (1, 2)]))


@pytest.mark.slow
def test_unrooted_family_golden():
    spec = symmetric_family_unrooted(2)
    report = compare_with_oracle(spec.decomposition, spec.cylinders)
    assert spec.vertex_count == 238
    assert report.theorem_poly == unrooted_h2_expected()
    assert report.match


@pytest.mark.slow
def test_rooted_family_golden():
    spec = symmetric_family_rooted(2)
    report = compare_with_oracle(spec.decomposition, spec.cylinders)
    assert spec.vertex_count == 130
    assert report.theorem_poly == rooted_h2_expected()
    assert report.match
    ramanujan = ramanujan_check(report.construct.graph, 3)
    assert ramanujan.is_ramanujan
