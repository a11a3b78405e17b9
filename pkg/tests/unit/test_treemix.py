# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

import math
from fractions import Fraction

import numpy as np
import pytest

from cylspec.algebra import Polynomial, RationalFunction, charpoly_exact, charpoly_rational, real_roots
from cylspec.errors import ArgumentError, DegenerateLabelError
from cylspec.graph import tree_level_counts
from cylspec.treemix import (
    charpoly_rooted,
    charpoly_unrooted,
    consecutive_interlacing_check,
    eta_values,
    interlacing_check,
    mixing_charpoly,
    p_closed_form,
    p_closed_form_check,
    p_sequence,
    shifted_tree_matrix,
    tau_matrix,
    tree_mix,
    uniform_term,
)


def leaf_count(shape, h):
    return tree_level_counts(shape, h)[-1]


def test_rooted_star_with_uniform_leaves(x):
    assert charpoly_rooted(1, [x - 2] * 3) == (x - 2) ** 2 * (x - 3) * (x + 1)


def test_mixing_levels(x):
    tree, result = tree_mix("rooted", 1, [x, x, x])
    assert tree.level_counts == (1, 3)
    assert tree.label(0, 0) == RationalFunction(x**2 - 3, x)
    assert result.per_level[1] == RationalFunction.of(x**3)
    assert result.total == RationalFunction.of(x**4 - 3 * x**2)


@pytest.mark.parametrize("shape", ["rooted", "unrooted"])
@pytest.mark.parametrize("h", [1, 2, 3])
def test_mixing_equals_determinant(shape, h, x):
    rng = np.random.default_rng(h)
    count = leaf_count(shape, h)
    shifts = [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 4))) for _ in range(count)]
    labels = [x - s for s in shifts]
    assert mixing_charpoly(shape, h, labels) == charpoly_rational(shifted_tree_matrix(shape, h, shifts))


def test_unrooted_mixing_with_zero_shifts(x):
    # plain tree adjacency: the unrooted tree of height 1 is the double star on 6 vertices
    assert charpoly_unrooted(1, [x] * 4) == x**2 * (x**4 - 5 * x**2 + 4)


def test_degenerate_labels(x):
    with pytest.raises(DegenerateLabelError):
        tree_mix("rooted", 1, [0, x, x])
    # every level-1 label cancels to zero
    half = RationalFunction(Polynomial.constant(2), x)
    with pytest.raises(DegenerateLabelError):
        tree_mix("rooted", 2, [half] * 6)


def test_tree_mix_arguments(x):
    with pytest.raises(ArgumentError):
        tree_mix("rooted", 1, [x, x])
    with pytest.raises(ArgumentError):
        tree_mix("rooted", 0, [x])
    with pytest.raises(ArgumentError):
        tree_mix("binary", 1, [x, x, x])


def test_p_sequence(x):
    p = p_sequence(30)
    assert p[0] == Polynomial.one()
    assert p[2] == x**2 - 2 * x - 2
    assert p[4] == Polynomial.from_ints([4, 8, -6, -2, 1])
    for n in range(28):
        assert p[n + 2] == x * p[n + 1] - 2 * p[n]


@pytest.mark.parametrize("n", range(1, 11))
def test_p_n_has_simple_real_roots(n):
    roots = real_roots(p_sequence(n)[n])
    assert len(roots) == n
    assert all(mult == 1 for _, mult in roots)


def test_tau_matrix_charpoly():
    p = p_sequence(8)
    for n in range(1, 9):
        assert charpoly_exact(tau_matrix(n)) == p[n]
    assert tau_matrix(3).tolist() == [[2, 1, 0], [2, 0, 1], [0, 2, 0]]


@pytest.mark.parametrize("x0", [3, 5, -4, Fraction(7, 2), Fraction(-13, 2)])
def test_closed_form_real_branch(x0):
    for n in range(21):
        assert p_closed_form_check(n, x0) < 1e-20


@pytest.mark.parametrize("x0", [0, 1, Fraction(-5, 2)])
def test_closed_form_complex_branch(x0):
    for n in range(12):
        assert p_closed_form_check(n, x0) < 1e-20
    value = p_closed_form(3, x0)
    assert abs(value.imag) < 1e-25


def test_closed_form_branch_point():
    with pytest.raises(ArgumentError):
        p_closed_form(3, 2 * math.sqrt(2))


def test_interlacing():
    for n in range(2, 13):
        assert interlacing_check(n)
        assert consecutive_interlacing_check(n)


def test_interlacing_needs_the_weighted_path():
    # the unweighted values 2cos(jπ/n) already fail for p_4
    assert not interlacing_check(4, scale=2)
    assert eta_values(4) == pytest.approx([2, 0, -2], abs=1e-12)


@pytest.mark.parametrize("shape", ["rooted", "unrooted"])
@pytest.mark.parametrize("h", [1, 2, 3])
def test_uniform_term(shape, h):
    shifts = [2] * leaf_count(shape, h)
    assert uniform_term(shape, h) == charpoly_rational(shifted_tree_matrix(shape, h, shifts))
