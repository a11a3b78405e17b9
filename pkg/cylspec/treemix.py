# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Tree mixing: leaf-to-root label propagation on complete 3-regular trees.

A vertex whose children carry labels b, c (and d at a rooted root) gets the
label ``x - (1/b + 1/c [+ 1/d])``. The product of all labels of a level is
that level's resultant; the product over levels is the determinant of
``xI - T - diag(leaf shifts)`` for rooted trees, and needs the center-edge
correction ``(R0 - 1) / R0`` for unrooted ones.

Also home to the polynomials ``p_n`` that describe the uniform (all leaves
equal to ``x - 2``) case.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import mpmath
import numpy as np

from cylspec.algebra import Polynomial, RationalFunction, real_roots, to_mpf
from cylspec.display import Display
from cylspec.errors import ArgumentError, ConsistencyError, DegenerateLabelError
from cylspec.graph import tree_graph, tree_level_counts, tree_level_offsets, tree_parent


display = Display(__name__)

SHAPES = ("rooted", "unrooted")
CLOSED_FORM_DPS = 40
INTERLACING_TOL = 1e-9
BRANCH_TOL = Fraction(1, 10**12)

_X = RationalFunction.of(Polynomial.x())


@dataclass(frozen=True, eq=False)
class LabeledTree:
    shape: str
    h: int
    level_counts: tuple
    labels: tuple

    def label(self, level, k):
        return self.labels[level][k]

    def to_json(self):
        return {
            "shape": self.shape,
            "h": self.h,
            "level_counts": list(self.level_counts),
            "labels": [[lab.to_json() for lab in level] for level in self.labels],
        }


@dataclass(frozen=True, eq=False)
class MixResult:
    per_level: tuple
    total: RationalFunction

    def to_json(self):
        return {"per_level": [r.to_json() for r in self.per_level], "total": self.total.to_json()}


def _check_shape(shape, h):
    if shape not in SHAPES:
        raise ArgumentError("'shape' value %r is invalid. Valid values are %s" % (shape, ", ".join(SHAPES)))
    if h < 1:
        raise ArgumentError("'h' value %r is invalid. Valid values are integers >= 1" % (h,))


def _product(items):
    return reduce(lambda a, b: a * b, items, RationalFunction.of(1))


def tree_mix(shape, h, leaf_labels):
    """Propagate leaf labels to the top; returns ``(LabeledTree, MixResult)``."""
    _check_shape(shape, h)
    counts = tree_level_counts(shape, h)
    leaves = [RationalFunction.of(a) for a in leaf_labels]
    if len(leaves) != counts[-1]:
        raise ArgumentError(
            "'leaf_labels' length %d is invalid. Valid length is %d for a %s tree of height %d"
            % (len(leaves), counts[-1], shape, h)
        )
    for k, lab in enumerate(leaves):
        if lab.is_zero:
            raise DegenerateLabelError("label of leaf %d is identically zero" % k)
    labels = [None] * (h + 1)
    labels[h] = tuple(leaves)
    for level in range(h - 1, -1, -1):
        sums = [RationalFunction.of(0) for _ in range(counts[level])]
        for k, child in enumerate(labels[level + 1]):
            if child.is_zero:
                raise DegenerateLabelError("label of vertex %d at level %d is identically zero" % (k, level + 1))
            parent = tree_parent(shape, level + 1, k)
            sums[parent] = sums[parent] + child.inverse()
        labels[level] = tuple(_X - s for s in sums)
        display.vvv("mixed level %d of %s tree (h=%d)", level, shape, h)
    per_level = tuple(_product(level) for level in labels)
    tree = LabeledTree(shape, h, counts, tuple(labels))
    return tree, MixResult(per_level, _product(per_level))


def _as_polynomial(rf, what):
    if not rf.is_polynomial:
        raise ConsistencyError("%s did not clear to a polynomial: remainder denominator %s" % (what, rf.den))
    return rf.num


def charpoly_rooted(h, leaf_labels):
    """R(T) of the rooted tree: det(xI - T - leaf shifts) when leaves are x - θ."""
    _, result = tree_mix("rooted", h, leaf_labels)
    return _as_polynomial(result.total, "rooted mixing")


def charpoly_unrooted(h, leaf_labels):
    """R(T) (R0 - 1) / R0, with R0 the product of the two center labels."""
    _, result = tree_mix("unrooted", h, leaf_labels)
    r0 = result.per_level[0]
    if r0.is_zero:
        raise DegenerateLabelError("center labels multiply to zero")
    return _as_polynomial(result.total * (r0 - 1) / r0, "unrooted mixing")


def mixing_charpoly(shape, h, leaf_labels):
    if shape == "rooted":
        return charpoly_rooted(h, leaf_labels)
    return charpoly_unrooted(h, leaf_labels)


def shifted_tree_matrix(shape, h, shifts):
    """Tree adjacency with ``shifts`` on the leaf diagonal, as rationals (for the exact oracle)."""
    tree = tree_graph(shape, h)
    counts = tree_level_counts(shape, h)
    start = tree_level_offsets(counts)[-1]
    rows = [[Fraction(int(v)) for v in row] for row in tree.adj.tolist()]
    for k, s in enumerate(shifts):
        rows[start + k][start + k] += Fraction(s)
    return rows


def p_sequence(n_max):
    """p_0 = 1, p_1 = x - 2, p_{n+2} = x p_{n+1} - 2 p_n."""
    if n_max < 0:
        raise ArgumentError("'n_max' value %r is invalid. Valid values are integers >= 0" % (n_max,))
    x = Polynomial.x()
    seq = [Polynomial.one(), x - 2]
    while len(seq) <= n_max:
        seq.append(x * seq[-1] - 2 * seq[-2])
    return seq[: n_max + 1]


def tau_matrix(n):
    """Tridiagonal matrix with diagonal (2, 0, ..., 0), superdiagonal 1 and subdiagonal 2."""
    if n < 1:
        raise ArgumentError("'n' value %r is invalid. Valid values are integers >= 1" % (n,))
    m = np.zeros((n, n), dtype=np.int64)
    m[0, 0] = 2
    for i in range(n - 1):
        m[i, i + 1] = 1
        m[i + 1, i] = 2
    return m


def p_closed_form(n, x0, dps=CLOSED_FORM_DPS):
    """Closed form of p_n(x0) through the roots α, β of 2t^2 - xt + 1; complex when x0^2 < 8."""
    x0 = Fraction(x0)
    if abs(x0 * x0 - 8) <= BRANCH_TOL:
        raise ArgumentError("'x0' value %s is invalid: x0^2 = 8 is the branch point" % float(x0))
    with mpmath.workdps(dps):
        x = to_mpf(x0)
        root = mpmath.sqrt(x * x - 8) if x * x > 8 else mpmath.sqrt(mpmath.mpc(x * x - 8))
        alpha, beta = (x + root) / 4, (x - root) / 4
        value = (beta ** -(n + 1) - alpha ** -(n + 1) - 2 * (beta**-n - alpha**-n)) / (2 * (alpha - beta))
        return value


def p_closed_form_check(n, x0, dps=CLOSED_FORM_DPS):
    """Relative distance between the closed form and the recurrence at x0."""
    exact = p_sequence(n)[n](Fraction(x0))
    with mpmath.workdps(dps):
        closed = p_closed_form(n, x0, dps)
        reference = to_mpf(exact)
        residual = abs(closed - reference) / max(mpmath.mpf(1), abs(reference))
        return float(residual)


def _descending_roots(p):
    return sorted((r for r, mult in real_roots(p) for _ in range(mult)), reverse=True)


def eta_values(n, scale=2 * math.sqrt(2)):
    """scale * cos(jπ/n) for j = 1..n-1, descending."""
    return [scale * math.cos(j * math.pi / n) for j in range(1, n)]


def _interlaces(outer, inner, tol):
    if len(outer) != len(inner) + 1:
        return False
    for j, eta in enumerate(inner):
        if not (outer[j] + tol >= eta >= outer[j + 1] - tol):
            return False
    return True


def interlacing_check(n, scale=2 * math.sqrt(2), tol=INTERLACING_TOL):
    """Roots of p_n interlaced by the spectrum of τ(n) without its first row and column.

    That submatrix is similar to a path with weights √2, so its eigenvalues
    are 2√2 cos(jπ/n); pass ``scale=2`` to test the unweighted values instead.
    """
    if n < 2:
        raise ArgumentError("'n' value %r is invalid. Valid values are integers >= 2" % (n,))
    return _interlaces(_descending_roots(p_sequence(n)[n]), eta_values(n, scale), tol)


def consecutive_interlacing_check(n, tol=INTERLACING_TOL):
    """Roots of p_{n-1} interlace those of p_n."""
    if n < 2:
        raise ArgumentError("'n' value %r is invalid. Valid values are integers >= 2" % (n,))
    seq = p_sequence(n)
    return _interlaces(_descending_roots(seq[n]), _descending_roots(seq[n - 1]), tol)


def uniform_term(shape, h):
    """φ(T + Θ) with every leaf shifted by 2, in closed form through p_n."""
    _check_shape(shape, h)
    p = p_sequence(h + 1)
    counts = tree_level_counts(shape, h)
    x = Polynomial.x()
    if shape == "unrooted":
        result = p[h + 1] ** 2 - p[h] ** 2
        for i in range(1, h + 1):
            result = result * p[i] ** (counts[h - i + 1] // 2)
        return result
    result = p[h] ** 2 * (x * p[h] - 3 * p[h - 1])
    for i in range(1, h):
        result = result * p[i] ** (counts[h - i + 1] // 2)
    return result
