# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Named construct families and spectral checks on them.

Circulant bases with K_t-cylinders give the GI-graphs; circulant bases with
tree cylinders whose leaves are labelled through cosets of a cyclic group
give the two symmetric families (unrooted with n = 2^(h+2) + 1, rooted with
n = 3 * 2^h + 1, both prime).
"""

import math
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime, primitive_root

from cylspec import SCHEMA
from cylspec.construct import assemble
from cylspec.cylinder import (
    coherent,
    myexample_cylinder,
    pi_t_cylinder,
    tree_cylinder_rooted,
    tree_cylinder_unrooted,
)
from cylspec.display import Display
from cylspec.errors import ArgumentError, UnsupportedHeightError
from cylspec.graph import decompose_circulant, single_part_decomposition
from cylspec.algebra import eig_symmetric
from cylspec.spectra import factor_matrices
from cylspec.treemix import uniform_term


display = Display(__name__)

RAMANUJAN_SLACK = 1e-9
ZERO_TOL = 1e-8
FAMILIES = ("coxeter", "gi", "petersen", "sym-unrooted", "sym-rooted")


def reverse_bits(s):
    """Natural value of the reversed bit string; 0 for the empty string."""
    return int(s[::-1], 2) if s else 0


def binary_strings(length):
    return [format(v, "0%db" % length) if length else "" for v in range(2**length)]


@dataclass(frozen=True)
class CyclicLabeling:
    """Coset labels a^offset <a^modulus> of a binary tree inside a cyclic group of order N."""

    N: int
    h: int
    coset_of: dict = field(compare=False)

    def residues(self, s):
        offset, modulus = self.coset_of[s]
        return frozenset(range(offset % modulus, self.N, modulus))

    def check_union(self):
        for s in self.coset_of:
            if len(s) == self.h:
                continue
            left, right = self.residues(s + "0"), self.residues(s + "1")
            if left & right or left | right != self.residues(s):
                return False
        return True


def cyclic_labeling(h, N):
    if h < 0:
        raise ArgumentError("'h' value %r is invalid. Valid values are integers >= 0" % (h,))
    if N % (2**h):
        raise ArgumentError("'N' value %d is invalid. Valid values are multiples of %d" % (N, 2**h))
    coset_of = {}
    for length in range(h + 1):
        for s in binary_strings(length):
            coset_of[s] = (reverse_bits(s), 2**length)
    return CyclicLabeling(N, h, coset_of)


@dataclass(frozen=True, eq=False)
class FamilySpec:
    name: str
    parameters: dict
    decomposition: object
    cylinders: object

    @property
    def ks(self):
        return list(self.decomposition.circulant[1]) if self.decomposition.circulant else None

    @property
    def vertex_count(self):
        d, H = self.decomposition, self.cylinders
        return d.n * H.base_size + sum(c.inner_size * p.m for c, p in zip(H, d.parts))

    def assemble(self):
        return assemble(self.decomposition, self.cylinders)

    def to_json(self):
        return {
            "schema": SCHEMA,
            "name": self.name,
            "parameters": dict(self.parameters),
            "vertices": self.vertex_count,
            "decomposition": self.decomposition.to_json(),
            "cylinders": [c.name for c in self.cylinders],
        }


def gi_graph(n, ks):
    """C_n(k_0, ..., k_{t-1}) with the K_t-cylinder joining the i-th vertices on part i."""
    d = decompose_circulant(n, ks)
    t = len(ks)
    H = coherent(pi_t_cylinder(t, i) for i in range(t))
    return FamilySpec("gi", {"n": n, "ks": list(ks)}, d, H)


def i_graph(n, k, l):
    if k == l:
        raise ArgumentError("'k' and 'l' must differ, got %d twice" % k)
    spec = gi_graph(n, [k, l])
    return FamilySpec("igraph", {"n": n, "k": k, "l": l}, spec.decomposition, spec.cylinders)


def generalized_petersen(n, k):
    spec = i_graph(n, 1, k)
    return FamilySpec("petersen", {"n": n, "k": k}, spec.decomposition, spec.cylinders)


def i_graph_eigenvalues(n, k, l):
    """The 2n values (c_k + c_l) ± sqrt((c_k - c_l)^2 + 1), c_m = cos(2πjm/n), j = 1..n."""
    if k == l:
        raise ArgumentError("'k' and 'l' must differ, got %d twice" % k)
    values = []
    for j in range(1, n + 1):
        ck = math.cos(2 * math.pi * j * k / n)
        cl = math.cos(2 * math.pi * j * l / n)
        root = math.sqrt((ck - cl) ** 2 + 1)
        values.extend((ck + cl + root, ck + cl - root))
    return sorted(values)


def coxeter():
    d = decompose_circulant(7, [1, 2, 3])
    H = coherent(tree_cylinder_rooted(1, i) for i in range(3))
    return FamilySpec("coxeter", {}, d, H)


def _leaf_k(g, n):
    return min(g, n - g)


def _check_height(h):
    if h < 1:
        raise UnsupportedHeightError("'h' value %r is invalid. Valid values are integers >= 1" % (h,))


def unrooted_leaf_ks(h):
    _check_height(h)
    n = 2 ** (h + 2) + 1
    if not isprime(n):
        raise UnsupportedHeightError("h=%d gives n=%d, which is not prime" % (h, n))
    a = primitive_root(n)
    labeling = cyclic_labeling(h + 1, n - 1)
    return n, [_leaf_k(pow(a, labeling.coset_of[s][0], n), n) for s in binary_strings(h + 1)]


def symmetric_family_unrooted(h):
    """Unrooted tree cylinders on K_n, n = 2^(h+2) + 1, leaf i on C_n(k_i)."""
    n, ks = unrooted_leaf_ks(h)
    display.v("unrooted family h=%d: n=%d, ks=%s", h, n, ks)
    d = decompose_circulant(n, ks)
    H = coherent(tree_cylinder_unrooted(h, i) for i in range(len(ks)))
    return FamilySpec("sym-unrooted", {"h": h, "n": n, "ks": ks}, d, H)


def rooted_leaf_ks(h):
    _check_height(h)
    n = 3 * 2**h + 1
    if not isprime(n):
        raise UnsupportedHeightError("h=%d gives n=%d, which is not prime" % (h, n))
    a0 = primitive_root(n)
    a = pow(a0, 3, n)
    b = pow(a0, (n - 1) // 3, n)
    labeling = cyclic_labeling(h - 1, n - 1)
    ks = []
    for c in range(3):
        for s in binary_strings(h - 1):
            g = pow(b, c, n) * pow(a, labeling.coset_of[s][0], n) % n
            ks.append(_leaf_k(g, n))
    return n, ks


def symmetric_family_rooted(h):
    """Rooted tree cylinders on K_n, n = 3 * 2^h + 1; the three root subtrees are translated by b, b^2."""
    n, ks = rooted_leaf_ks(h)
    display.v("rooted family h=%d: n=%d, ks=%s", h, n, ks)
    d = decompose_circulant(n, ks)
    H = coherent(tree_cylinder_rooted(h, i) for i in range(len(ks)))
    return FamilySpec("sym-rooted", {"h": h, "n": n, "ks": ks}, d, H)


def family_by_name(name, n=None, ks=None, h=None):
    if name == "coxeter":
        return coxeter()
    if name == "gi":
        if n is None or not ks:
            raise ArgumentError("family gi needs --n and --ks")
        return gi_graph(n, ks)
    if name == "petersen":
        return generalized_petersen(n or 5, (ks or [2])[0])
    if name == "sym-unrooted":
        return symmetric_family_unrooted(2 if h is None else h)
    if name == "sym-rooted":
        return symmetric_family_rooted(2 if h is None else h)
    raise ArgumentError("'family' value %r is invalid. Valid values are %s" % (name, ", ".join(FAMILIES)))


@dataclass(frozen=True)
class RamanujanReport:
    is_ramanujan: bool
    second: float
    bound: float
    degree: int

    def to_json(self):
        return {"is_ramanujan": self.is_ramanujan, "second": self.second, "bound": self.bound, "degree": self.degree}


def ramanujan_check(g, d):
    if g.regular_degree != d:
        raise ArgumentError("'d' value %d is invalid: the graph is not %d-regular" % (d, d))
    if not g.is_connected():
        raise ArgumentError("ramanujan check needs a connected graph")
    eigs = eig_symmetric(g.adj)
    inner = [abs(v) for v in eigs if abs(v) < d - RAMANUJAN_SLACK]
    second = max(inner, default=0.0)
    bound = 2 * math.sqrt(d - 1)
    return RamanujanReport(bool(second <= bound + RAMANUJAN_SLACK), float(second), bound, d)


def _group_factors(coeff_rows, tol):
    groups = []
    for j, row in enumerate(coeff_rows, start=1):
        for group in groups:
            if np.max(np.abs(coeff_rows[group[0] - 1] - row)) <= tol * max(1.0, np.max(np.abs(row))):
                group.append(j)
                break
        else:
            groups.append([j])
    return groups


def factor_profile(spec, tol=ZERO_TOL):
    """Group the per-j factors that coincide; for tree families also check j = n against the closed form."""
    mats = factor_matrices(spec.decomposition, spec.cylinders)
    rows = [np.poly(m) for m in mats]
    head = rows[:-1]
    spread = 0.0
    if head:
        spread = float(max(np.max(np.abs(r - head[0])) for r in head))
    profile = {"groups": _group_factors(rows, tol), "max_spread": spread}
    if spec.name in ("sym-unrooted", "sym-rooted"):
        shape = "unrooted" if spec.name == "sym-unrooted" else "rooted"
        closed = np.array(uniform_term(shape, spec.parameters["h"]).to_ints()[::-1], dtype=float)
        profile["uniform_term_match"] = bool(np.max(np.abs(rows[-1] - closed)) <= tol * max(1.0, np.max(np.abs(closed))))
    return profile


def ramanujan_outliers(spec):
    """Per-j count of factor eigenvalues outside [-2√(d-1), 2√(d-1)], the trivial d excluded."""
    graph = spec.assemble().graph
    d = graph.regular_degree
    if d is None:
        raise ArgumentError("family %s is not regular" % spec.name)
    bound = 2 * math.sqrt(d - 1) + RAMANUJAN_SLACK
    per_j = []
    for j, m in enumerate(factor_matrices(spec.decomposition, spec.cylinders), start=1):
        eigs = list(np.linalg.eigvalsh(m))
        if j == spec.decomposition.n:
            eigs.remove(min(eigs, key=lambda v: abs(v - d)))
        per_j.append(sum(1 for v in eigs if abs(v) > bound))
    return {"bound": bound, "per_j": per_j, "uniform": per_j[-1], "other": sum(per_j[:-1])}


def inner_vertex_eigenvalues(theta, d):
    """0, θ-1 and ((θ+1) ± sqrt((θ+1)^2 + 8(θ+d))) / 2 for one eigenvalue θ of the base."""
    root = math.sqrt((theta + 1) ** 2 + 8 * (theta + d))
    return [0.0, theta - 1, ((theta + 1) + root) / 2, ((theta + 1) - root) / 2]


def inner_vertex_demo(g):
    """Base g with the cylinder carrying one inner vertex per edge; spectrum checked by the oracle."""
    d = g.regular_degree
    if d is None:
        raise ArgumentError("inner vertex demo needs a regular base graph")
    decomposition = single_part_decomposition(g)
    construct = assemble(decomposition, coherent([myexample_cylinder()]))
    eigs = np.sort(eig_symmetric(construct.graph.adj))
    n = g.n
    zeros = int(np.sum(np.abs(eigs) < ZERO_TOL))
    predicted = [0.0] * (g.m - n)
    shifted, pairs = [], []
    for theta in decomposition.theta[0]:
        values = inner_vertex_eigenvalues(theta, d)
        predicted.extend(values[1:])
        shifted.append(values[1])
        pairs.extend(values[2:])

    def present(value):
        return bool(np.min(np.abs(eigs - value)) <= ZERO_TOL)

    predicted = np.sort(np.array(predicted))
    distance = float(np.max(np.abs(predicted - eigs))) if len(predicted) == len(eigs) else math.inf
    report = {
        "vertices": construct.vertex_count,
        "expected_vertices": n * 2 + g.m,
        "zero_multiplicity": zeros,
        "zero_lower_bound": n * d // 2 - n,
        "zero_bound_holds": zeros >= n * d // 2 - n,
        "shifted_present": all(present(v) for v in shifted),
        "pairs_present": all(present(v) for v in pairs),
        "predicted_distance": distance,
        "displayed_zero_multiplicity": n * d // 2,
        "deviations": [],
    }
    if zeros != n * d // 2:
        report["deviations"].append(
            "eigenvalue 0 has multiplicity %d, the displayed spectrum lists %d" % (zeros, n * d // 2)
        )
    if distance > ZERO_TOL:
        report["deviations"].append("predicted multiset differs from the oracle by %.3g" % distance)
    return report
