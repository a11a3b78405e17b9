# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Golden values and property checks run by ``cylspec verify-all``.

Each check takes a :class:`CheckContext` and returns a :class:`CheckResult`.
With ``perturb`` set, every theorem-side polynomial gets 1 added to its
constant coefficient before it is compared, so a working suite must report
failures.
"""

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from cylspec.algebra import Polynomial, charpoly_exact, charpoly_rational, eig_symmetric
from cylspec.construct import assemble
from cylspec.cylinder import (
    check_power_bsymmetry,
    coherent,
    path_cylinder,
    validate_bsymmetric,
    zoo,
)
from cylspec.display import Display
from cylspec.errors import CylspecError
from cylspec.families import (
    coxeter,
    i_graph,
    i_graph_eigenvalues,
    inner_vertex_demo,
    ramanujan_check,
    symmetric_family_rooted,
    symmetric_family_unrooted,
)
from cylspec.graph import Graph, complete, decompose_circulant, single_part_decomposition, tree_level_counts
from cylspec.spectra import (
    charpoly_general,
    charpoly_no_inner,
    charpoly_regular,
    compare_with_oracle,
    subdivision_charpoly,
)
from cylspec.treemix import (
    consecutive_interlacing_check,
    interlacing_check,
    mixing_charpoly,
    p_closed_form_check,
    p_sequence,
    shifted_tree_matrix,
    tau_matrix,
    uniform_term,
)


display = Display(__name__)

ZOO_NAMES = (
    ["path:%d" % k for k in range(4)]
    + ["pi:0", "pi:1", "id", "twist", "myexample"]
    + ["pit:3:%d" % i for i in range(3)]
    + ["treeR:1:%d" % i for i in range(3)]
    + ["treeR:2:%d" % i for i in range(6)]
    + ["treeU:1:%d" % i for i in range(4)]
    + ["treeU:2:%d" % i for i in range(8)]
)

# cylinders sharing a base, so any selection from one pool is coherent
COHERENT_POOLS = (
    ("path:0", "path:1", "path:2", "path:3"),
    ("pi:0", "pi:1", "myexample"),
    ("id", "twist"),
)


def _x():
    return Polynomial.x()


def coxeter_expected():
    x = _x()
    return (x - 3) * (x - 2) ** 2 * (x + 1) * ((x - 2) * (x + 1) * (x**2 + 2 * x - 1)) ** 6


def unrooted_h2_expected():
    x = _x()
    big = Polynomial.from_ints([7, -12, -116, 116, 345, -189, -319, 88, 116, -16, -18, 1, 1])
    return (
        (x - 3) * (x - 2) ** 4 * (x**2 - 2 * x - 2) ** 2 * (x**2 - 2) ** 17 * Polynomial.from_ints([2, -6, -1, 1]) * big**16
    )


def rooted_h2_expected():
    x = _x()
    big = Polynomial.from_ints([-10, 12, 69, -55, -115, 45, 65, -12, -14, 1, 1])
    return (x - 3) * (x - 1) * (x + 2) * (x - 2) ** 3 * (x**2 - 2 * x - 2) ** 2 * big**12


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass(frozen=True)
class CheckContext:
    seed: int = 42
    quick: bool = False
    perturb: bool = False
    tol: float = 1e-6
    jobs: int = 1

    def rng(self, salt):
        return np.random.default_rng([self.seed, salt])

    def theorem(self, poly):
        if self.perturb:
            return poly + 1
        return poly


CHECKS = []


def check(name, slow=False):
    def register(fn):
        CHECKS.append((name, slow, fn))
        return fn

    return register


def _golden(ctx, spec, expected):
    report = compare_with_oracle(spec.decomposition, spec.cylinders, tol=ctx.tol, jobs=ctx.jobs)
    theorem = ctx.theorem(report.theorem_poly)
    ok = theorem == expected and report.oracle_poly == expected
    residual = report.factored.residual if report.factored is not None else 0.0
    detail = "%d vertices, regime %s, rounding residual %.2g, theorem %s golden, oracle %s golden" % (
        report.construct.vertex_count,
        report.regime,
        residual,
        "=" if theorem == expected else "!=",
        "=" if report.oracle_poly == expected else "!=",
    )
    return ok, detail, report


@check("coxeter golden")
def coxeter_golden(ctx):
    ok, detail, _ = _golden(ctx, coxeter(), coxeter_expected())
    return ok, detail


@check("238-vertex golden", slow=True)
def unrooted_h2_golden(ctx):
    ok, detail, _ = _golden(ctx, symmetric_family_unrooted(2), unrooted_h2_expected())
    return ok, detail


@check("130-vertex golden", slow=True)
def rooted_h2_golden(ctx):
    ok, detail, report = _golden(ctx, symmetric_family_rooted(2), rooted_h2_expected())
    ramanujan = ramanujan_check(report.construct.graph, 3)
    ok = ok and ramanujan.is_ramanujan and ramanujan.second <= 2 * math.sqrt(2) + 1e-9
    return ok, "%s, second eigenvalue %.12f" % (detail, ramanujan.second)


def random_graph(rng, n, p=0.5):
    """G(n, p) without isolated vertices."""
    while True:
        upper = np.triu(rng.random((n, n)) < p, 1)
        adj = (upper | upper.T).astype(np.int64)
        if adj.sum(axis=1).min() > 0:
            return Graph.from_adjacency(adj)


@check("subdivision identity")
def subdivision_identity(ctx):
    rng = ctx.rng(4)
    failures = 0
    for _ in range(20):
        g = random_graph(rng, int(rng.integers(2, 8)))
        k = int(rng.integers(1, 4))
        construct = assemble(single_part_decomposition(g), coherent([path_cylinder(k)]))
        if ctx.theorem(subdivision_charpoly(g, k)) != charpoly_exact(construct.graph.adj):
            failures += 1
    return failures == 0, "%d of 20 random graphs differ" % failures


@check("i-graph closed form")
def igraph_closed_form(ctx):
    worst, cases = 0.0, 0
    for n in range(5, 13):
        for k in range(1, n):
            for l in range(k + 1, n):
                if 2 * l >= n:
                    continue
                spec = i_graph(n, k, l)
                eigs = np.sort(eig_symmetric(spec.assemble().graph.adj))
                closed = np.array(i_graph_eigenvalues(n, k, l))
                if ctx.perturb:
                    closed[0] += 1
                worst = max(worst, float(np.max(np.abs(eigs - closed))))
                cases += 1
    return worst <= 1e-8, "%d cases, largest eigenvalue distance %.2g" % (cases, worst)


def random_instance(rng):
    """Circulant base of order 5..8 with one or two parts and cylinders from one pool."""
    n = int(rng.integers(5, 9))
    steps = list(range(1, (n - 1) // 2 + 1))
    t = int(rng.integers(1, min(2, len(steps)) + 1))
    ks = [int(k) for k in rng.choice(steps, size=t, replace=False)]
    pool = COHERENT_POOLS[int(rng.integers(0, len(COHERENT_POOLS)))]
    names = [pool[int(rng.integers(0, len(pool)))] for _ in range(t)]
    return decompose_circulant(n, ks), coherent(zoo(name) for name in names), (n, ks, names)


@check("regime consistency")
def regime_consistency(ctx):
    rng = ctx.rng(6)
    count = 12 if ctx.quick else 50
    failures = []
    for _ in range(count):
        d, H, label = random_instance(rng)
        construct = assemble(d, H)
        oracle = charpoly_exact(construct.graph.adj)
        results = {"general": ctx.theorem(charpoly_general(d, H, jobs=ctx.jobs))}
        results["regular"] = charpoly_regular(d, H, tol=ctx.tol, jobs=ctx.jobs).product_exact
        if all(c.inner_size == 0 for c in H):
            results["no_inner"] = charpoly_no_inner(d, H, tol=ctx.tol, jobs=ctx.jobs).product_exact
        bad = sorted(name for name, poly in results.items() if poly != oracle)
        if bad:
            failures.append("%s: %s" % (label, ",".join(bad)))
    detail = "%d instances" % count
    if failures:
        detail += "; differing: " + "; ".join(failures[:5])
    return not failures, detail


def _random_shift(rng):
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))


@check("tree mixing equals determinant")
def mixing_determinant(ctx):
    rng = ctx.rng(7)
    heights = range(1, 3) if ctx.quick else range(1, 5)
    vectors = 3 if ctx.quick else 20
    failures, cases = 0, 0
    for shape in ("rooted", "unrooted"):
        for h in heights:
            count = _leaf_count(shape, h)
            for _ in range(vectors):
                shifts = [_random_shift(rng) for _ in range(count)]
                labels = [_x() - s for s in shifts]
                mixed = ctx.theorem(mixing_charpoly(shape, h, labels))
                if mixed != charpoly_rational(shifted_tree_matrix(shape, h, shifts)):
                    failures += 1
                cases += 1
    return failures == 0, "%d of %d label vectors differ" % (failures, cases)


def _leaf_count(shape, h):
    return tree_level_counts(shape, h)[-1]


@check("p_n suite")
def p_suite(ctx):
    problems = []
    worst = 0.0
    points = [Fraction(s * (6 + k), 2) for s in (1, -1) for k in range(5)]
    for n in range(21):
        for x0 in points:
            worst = max(worst, p_closed_form_check(n, x0))
    if worst >= 1e-20:
        problems.append("closed form residual %.2g" % worst)
    seq = p_sequence(8)
    for n in range(1, 9):
        if ctx.theorem(charpoly_exact(tau_matrix(n))) != seq[n]:
            problems.append("tau(%d)" % n)
    for n in range(2, 13):
        if not interlacing_check(n):
            problems.append("interlacing n=%d" % n)
        if not consecutive_interlacing_check(n):
            problems.append("consecutive interlacing n=%d" % n)
    for shape in ("rooted", "unrooted"):
        for h in range(1, 4):
            shifts = [2] * _leaf_count(shape, h)
            if uniform_term(shape, h) != charpoly_rational(shifted_tree_matrix(shape, h, shifts)):
                problems.append("uniform term %s h=%d" % (shape, h))
    detail = "closed form residual %.2g" % worst
    if problems:
        detail += "; failing: " + ", ".join(problems)
    return not problems, detail


@check("bsymmetry")
def bsymmetry(ctx):
    problems = []
    for name in ZOO_NAMES:
        c = zoo(name)
        violation = validate_bsymmetric(c)
        if violation is not None:
            problems.append("%s: %s" % (name, violation.identity))
        elif c.inner_size and not check_power_bsymmetry(c, 6):
            problems.append("%s: powers" % name)
    return not problems, "%d cylinders%s" % (len(ZOO_NAMES), "; " + ", ".join(problems) if problems else "")


@check("inner vertex spectrum")
def inner_vertex(ctx):
    ok, notes = True, []
    for n in (4, 5):
        report = inner_vertex_demo(complete(n))
        ok = ok and report["zero_bound_holds"] and report["shifted_present"] and report["pairs_present"]
        notes.append(
            "K%d: zero multiplicity %d (>= %d)%s"
            % (n, report["zero_multiplicity"], report["zero_lower_bound"], "".join("; " + d for d in report["deviations"]))
        )
    return ok, "; ".join(notes)


def run_checks(ctx, names=None):
    results = []
    for name, slow, fn in CHECKS:
        if names and name not in names:
            continue
        if slow and ctx.quick:
            continue
        start = time.perf_counter()
        try:
            ok, detail = fn(ctx)
        except CylspecError as exc:
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        display.v("check %s: %s in %.2fs", name, "ok" if ok else "FAILED", time.perf_counter() - start)
        results.append(CheckResult(name, bool(ok), detail))
    return results
