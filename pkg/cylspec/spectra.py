# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Characteristic polynomials of constructs through the block-determinant identity.

Three regimes are offered:

- ``no_inner``: no cylinder has inner vertices; the polynomial factors over
  the shared eigenvectors into ``n`` per-j factors of size ``|B|``.
- ``regular``: every part is regular; inner vertices enter through their
  resolvent blocks and each per-j factor is recovered by interpolation.
- ``general``: the full ``n|B|`` determinant, evaluated exactly at integer
  points and interpolated.

The first two go through the irrational compatible numbering and are
therefore carried in mpmath at a working precision large enough for the
final product to be rounded to integers; the third is exact.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

import mpmath
import numpy as np

from cylspec.algebra import (
    Polynomial,
    charpoly_exact,
    charpoly_mp,
    chebyshev_U,
    det_rational,
    eig_symmetric,
    evaluate_rational_matrix,
    interpolate,
    multiply_coefficients,
    newton_coefficients,
    polynomial_matrix_det,
    real_roots,
    resolvent_blocks,
    to_mpf,
)
from cylspec.construct import assemble
from cylspec.cylinder import CoherentList, coherent
from cylspec.display import Display
from cylspec.errors import (
    ArgumentError,
    ConsistencyError,
    PrecisionError,
    RegimeError,
    SamplingError,
)
from cylspec.module_utils.parallel import parallel_map


display = Display(__name__)

REGIMES = ("no_inner", "regular", "general", "tensor")
DEFAULT_TOL = 1e-6
DEFAULT_ROOT_TOL = 1e-10
GUARD_DIGITS = 30
SAMPLE_SCAN_FACTOR = 4
EXACT_ROOT_DEGREE = 40


def _coherent(d, H):
    cylinders = tuple(H)
    if len(cylinders) != d.t:
        raise ArgumentError(
            "'cylinders' length %d is invalid. Valid length is the number of parts %d" % (len(cylinders), d.t)
        )
    return H if isinstance(H, CoherentList) else coherent(cylinders)


def total_degree(d, H):
    return d.n * H.base_size + sum(c.inner_size * p.m for c, p in zip(H, d.parts))


def degree_bound(d, H):
    """Upper bound on the maximum degree of the construct, computed from the blocks."""
    maxdeg = [max(p.degrees) for p in d.parts]
    bound = 1
    for s in range(H.base_size):
        acc = int(H.base[s].sum())
        for c, dm in zip(H, maxdeg):
            acc += dm * (int(c.Ebb[s].sum()) + max(int(c.Ebc[s].sum()), int(c.Ebpc[s].sum())))
        bound = max(bound, acc)
    for c in H:
        for k in range(c.inner_size):
            bound = max(bound, int(c.C[k].sum() + c.Ebc[:, k].sum() + c.Ebpc[:, k].sum()))
    return bound


def working_dps(degree, radius, extra=0):
    """Decimal digits needed to round a degree-``degree`` product whose roots lie in [-radius, radius]."""
    return int(math.ceil(degree * math.log10(1 + radius))) + GUARD_DIGITS + extra


def round_coefficients(coeffs, tol):
    ints, residual = [], 0.0
    for c in coeffs:
        r = mpmath.nint(c)
        residual = max(residual, float(abs(c - r)))
        ints.append(int(r))
    if residual > tol:
        raise PrecisionError(
            "rounded product is %.3g away from integers (tolerance %g)" % (residual, tol), residual=residual
        )
    return Polynomial.from_ints(ints), residual


def _float_str(c, digits=12):
    return mpmath.nstr(c, digits)


@dataclass(frozen=True, eq=False)
class FactorDescriptor:
    """One per-j factor, as ascending mpf coefficients (and exact when the θ column is integral)."""

    j: int
    coeffs: tuple
    exact: Polynomial = None

    def floats(self):
        return [float(c) for c in self.coeffs]

    def to_json(self):
        data = {"j": self.j, "coeffs": [_float_str(c, 17) for c in self.coeffs]}
        if self.exact is not None:
            data["exact"] = self.exact.to_json()
        return data

    def __str__(self):
        if self.exact is not None:
            return str(self.exact)
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            terms.append("(%s)x^%d" % (_float_str(self.coeffs[k]), k))
        return " + ".join(terms)


@dataclass(frozen=True, eq=False)
class FactoredCharpoly:
    regime: str
    degree: int
    prefactor: tuple
    factors: tuple
    product_numeric: tuple
    product_exact: Polynomial = None
    residual: float = 0.0
    dps: int = 0
    cleared_by: tuple = ()

    def to_json(self):
        return {
            "regime": self.regime,
            "degree": self.degree,
            "dps": self.dps,
            "residual": self.residual,
            "prefactor": [{"poly": p.to_json(), "exponent": e} for p, e in self.prefactor],
            "cleared_by": [{"poly": p.to_json(), "exponent": e} for p, e in self.cleared_by],
            "factors": [f.to_json() for f in self.factors],
            "product": self.product_exact.to_json() if self.product_exact is not None else None,
        }

    def render(self):
        lines = ["regime: %s (degree %d, %d digits)" % (self.regime, self.degree, self.dps)]
        for poly, exponent in self.prefactor:
            lines.append("prefactor: (%s)^%d" % (poly, exponent))
        for poly, exponent in self.cleared_by:
            lines.append("each factor is multiplied by (%s)^%d" % (poly, exponent))
        for f in self.factors:
            lines.append("j=%d: %s" % (f.j, f))
        if self.product_exact is not None:
            lines.append("product: %s" % self.product_exact)
        return "\n".join(lines)


def _integral(value):
    eps = mpmath.mpf(10) ** (-(mpmath.mp.dps - 10))
    return abs(value - mpmath.nint(value)) < eps


def _no_inner_factor(H, theta, idx):
    rows = [[mpmath.mpf(int(v)) for v in row] for row in H.base.tolist()]
    for c, th in zip(H, theta):
        t = th[idx]
        for r, s in zip(*np.nonzero(c.Ebb)):
            rows[r][s] += t
    exact = None
    if all(_integral(th[idx]) for th in theta):
        m = H.base.copy()
        for c, th in zip(H, theta):
            m = m + int(mpmath.nint(th[idx])) * c.Ebb
        exact = charpoly_exact(m)
    return FactorDescriptor(idx + 1, tuple(charpoly_mp(rows)), exact)


def factor_matrices(d, H):
    """Per-j matrices ``B + Σ θ_i^j Ebb_i`` in double precision."""
    H = _coherent(d, H)
    base = H.base.astype(float)
    return [base + sum(th[j] * c.Ebb for c, th in zip(H, d.theta)) for j in range(d.n)]


def charpoly_no_inner(d, H, tol=DEFAULT_TOL, jobs=1, extra_digits=0, regime="no_inner"):
    """∏_j φ(B + Σ_i θ_i^j Ebb_i, x), rounded to an integer polynomial."""
    H = _coherent(d, H)
    for c in H:
        if c.inner_size:
            raise RegimeError("cylinder %s has inner vertices; the no-inner regime does not apply" % c.name)
    degree = total_degree(d, H)
    dps = working_dps(degree, degree_bound(d, H), extra_digits)
    display.v("%s regime: degree %d at %d digits", regime, degree, dps)
    with mpmath.workdps(dps):
        theta = d.theta_mp()
        factors = parallel_map(partial(_no_inner_factor, H, theta), range(d.n), jobs)
        product = multiply_coefficients([f.coeffs for f in factors])
        exact, residual = round_coefficients(product, tol)
    display.vv("%s regime: rounding residual %.3g", regime, residual)
    return FactoredCharpoly(regime, degree, (), tuple(factors), tuple(product), exact, residual, dps)


def tensor_charpoly(d, H, tol=DEFAULT_TOL, jobs=1):
    """Generalized tensor product: every base is edgeless and nothing sits inside."""
    H = _coherent(d, H)
    if H.base.any():
        raise RegimeError("the tensor regime needs edgeless bases")
    return charpoly_no_inner(d, H, tol, jobs, regime="tensor")


def _inner_data(H):
    resolvents, phis = {}, {}
    for i, c in enumerate(H):
        if c.inner_size:
            resolvents[i] = resolvent_blocks(c.C, c.Ebc, c.Ebpc)
            phis[i] = charpoly_exact(c.C)
    return resolvents, phis


def _regular_sample(resolvents, phis, b, x):
    X = Fraction(x)
    sample = {"x": to_mpf(X), "Rd": {}, "Ra": {}, "q": Fraction(1)}
    for i, (Rd, Ra) in resolvents.items():
        sample["Rd"][i] = [[to_mpf(v) for v in row] for row in evaluate_rational_matrix(Rd, X)]
        sample["Ra"][i] = [[to_mpf(v) for v in row] for row in evaluate_rational_matrix(Ra, X)]
        sample["q"] *= phis[i](X) ** b
    sample["q"] = to_mpf(sample["q"])
    return sample


def _regular_factor(H, degrees, theta, samples, xs, idx):
    b = H.base_size
    base = H.base.tolist()
    values = []
    for sample in samples:
        m = mpmath.matrix(b, b)
        for r in range(b):
            for s in range(b):
                m[r, s] = (sample["x"] if r == s else 0) - base[r][s]
        for i, (c, th) in enumerate(zip(H, theta)):
            t = th[idx]
            E = c.Ebb.tolist()
            Rd, Ra = sample["Rd"].get(i), sample["Ra"].get(i)
            for r in range(b):
                for s in range(b):
                    term = t * E[r][s]
                    if Rd is not None:
                        term += degrees[i] * Rd[r][s] + t * Ra[r][s]
                    m[r, s] -= term
        values.append(mpmath.det(m) * sample["q"])
    return FactorDescriptor(idx + 1, tuple(newton_coefficients(xs, values)))


def charpoly_regular(d, H, tol=DEFAULT_TOL, jobs=1, extra_digits=0):
    """Regular parts: ∏ φ(C_i)^{m_i} ∏_j φ(B + Σ_i (d_i R_d + θ_i^j (Ebb_i + R_a)), x).

    Each per-j factor is multiplied through by ∏_i φ(C_i)^{|B|} so that it is a
    polynomial; the surplus is divided out of the rounded product exactly.
    """
    H = _coherent(d, H)
    if d.regular_degrees is None:
        irregular = [i for i, p in enumerate(d.parts) if p.regular_degree is None]
        raise RegimeError("part %s is not regular" % irregular[0] if irregular else "no regular degrees recorded")
    resolvents, phis = _inner_data(H)
    if not resolvents:
        return charpoly_no_inner(d, H, tol, jobs, extra_digits, regime="regular")
    b = H.base_size
    deg_g = b * (1 + sum(H[i].inner_size for i in resolvents))
    bound = degree_bound(d, H)
    xs = [bound + 1 + s for s in range(deg_g + 1)]
    degree = total_degree(d, H)
    interpolation = int(2 * deg_g * math.log10(xs[-1] + 1)) + 10
    dps = working_dps(max(degree, d.n * deg_g), bound, interpolation + extra_digits)
    display.v("regular regime: degree %d, %d sample points, %d digits", degree, len(xs), dps)
    with mpmath.workdps(dps):
        theta = d.theta_mp()
        samples = [_regular_sample(resolvents, phis, b, x) for x in xs]
        work = partial(_regular_factor, H, d.regular_degrees, theta, samples, xs)
        factors = parallel_map(work, range(d.n), jobs)
        product = multiply_coefficients([f.coeffs for f in factors])
        cleared, residual = round_coefficients(product, tol)
    display.vv("regular regime: rounding residual %.3g", residual)
    result = cleared
    for i, phi in phis.items():
        surplus = d.parts[i].m - d.n * b
        if surplus >= 0:
            result = result * phi**surplus
        else:
            result = result.exact_div(phi ** (-surplus))
    if result.degree != degree:
        raise ConsistencyError("regular regime produced degree %s, expected %d" % (result.degree, degree))
    prefactor = tuple((phis[i], d.parts[i].m) for i in sorted(phis))
    cleared_by = tuple((phis[i], b) for i in sorted(phis))
    return FactoredCharpoly(
        "regular", degree, prefactor, tuple(factors), tuple(product), result, residual, dps, cleared_by
    )


def _general_value(d, H, resolvents, phis, x):
    b, n = H.base_size, d.n
    X = Fraction(x)
    size = n * b
    S = [[Fraction(0)] * size for _ in range(size)]
    base = H.base.tolist()
    for v in range(n):
        for r in range(b):
            for s in range(b):
                S[v * b + r][v * b + s] = (X if r == s else 0) - base[r][s]
    scale = Fraction(1)
    for i, (part, c) in enumerate(zip(d.parts, H)):
        E = c.Ebb.tolist()
        if i in resolvents:
            Rd = evaluate_rational_matrix(resolvents[i][0], X)
            Ra = evaluate_rational_matrix(resolvents[i][1], X)
            scale *= phis[i](X) ** part.m
        else:
            Rd = Ra = [[0] * b for _ in range(b)]
        off = [[E[r][s] + Ra[r][s] for s in range(b)] for r in range(b)]
        for u, v in part.edges:
            for r in range(b):
                for s in range(b):
                    S[u * b + r][v * b + s] -= off[r][s]
                    S[v * b + r][u * b + s] -= off[r][s]
        if i in resolvents:
            for v, dv in enumerate(part.degrees):
                for r in range(b):
                    for s in range(b):
                        S[v * b + r][v * b + s] -= dv * Rd[r][s]
    return det_rational(S) * scale


def charpoly_general(d, H, jobs=1, scan=SAMPLE_SCAN_FACTOR):
    """Exact φ of the construct from the full block determinant, by evaluation and interpolation."""
    H = _coherent(d, H)
    resolvents, phis = _inner_data(H)
    degree = total_degree(d, H)
    start = degree_bound(d, H) + 1
    limit = start + scan * (degree + 1)
    points, x = [], start
    while len(points) < degree + 1 and x < limit:
        if all(phi(x) != 0 for phi in phis.values()):
            points.append(x)
        x += 1
    if len(points) < degree + 1:
        raise SamplingError(
            "only %d pole-free sample points in [%d, %d); %d needed" % (len(points), start, limit, degree + 1)
        )
    display.v("general regime: degree %d from %d exact evaluations", degree, len(points))
    values = parallel_map(partial(_general_value, d, H, resolvents, phis), points, jobs)
    poly = interpolate(points, values)
    if poly.degree != degree or not poly.is_integral or poly.leading != 1:
        raise ConsistencyError("general regime did not produce a monic integer polynomial of degree %d" % degree)
    return poly


def _half_chebyshev(k):
    return chebyshev_U(k).scale(Fraction(1, 2))


def _apply_power(poly, base, exponent):
    if exponent >= 0:
        return poly * base**exponent
    return poly.exact_div(base ** (-exponent))


def subdivision_charpoly(g, k):
    """φ of G with every edge replaced by a path with k inner vertices."""
    if k < 1:
        raise ArgumentError("'k' value %r is invalid. Valid values are integers >= 1" % (k,))
    uk, ukm1 = _half_chebyshev(k), _half_chebyshev(k - 1)
    x = Polynomial.x()
    degs = g.degrees
    adj = g.adj.tolist()
    matrix = [
        [x * uk - ukm1 * degs[u] if u == v else Polynomial.constant(-adj[u][v]) for v in range(g.n)]
        for u in range(g.n)
    ]
    return _apply_power(polynomial_matrix_det(matrix), uk, g.m - g.n)


def subdivision_charpoly_regular(g, k):
    """Regular form: U_k(x/2)^{|E|-n} φ(G, x U_k(x/2) - d U_{k-1}(x/2))."""
    if k < 1:
        raise ArgumentError("'k' value %r is invalid. Valid values are integers >= 1" % (k,))
    d = g.regular_degree
    if d is None:
        raise RegimeError("graph is not regular")
    uk, ukm1 = _half_chebyshev(k), _half_chebyshev(k - 1)
    inner = Polynomial.x() * uk - ukm1 * d
    return _apply_power(charpoly_exact(g.adj).compose(inner), uk, g.m - g.n)


def best_regime(d, H):
    if all(c.inner_size == 0 for c in H):
        return "no_inner"
    if d.regular_degrees is not None:
        return "regular"
    return "general"


def theorem_charpoly(d, H, regime=None, tol=DEFAULT_TOL, jobs=1):
    """Run one regime; float regimes are retried once at doubled precision on a rounding failure."""
    H = _coherent(d, H)
    regime = regime or best_regime(d, H)
    if regime == "general":
        return charpoly_general(d, H, jobs), None
    engines = {"no_inner": charpoly_no_inner, "regular": charpoly_regular, "tensor": tensor_charpoly}
    if regime not in engines:
        raise ArgumentError("'regime' value %r is invalid. Valid values are %s" % (regime, ", ".join(REGIMES)))
    engine = engines[regime]
    try:
        factored = engine(d, H, tol=tol, jobs=jobs)
    except PrecisionError as exc:
        if regime == "tensor":
            raise
        display.warning("%s; retrying with more digits", exc)
        factored = engine(d, H, tol=tol, jobs=jobs, extra_digits=total_degree(d, H))
    return factored.product_exact, factored


def _max_coeff_diff(a, b):
    n = max(len(a.coeffs), len(b.coeffs))
    pa = list(a.coeffs) + [0] * (n - len(a.coeffs))
    pb = list(b.coeffs) + [0] * (n - len(b.coeffs))
    return max((abs(x - y) for x, y in zip(pa, pb)), default=0)


def _multiset_distance(a, b):
    if len(a) != len(b):
        return math.inf
    if not len(a):
        return 0.0
    return float(np.max(np.abs(np.sort(a) - np.sort(b))))


@dataclass(frozen=True, eq=False)
class OracleReport:
    regime: str
    construct: object
    theorem_poly: Polynomial
    oracle_poly: Polynomial
    max_coeff_diff: Fraction
    eig_max_diff: float
    factored: FactoredCharpoly = None

    @property
    def match(self):
        return self.max_coeff_diff == 0

    def to_json(self):
        return {
            "regime": self.regime,
            "vertices": self.construct.vertex_count,
            "theorem": self.theorem_poly.to_json(),
            "oracle": self.oracle_poly.to_json(),
            "max_coeff_diff": str(self.max_coeff_diff),
            "eig_max_diff": self.eig_max_diff,
            "match": self.match,
            "factored": self.factored.to_json() if self.factored is not None else None,
        }


def theorem_eigenvalues(d, H, regime, poly, root_tol=DEFAULT_ROOT_TOL):
    """Eigenvalue multiset predicted by the theorem side, or None when too costly."""
    if regime in ("no_inner", "tensor"):
        return np.concatenate([np.linalg.eigvalsh(m) for m in factor_matrices(d, H)])
    if poly.degree <= EXACT_ROOT_DEGREE:
        return np.array([r for r, mult in real_roots(poly, root_tol) for _ in range(mult)])
    return None


def compare_with_oracle(d, H, tol=DEFAULT_TOL, jobs=1, regime=None, root_tol=DEFAULT_ROOT_TOL):
    H = _coherent(d, H)
    construct = assemble(d, H)
    oracle = charpoly_exact(construct.graph.adj, jobs)
    regime = regime or best_regime(d, H)
    theorem, factored = theorem_charpoly(d, H, regime, tol, jobs)
    diff = _max_coeff_diff(theorem, oracle)
    predicted = theorem_eigenvalues(d, H, regime, theorem, root_tol)
    eig_diff = None
    if predicted is not None:
        eig_diff = _multiset_distance(predicted, eig_symmetric(construct.graph.adj))
    display.v("oracle comparison (%s): max coefficient difference %s", regime, diff)
    return OracleReport(regime, construct, theorem, oracle, diff, eig_diff, factored)
