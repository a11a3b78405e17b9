# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Exact polynomial and rational-function arithmetic in one variable ``x``.

Also hosts the exact characteristic-polynomial oracle (modular Hessenberg
reduction combined by Chinese remaindering), the polynomial adjugate used for
cylinder resolvents, a Sturm-sequence real root finder and the numeric
symmetric eigensolver used as a cross-check.
"""

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, partial, reduce

import mpmath
import numpy as np
import scipy.linalg
import sympy
from sympy import QQ, isprime, prevprime
from sympy.ntheory.modular import crt
from sympy.polys.matrices import DomainMatrix

from cylspec.display import Display
from cylspec.errors import ArgumentError, ConsistencyError, DimensionError, ValidationError
from cylspec.module_utils.parallel import parallel_map


display = Display(__name__)

# Largest modulus for which products of two residues still fit in int64.
WORD_PRIME_LIMIT = 2**31

_X = sympy.Symbol("x")


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    num = getattr(value, "numerator", None)
    den = getattr(value, "denominator", None)
    if num is not None and den is not None:
        num = num() if callable(num) else num
        den = den() if callable(den) else den
        return Fraction(int(num), int(den))
    raise ArgumentError(
        "'coefficient' value %r is invalid. Valid values are exact rationals" % (value,)
    )


def _convolve(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def to_mpf(value):
    """Convert an exact rational (or int) to an mpmath float at the current precision."""
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact rational coefficients, ``coeffs[k]`` multiplies ``x**k``."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_to_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @classmethod
    def from_ints(cls, coeffs):
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self):
        # the zero polynomial has degree -inf
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def to_ints(self):
        if not self.is_integral:
            raise ConsistencyError("polynomial %s has non-integer coefficients" % self)
        return tuple(int(c) for c in self.coeffs)

    def reduce_mod(self, p):
        """Coefficients modulo ``p``, padded to ``degree + 1`` entries."""
        return tuple(c.numerator * pow(c.denominator, -1, p) % p for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(tuple(_convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral) or k < 0:
            raise ArgumentError("'exponent' value %r is invalid. Valid values are integers >= 0" % (k,))
        result, base = Polynomial.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) - 1 < dd:
            return Polynomial.zero(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - dd] = q
            for i, oc in enumerate(other.coeffs):
                rem[k - dd + i] -= q * oc
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dd]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient of an exact division; a nonzero remainder is an internal inconsistency."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ConsistencyError("division of %s by %s leaves remainder %s" % (self, other, r))
        return q

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return Fraction(acc) if isinstance(acc, int) else acc

    def compose(self, inner):
        """``self(inner(x))``."""
        inner = _coerce(inner)
        acc = Polynomial.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def scale(self, s):
        """``self(s * x)``."""
        s = _to_fraction(s)
        return Polynomial(tuple(c * s**k for k, c in enumerate(self.coeffs)))

    def derivative(self):
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def monic(self):
        if self.is_zero:
            return self
        lead = self.leading
        return Polynomial(tuple(c / lead for c in self.coeffs))

    def to_json(self):
        return {"coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(tuple(Fraction(int(n), int(d)) for n, d in data["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ArgumentError("'polynomial' value %r is invalid: %s" % (data, exc))

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else "x^%d" % k
                body = power if mag == 1 else "%s*%s" % (mag, power)
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += " %s %s" % (sign, body)
        return out

    def __repr__(self):
        return "Polynomial(%s)" % self


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (numbers.Rational, str)):
        return Polynomial((value,))
    return NotImplemented


def _to_sympy(p):
    rep = [sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0]
    return sympy.Poly.from_list(rep, _X, domain=QQ)


def _from_sympy(poly):
    coeffs = [sympy.Rational(c) for c in reversed(poly.all_coeffs())]
    return Polynomial(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))


def gcd(a, b):
    """Monic greatest common divisor; ``gcd(0, 0) == 0``."""
    if a.is_zero and b.is_zero:
        return Polynomial.zero()
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return Polynomial.one()
    return _from_sympy(_to_sympy(a).gcd(_to_sympy(b))).monic()


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient ``num / den`` with a monic denominator."""

    num: Polynomial
    den: Polynomial = Polynomial.one()

    def __post_init__(self):
        num, den = _coerce(self.num), _coerce(self.den)
        if num is NotImplemented or den is NotImplemented:
            raise ArgumentError("rational functions are built from polynomials")
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Polynomial.zero(), Polynomial.one()
        else:
            g = gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lead = den.leading
            if lead != 1:
                num, den = num * (1 / lead), den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _reduced(cls, num, den):
        obj = object.__new__(cls)
        lead = den.leading
        if lead != 1:
            num, den = num * (1 / lead), den * (1 / lead)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def of(cls, value):
        if isinstance(value, RationalFunction):
            return value
        poly = _coerce(value)
        if poly is NotImplemented:
            raise ArgumentError("'label' value %r is invalid. Valid values are polynomials" % (value,))
        return cls._reduced(poly, Polynomial.one())

    @property
    def is_polynomial(self):
        return self.den.degree == 0

    @property
    def is_zero(self):
        return self.num.is_zero

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RationalFunction(a + c, b)
        g = gcd(b, d)
        if g.degree <= 0:
            return RationalFunction._reduced(a * d + c * b, b * d)
        bg, dg = b.exact_div(g), d.exact_div(g)
        num = a * dg + c * bg
        if num.is_zero:
            return RationalFunction(Polynomial.zero())
        t = gcd(num, g)
        if t.degree > 0:
            num, g = num.exact_div(t), g.exact_div(t)
        return RationalFunction._reduced(num, bg * dg * g)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return RationalFunction(Polynomial.zero())
        a, b, c, d = self.num, self.den, other.num, other.den
        g1, g2 = gcd(a, d), gcd(c, b)
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RationalFunction._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._reduced(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._reduced(self.num**k, self.den**k)

    def __call__(self, value):
        den = self.den(value)
        if den == 0:
            raise ZeroDivisionError("rational function evaluated at a pole x=%s" % (value,))
        return self.num(value) / den

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        if "num" in data:
            return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data.get("den", {"coeffs": [["1", "1"]]})))
        return cls.of(Polynomial.from_json(data))

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return "(%s) / (%s)" % (self.num, self.den)


def _coerce_rf(value):
    if isinstance(value, RationalFunction):
        return value
    poly = _coerce(value)
    if poly is NotImplemented:
        return poly
    return RationalFunction._reduced(poly, Polynomial.one())


def _square(a):
    arr = np.array(a, dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError("'matrix' shape %s is invalid. Valid shapes are n x n" % (arr.shape,))
    return arr


def charpoly_modp(A, p):
    """``det(xI - A) mod p`` as ascending coefficients, via Hessenberg reduction."""
    if not isinstance(p, numbers.Integral) or not isprime(int(p)):
        raise ArgumentError("'p' value %r is invalid. Valid values are primes" % (p,))
    p = int(p)
    if p >= WORD_PRIME_LIMIT:
        raise ArgumentError("'p' value %d is invalid. Valid values are primes below 2**31" % p)
    H = _square(A) % p
    n = H.shape[0]
    for m in range(1, n - 1):
        nz = np.flatnonzero(H[m:, m - 1])
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            H[[i, m], :] = H[[m, i], :]
            H[:, [i, m]] = H[:, [m, i]]
        inv = pow(int(H[m, m - 1]), p - 2, p)
        u = (H[m + 1:, m - 1] * inv) % p
        if not u.any():
            continue
        # rows below the pivot lose their column m-1 entry, then the inverse column operation
        H[m + 1:, m - 1:] = (H[m + 1:, m - 1:] - np.outer(u, H[m, m - 1:]) % p) % p
        H[:, m] = (H[:, m] + ((H[:, m + 1:] * u) % p).sum(axis=1)) % p

    h = H.tolist()
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    for m in range(n):
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = P[m, :-1]
        cur = (cur - (h[m][m] * P[m]) % p) % p
        if m:
            t = 1
            weights = np.zeros(m, dtype=np.int64)
            for i in range(m - 1, -1, -1):
                t = t * h[i + 1][i] % p
                weights[i] = h[i][m] * t % p
            if weights.any():
                acc = ((P[:m] * weights[:, None]) % p).sum(axis=0) % p
                cur = (cur - acc) % p
        P[m + 1] = cur
    return tuple(int(c) for c in P[n])


@lru_cache(maxsize=32)
def _primes_covering(bits):
    primes, prod, p = [], 1, WORD_PRIME_LIMIT
    while prod.bit_length() <= bits:
        p = prevprime(p)
        primes.append(p)
        prod *= p
    return tuple(primes)


def coefficient_bound(A):
    """Bound on |coefficients| of det(xI - A): sum_k C(n,k) r^k = (1 + r)^n."""
    A = _square(A)
    n = A.shape[0]
    radius = int(np.abs(A).sum(axis=1).max()) if n else 0
    return (1 + radius) ** n


def charpoly_exact(A, jobs=1):
    """Exact integer characteristic polynomial ``det(xI - A)``."""
    A = _square(A)
    n = A.shape[0]
    if n == 0:
        return Polynomial.one()
    bound = coefficient_bound(A)
    primes = _primes_covering((2 * bound + 1).bit_length())
    display.vv(
        "charpoly_exact: n=%d, coefficient bound of %d bits, %d primes",
        n,
        bound.bit_length(),
        len(primes),
    )
    residues = parallel_map(partial(charpoly_modp, A), primes, jobs)
    coeffs = []
    for k in range(n + 1):
        value, _ = crt(primes, [r[k] for r in residues], symmetric=True)
        coeffs.append(int(value))
    return Polynomial.from_ints(coeffs)


def _qq(value):
    f = _to_fraction(value)
    return QQ(f.numerator, f.denominator)


def _domain_matrix(M):
    rows = [[_qq(v) for v in row] for row in M]
    n = len(rows)
    return DomainMatrix(rows, (n, n), QQ)


def det_rational(M):
    """Exact determinant of a square matrix of rationals."""
    if len(M) == 0:
        return Fraction(1)
    if any(len(row) != len(M) for row in M):
        raise DimensionError("'matrix' is not square")
    return _to_fraction(_domain_matrix(M).det())


def charpoly_rational(M):
    """Exact characteristic polynomial of a square matrix of rationals."""
    if len(M) == 0:
        return Polynomial.one()
    if any(len(row) != len(M) for row in M):
        raise DimensionError("'matrix' is not square")
    desc = _domain_matrix(M).charpoly()
    return Polynomial(tuple(_to_fraction(c) for c in reversed(desc)))


def newton_coefficients(xs, ys):
    """Interpolating polynomial through ``(xs, ys)`` as ascending coefficients.

    Works over any field the inputs live in (Fraction or mpf).
    """
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = [coef[-1]]
    for i in range(n - 2, -1, -1):
        shifted = [0] * (len(result) + 1)
        for k, c in enumerate(result):
            shifted[k + 1] += c
            shifted[k] -= c * xs[i]
        shifted[0] += coef[i]
        result = shifted
    return result


def interpolate(xs, ys):
    if len(xs) != len(ys) or len(set(xs)) != len(xs):
        raise ArgumentError("interpolation needs distinct abscissas, one value each")
    return Polynomial(tuple(newton_coefficients([_to_fraction(v) for v in xs], [_to_fraction(v) for v in ys])))


def polynomial_matrix_det(M):
    """Exact determinant of a square matrix of Polynomials by evaluation and interpolation."""
    n = len(M)
    if n == 0:
        return Polynomial.one()
    bound = 0
    for row in M:
        if len(row) != n:
            raise DimensionError("'matrix' is not square")
        degs = [p.degree for p in row if not p.is_zero]
        if not degs:
            return Polynomial.zero()
        bound += max(degs)
    xs = list(range(bound + 1))
    ys = [det_rational([[p(Fraction(x)) for p in row] for row in M]) for x in xs]
    return interpolate(xs, ys)


def adjugate_resolvent(C):
    """Polynomial adjugate of ``xI - C`` together with ``φ(C, x)``.

    Uses adj(xI - C) = sum_k x^(m-1-k) N_k with N_0 = I and N_k = C N_(k-1) + c_k I,
    where φ(C, x) = x^m + c_1 x^(m-1) + ... + c_m.
    """
    C = _square(C)
    m = C.shape[0]
    phi = charpoly_exact(C)
    if m == 0:
        return [], phi
    c_obj = C.astype(object)
    eye = np.identity(m, dtype=np.int64).astype(object)
    terms = [eye]
    for k in range(1, m):
        ck = int(phi.coeffs[m - k])
        terms.append(c_obj.dot(terms[-1]) + ck * eye)
    adj = [
        [Polynomial(tuple(int(terms[m - 1 - e][r, s]) for e in range(m))) for s in range(m)]
        for r in range(m)
    ]
    return adj, phi


def resolvent_blocks(C, Ebc, Ebpc):
    """Diagonal and off-diagonal blocks of [Ebc; Ebpc] (xI - C)^(-1) [Ebc*, Ebpc*].

    Returns ``(R_d, R_a)`` as tuples of rows of RationalFunction, each of size
    base x base.
    """
    C = _square(C)
    Ebc = np.asarray(Ebc, dtype=np.int64)
    Ebpc = np.asarray(Ebpc, dtype=np.int64)
    if Ebc.ndim != 2 or Ebc.shape != Ebpc.shape:
        raise DimensionError("'Ebc' and 'Ebpc' shapes %s, %s do not match" % (Ebc.shape, Ebpc.shape))
    b, m = Ebc.shape
    zero = RationalFunction(Polynomial.zero())
    if m == 0:
        blank = tuple(tuple(zero for _ in range(b)) for _ in range(b))
        return blank, blank
    if m != C.shape[0]:
        raise DimensionError("'Ebc' has %d columns, inner block has %d vertices" % (m, C.shape[0]))
    adj, phi = adjugate_resolvent(C)

    def block(left, right):
        rows = []
        for r in range(b):
            row = []
            for s in range(b):
                acc = Polynomial.zero()
                for c in np.flatnonzero(left[r]):
                    for c2 in np.flatnonzero(right[s]):
                        acc = acc + adj[c][c2] * int(left[r, c] * right[s, c2])
                row.append(RationalFunction(acc, phi))
            rows.append(tuple(row))
        return tuple(rows)

    return block(Ebc, Ebc), block(Ebc, Ebpc)


def evaluate_rational_matrix(M, value):
    return [[f(value) for f in row] for row in M]


def chebyshev_U(k):
    """Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2x."""
    if k < 0:
        raise ArgumentError("'k' value %r is invalid. Valid values are integers >= 0" % (k,))
    prev, cur = Polynomial.one(), Polynomial((0, 2))
    if k == 0:
        return prev
    two_x = Polynomial((0, 2))
    for _ in range(k - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def charpoly_mp(matrix):
    """Characteristic polynomial of a small real matrix at the current mpmath precision.

    Hessenberg reduction with partial pivoting followed by the standard
    three-term recurrence. Ascending mpf coefficients.
    """
    H = [[mpmath.mpf(v) if not isinstance(v, Fraction) else to_mpf(v) for v in row] for row in matrix]
    n = len(H)
    for m in range(1, n - 1):
        piv = max(range(m, n), key=lambda r: abs(H[r][m - 1]))
        if H[piv][m - 1] == 0:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        for i in range(m + 1, n):
            u = H[i][m - 1] / H[m][m - 1]
            if u == 0:
                continue
            for c in range(m - 1, n):
                H[i][c] -= u * H[m][c]
            for r in range(n):
                H[r][m] += u * H[r][i]
    polys = [[mpmath.mpf(1)]]
    for m in range(n):
        prev = polys[m]
        cur = [mpmath.mpf(0)] + list(prev)
        for k, v in enumerate(prev):
            cur[k] -= H[m][m] * v
        t = mpmath.mpf(1)
        for i in range(m - 1, -1, -1):
            t *= H[i + 1][i]
            w = H[i][m] * t
            if w == 0:
                continue
            for k, v in enumerate(polys[i]):
                cur[k] -= w * v
        polys.append(cur)
    return polys[n]


def multiply_coefficients(polys):
    """Product of ascending coefficient lists (any numeric type)."""
    return reduce(_convolve, polys, [1])


def eig_symmetric(A, tol=1e-12):
    """Ascending eigenvalues of a real symmetric matrix (LAPACK ?syev)."""
    a = np.array(A, dtype=float)
    if a.size == 0:
        return np.zeros(0)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError("'matrix' shape %s is invalid. Valid shapes are n x n" % (a.shape,))
    if not np.allclose(a, a.T, rtol=0.0, atol=tol):
        raise ValidationError("matrix is not symmetric within %g" % tol, identity="A = A*")
    return scipy.linalg.eigh(a, eigvals_only=True, driver="ev")


def squarefree_decomposition(p):
    """Yun's algorithm: list of (squarefree factor, multiplicity)."""
    p = p.monic()
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a = gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    factors, i = [], 1
    while b.degree > 0:
        a = gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            factors.append((a, i))
        i += 1
    return factors


def sturm_sequence(f):
    seq = [f, f.derivative()]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero:
            break
        seq.append(-r)
    return seq


def _sign_changes(seq, x):
    changes, last = 0, 0
    for s in seq:
        v = s(x)
        if v == 0:
            continue
        sign = 1 if v > 0 else -1
        if last and sign != last:
            changes += 1
        last = sign
    return changes


def _isolate(seq, lo, hi, v_lo, v_hi, tol, out):
    count = v_lo - v_hi
    if count == 0:
        return
    if count == 1 and hi - lo <= tol:
        out.append((lo + hi) / 2)
        return
    mid = (lo + hi) / 2
    v_mid = _sign_changes(seq, mid)
    _isolate(seq, lo, mid, v_lo, v_mid, tol, out)
    _isolate(seq, mid, hi, v_mid, v_hi, tol, out)


def real_roots(p, tol=1e-10):
    """Sorted real roots of ``p`` with multiplicities, as ``[(root, multiplicity), ...]``."""
    if p.is_zero:
        raise ArgumentError("'p' value 0 is invalid. Valid values are nonzero polynomials")
    tol = Fraction(tol)
    roots = []
    for factor, mult in squarefree_decomposition(p):
        bound = 1 + max(abs(c / factor.leading) for c in factor.coeffs[:-1])
        seq = sturm_sequence(factor)
        found = []
        _isolate(seq, -bound, bound, _sign_changes(seq, -bound), _sign_changes(seq, bound), tol, found)
        roots.extend((float(r), mult) for r in found)
    roots.sort()
    return roots
