# -*- coding: utf-8 -*-
# GNU General Public License v3.0+
# (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)
"""Bsymmetric cylinders, coherence, and the built-in cylinder zoo.

A cylinder is stored as its blocks: the base adjacency ``B`` (shared by both
ends), the inner adjacency ``C``, the base-to-base link ``Ebb``, the links
``Ebc`` / ``Ebpc`` from the two bases into the inner vertices, and the inner
permutation ``P`` that swaps the ends.
"""

from dataclasses import dataclass

import numpy as np

from cylspec import SCHEMA
from cylspec.display import Display
from cylspec.errors import ArgumentError, DimensionError, ValidationError
from cylspec.graph import complete, path, tree_graph, tree_leaves, tree_level_counts


display = Display(__name__)

BLOCKS = ("B", "C", "Ebb", "Ebc", "Ebpc", "P")
POWER_CHECK_MAX = 6


def _block(value, shape=None):
    arr = np.array(value, dtype=np.int64)
    if shape is not None:
        arr = arr.reshape(shape)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Violation:
    identity: str
    message: str

    def to_json(self):
        return {"identity": self.identity, "message": self.message}


@dataclass(frozen=True, eq=False)
class Cylinder:
    name: str
    B: np.ndarray
    C: np.ndarray
    Ebb: np.ndarray
    Ebc: np.ndarray
    Ebpc: np.ndarray
    P: np.ndarray

    @classmethod
    def build(cls, name, B, Ebb, C=None, Ebc=None, Ebpc=None, P=None):
        B = _block(B)
        b = B.shape[0] if B.ndim == 2 else 0
        if C is None:
            C = np.zeros((0, 0))
        C = _block(C)
        m = C.shape[0] if C.ndim == 2 else 0
        C = _block(C, (m, m))
        Ebc = _block(np.zeros((b, m)) if Ebc is None else Ebc, (b, m))
        Ebpc = _block(np.zeros((b, m)) if Ebpc is None else Ebpc, (b, m))
        P = _block(np.zeros((0, 0)) if P is None else P, (m, m))
        return cls(name, _block(B, (b, b)), C, _block(Ebb, (b, b)), Ebc, Ebpc, P)

    @property
    def base_size(self):
        return self.B.shape[0]

    @property
    def inner_size(self):
        return self.C.shape[0]

    def adjacency(self):
        """Adjacency of the cylinder itself, ordered base, base', inner."""
        b, m = self.base_size, self.inner_size
        a = np.zeros((2 * b + m, 2 * b + m), dtype=np.int64)
        a[:b, :b] = self.B
        a[b:2 * b, b:2 * b] = self.B
        a[:b, b:2 * b] = self.Ebb
        a[b:2 * b, :b] = self.Ebb.T
        a[:b, 2 * b:] = self.Ebc
        a[2 * b:, :b] = self.Ebc.T
        a[b:2 * b, 2 * b:] = self.Ebpc
        a[2 * b:, b:2 * b] = self.Ebpc.T
        a[2 * b:, 2 * b:] = self.C
        return a

    def to_json(self):
        data = {"name": self.name}
        for key in BLOCKS:
            data[key] = getattr(self, key).tolist()
        return data

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            return zoo(data)
        try:
            b = len(data["B"])
            m = len(data.get("C") or [])
            return cls.build(
                data.get("name", "custom"),
                data["B"],
                data["Ebb"],
                data.get("C") or np.zeros((0, 0)),
                data.get("Ebc") or np.zeros((b, m)),
                data.get("Ebpc") or np.zeros((b, m)),
                data.get("P") or np.zeros((m, m)),
            )
        except (KeyError, TypeError) as exc:
            raise ArgumentError("'cylinder' document is invalid: missing or malformed %s" % exc)
        except ValueError as exc:
            raise DimensionError("'cylinder' blocks are inconsistent: %s" % exc)

    def __repr__(self):
        return "Cylinder(%s, base=%d, inner=%d)" % (self.name, self.base_size, self.inner_size)


def _check_dimensions(c):
    b, m = c.base_size, c.inner_size
    expected = {
        "B": (b, b),
        "C": (m, m),
        "Ebb": (b, b),
        "Ebc": (b, m),
        "Ebpc": (b, m),
        "P": (m, m),
    }
    for key, shape in expected.items():
        if getattr(c, key).shape != shape:
            raise DimensionError(
                "'%s' shape %s is invalid. Valid shape is %s" % (key, getattr(c, key).shape, shape)
            )


def _symmetric_zero_diagonal(a):
    return np.array_equal(a, a.T) and not np.diagonal(a).any()


def validate_bsymmetric(c):
    """None when the cylinder is bsymmetric, else the first failing :class:`Violation`."""
    _check_dimensions(c)
    for key in BLOCKS:
        if not np.isin(getattr(c, key), (0, 1)).all():
            return Violation("0/1 blocks", "%s has entries outside {0,1}" % key)
    if not _symmetric_zero_diagonal(c.B):
        return Violation("B = B*", "B not symmetric with zero diagonal")
    if not _symmetric_zero_diagonal(c.C):
        return Violation("C = C*", "C not symmetric with zero diagonal")
    m = c.inner_size
    if m and not (np.array_equal(c.P.sum(axis=0), np.ones(m)) and np.array_equal(c.P.sum(axis=1), np.ones(m))):
        return Violation("P permutation", "P is not a permutation matrix")
    if not np.array_equal(c.Ebb, c.Ebb.T):
        return Violation("Ebb = Ebb*", "Ebb not symmetric")
    if m:
        if not np.array_equal(c.Ebpc, c.Ebc @ c.P):
            return Violation("Ebpc = Ebc P", "Ebpc differs from Ebc P")
        if not np.array_equal(c.Ebc, c.Ebpc @ c.P):
            return Violation("Ebc = Ebpc P", "Ebc differs from Ebpc P")
        if not np.array_equal(c.P @ c.C, c.C @ c.P):
            return Violation("PC = CP", "P does not commute with C")
    return None


def require_bsymmetric(c):
    violation = validate_bsymmetric(c)
    if violation is not None:
        raise ValidationError("cylinder %s: %s" % (c.name, violation.message), identity=violation.identity)
    return c


def power_blocks(c, k):
    """[Ebc; Ebpc] C^k [Ebc*, Ebpc*] as a 2b x 2b integer matrix."""
    e = np.vstack([c.Ebc, c.Ebpc])
    ck = np.linalg.matrix_power(c.C, k) if c.inner_size else np.zeros((0, 0), dtype=np.int64)
    return e @ ck @ e.T


def is_bsymmetric_matrix(m, b):
    m11, m12, m21, m22 = m[:b, :b], m[:b, b:], m[b:, :b], m[b:, b:]
    blocks = (m11, m12, m21, m22)
    return (
        all(np.array_equal(x, x.T) for x in blocks)
        and np.array_equal(m11, m22)
        and np.array_equal(m12, m21)
    )


def check_power_bsymmetry(c, kmax=POWER_CHECK_MAX):
    return all(is_bsymmetric_matrix(power_blocks(c, k), c.base_size) for k in range(kmax + 1))


@dataclass(frozen=True, eq=False)
class CoherentList:
    cylinders: tuple

    @property
    def t(self):
        return len(self.cylinders)

    @property
    def base(self):
        return self.cylinders[0].B

    @property
    def base_size(self):
        return self.cylinders[0].base_size

    def __iter__(self):
        return iter(self.cylinders)

    def __len__(self):
        return len(self.cylinders)

    def __getitem__(self, i):
        return self.cylinders[i]

    def to_json(self):
        return {"schema": SCHEMA, "cylinders": [c.to_json() for c in self]}


def check_coherent(cylinders):
    cylinders = list(cylinders)
    if not cylinders:
        return False
    first = cylinders[0].B
    return all(c.B.shape == first.shape and np.array_equal(c.B, first) for c in cylinders[1:])


def coherent(cylinders):
    """Validate and wrap cylinders as a :class:`CoherentList`."""
    cylinders = tuple(cylinders)
    for c in cylinders:
        require_bsymmetric(c)
    if not check_coherent(cylinders):
        raise ValidationError("cylinder bases differ", identity="identical bases")
    return CoherentList(cylinders)


def path_cylinder(k):
    """The path P_(k+2) as a cylinder with k inner vertices."""
    if k < 0:
        raise ArgumentError("'k' value %r is invalid. Valid values are integers >= 0" % (k,))
    name = "path:%d" % k
    if k == 0:
        return Cylinder.build(name, [[0]], [[1]])
    ebc = np.zeros((1, k))
    ebc[0, 0] = 1
    ebpc = np.zeros((1, k))
    ebpc[0, k - 1] = 1
    return Cylinder.build(name, [[0]], [[0]], path(k).adj, ebc, ebpc, np.fliplr(np.identity(k)))


def identity_and_twist():
    empty2 = np.zeros((2, 2))
    return CoherentList(
        (
            Cylinder.build("id", empty2, np.identity(2)),
            Cylinder.build("twist", empty2, np.fliplr(np.identity(2))),
        )
    )


def pi_t_cylinder(t, i):
    """K_t bases joined by the single edge between their i-th vertices."""
    if t < 1 or not 0 <= i < t:
        raise ArgumentError("'i' value %r is invalid. Valid values are 0 <= i < %d" % (i, t))
    ebb = np.zeros((t, t))
    ebb[i, i] = 1
    return Cylinder.build("pit:%d:%d" % (t, i), complete(t).adj, ebb)


def pi_cylinders():
    """(⊓, ⊔): the K_2 cylinders joining the second, respectively first, vertices."""
    top = pi_t_cylinder(2, 1)
    cup = pi_t_cylinder(2, 0)
    return CoherentList(
        (
            Cylinder.build("pi:0", top.B, top.Ebb),
            Cylinder.build("pi:1", cup.B, cup.Ebb),
        )
    )


def _tree_cylinder(shape, tag, h, i):
    if h < 1:
        raise ArgumentError("'h' value %r is invalid. Valid values are integers >= 1" % (h,))
    leaves = tree_leaves(shape, h)
    if not 0 <= i < len(leaves):
        raise ArgumentError("'i' value %r is invalid. Valid values are 0 <= i < %d" % (i, len(leaves)))
    base = tree_graph(shape, h)
    ebb = np.zeros((base.n, base.n))
    ebb[leaves[i], leaves[i]] = 1
    return Cylinder.build("%s:%d:%d" % (tag, h, i), base.adj, ebb)


def tree_cylinder_rooted(h, i):
    return _tree_cylinder("rooted", "treeR", h, i)


def tree_cylinder_unrooted(h, i):
    return _tree_cylinder("unrooted", "treeU", h, i)


def tree_cylinders(shape, h):
    """All leaf cylinders of one tree, as a coherent list ordered by leaf."""
    count = tree_level_counts(shape, h)[-1]
    make = tree_cylinder_rooted if shape == "rooted" else tree_cylinder_unrooted
    return CoherentList(tuple(make(h, i) for i in range(count)))


def myexample_cylinder():
    """K_2 bases joined by a perfect matching plus one inner vertex adjacent to all four."""
    one = [[1], [1]]
    return Cylinder.build("myexample", complete(2).adj, np.identity(2), [[0]], one, one, [[1]])


def _ints(parts, name):
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ArgumentError("'cylinder' value %r is invalid. Valid values are %s" % (name, ZOO_FORMS))


ZOO_FORMS = "path:K, pi:0, pi:1, pit:T:I, treeR:H:I, treeU:H:I, id, twist, myexample"


def zoo(name):
    """Look up a built-in cylinder by its command-line name."""
    head, _, rest = name.partition(":")
    args = rest.split(":") if rest else []
    if head == "path" and len(args) == 1:
        (k,) = _ints(args, name)
        cyl = path_cylinder(k)
    elif head == "pi" and args in (["0"], ["1"]):
        cyl = pi_cylinders()[int(args[0])]
    elif head == "pit" and len(args) == 2:
        cyl = pi_t_cylinder(*_ints(args, name))
    elif head == "treeR" and len(args) == 2:
        cyl = tree_cylinder_rooted(*_ints(args, name))
    elif head == "treeU" and len(args) == 2:
        cyl = tree_cylinder_unrooted(*_ints(args, name))
    elif name == "id":
        cyl = identity_and_twist()[0]
    elif name == "twist":
        cyl = identity_and_twist()[1]
    elif name == "myexample":
        cyl = myexample_cylinder()
    else:
        raise ArgumentError("'cylinder' value %r is invalid. Valid values are %s" % (name, ZOO_FORMS))
    return cyl


def cylinders_from_json(data):
    try:
        entries = data["cylinders"]
    except (KeyError, TypeError):
        raise ArgumentError("'cylinders' document is invalid: expected a 'cylinders' list")
    return coherent(Cylinder.from_json(e) for e in entries)
