"""Finite-dimensional modules over the supported group algebras.

A Rep stores one exact matrix per group element.  Families are built from
generator matrices and breadth-first generator words, then the full
representation law is verified (exhaustively for small groups):

* symmetric groups: Specht-style rational matrices in Young's seminormal
  form, one matrix per adjacent transposition;
* dihedral groups: the four (or two) sign characters plus two-dimensional
  rotation/reflection pairs, rational whenever 2cos(2 pi k / n) is rational
  and over the order-n cyclotomic field otherwise;
* cyclic groups: the n characters through an n-th root of unity;
* direct products: outer tensor products of the factor irreducibles.

Dual modules carry the natural right action (transposed matrices), paired
with the original by the standard coordinate pairing.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from fractions import Fraction
from math import lcm

from .errors import (
    CocycleError,
    InternalError,
    NotSplitError,
    ParseError,
    PreconditionError,
    RealizabilityError,
)
from .exact.linalg import Matrix, solve_linear
from .exact.scalars import (
    Cyclotomic,
    VariantError,
    as_scalar,
    scalar_from_str,
    scalar_to_str,
)
from .groups import Group, from_descriptor, same_group
from .hopf import Functional

_F0 = Fraction(0)
_F1 = Fraction(1)

_IRREP_CACHE: dict = {}


class Rep:
    """A left kG-module: one exact matrix per group element."""

    __slots__ = ("group", "dim", "matrices", "label")

    def __init__(self, group: Group, matrices, label: str):
        matrices = tuple(matrices)
        if len(matrices) != group.order:
            raise PreconditionError("need one matrix per group element")
        dim = matrices[0].nrows
        for m in matrices:
            if m.nrows != dim or m.ncols != dim:
                raise PreconditionError("matrices must be square, equal size")
        if matrices[0] != Matrix.identity(dim):
            raise PreconditionError("identity element must act as identity")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "label", label)
        self._check_law()

    def __setattr__(self, *a):
        raise AttributeError("Rep is immutable")

    def _check_law(self):
        n = self.group.order
        if n <= 24:
            pairs = itertools.product(range(n), repeat=2)
        else:
            rng = random.Random(4801)
            pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(400))
        for g, h in pairs:
            if self.matrices[g] * self.matrices[h] \
                    != self.matrices[self.group.mul(g, h)]:
                raise PreconditionError(
                    "matrices do not satisfy the representation law")

    @staticmethod
    def from_generators(group: Group, gen_matrices: dict, label: str) -> "Rep":
        """Extend matrices given on the generators along generator words."""
        for gi, _ in group.generators:
            if gi not in gen_matrices:
                raise PreconditionError("missing matrix for a generator")
        dims = {m.nrows for m in gen_matrices.values()}
        dim = dims.pop() if dims else 1
        mats: list = [None] * group.order
        mats[0] = Matrix.identity(dim)
        queue = deque([0])
        while queue:
            cur = queue.popleft()
            for gi, _ in group.generators:
                nxt = group.table[cur][gi]
                if mats[nxt] is None:
                    mats[nxt] = mats[cur] * gen_matrices[gi]
                    queue.append(nxt)
        if any(m is None for m in mats):
            raise PreconditionError("generators do not generate the group")
        return Rep(group, mats, label)

    def matrix(self, i: int) -> Matrix:
        return self.matrices[i]

    def character(self) -> Functional:
        return Functional(self.group, [m.trace() for m in self.matrices])

    def dual(self) -> "DualRep":
        return DualRep(self)

    def tensor(self, other: "Rep") -> "Rep":
        if not same_group(self.group, other.group):
            raise PreconditionError("representations of different groups")
        mats = [a.kron(b) for a, b in zip(self.matrices, other.matrices)]
        return Rep(self.group, mats, "%s(x)%s" % (self.label, other.label))

    def direct_sum(self, other: "Rep") -> "Rep":
        if not same_group(self.group, other.group):
            raise PreconditionError("representations of different groups")
        mats = []
        for a, b in zip(self.matrices, other.matrices):
            top = [list(r) + [_F0] * other.dim for r in a.rows]
            bot = [[_F0] * self.dim + list(r) for r in b.rows]
            mats.append(Matrix(top + bot))
        return Rep(self.group, mats, "%s(+)%s" % (self.label, other.label))

    def apply(self, i: int, vec):
        return self.matrices[i].apply(vec)

    def __eq__(self, other):
        if not isinstance(other, Rep):
            return NotImplemented
        return (same_group(self.group, other.group)
                and self.matrices == other.matrices)

    def __hash__(self):
        return hash((id(self.group), self.matrices))

    def __repr__(self):
        return "Rep(%s, dim=%d over %s)" % (self.label, self.dim,
                                            self.group.name)


class DualRep:
    """The dual module with its natural right action f . g = transpose(g) f."""

    __slots__ = ("base", "group", "dim", "matrices", "label")

    def __init__(self, base: Rep):
        mats = tuple(m.transpose() for m in base.matrices)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "group", base.group)
        object.__setattr__(self, "dim", base.dim)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "label", "%s^*" % base.label)

    def __setattr__(self, *a):
        raise AttributeError("DualRep is immutable")

    def act_right(self, f, i: int):
        """Coordinates of f . g_i."""
        return self.matrices[i].apply(f)

    def as_left_rep(self) -> Rep:
        """The dual as a left module through the antipode: g acts by g^{-1}."""
        grp = self.group
        mats = [self.matrices[grp.inverse(i)] for i in range(grp.order)]
        return Rep(grp, mats, "%s-left" % self.label)

    def __repr__(self):
        return "DualRep(%s, dim=%d)" % (self.label, self.dim)


def pairing(v_vec, f_vec):
    """The standard pairing <v, f> = sum v_i f_i."""
    acc = _F0
    for a, b in zip(v_vec, f_vec):
        if a and b:
            acc = acc + a * b
    return acc


# ---------------------------------------------------------------------------
# symmetric groups: Young's seminormal form
# ---------------------------------------------------------------------------

def _partitions(n: int):
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return out


def _standard_tableaux(shape):
    n = sum(shape)
    rows = [[] for _ in shape]
    out = []

    def rec(v):
        if v > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0
                                            or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(v)
                rec(v + 1)
                rows[i].pop()

    rec(1)
    return out


def _positions(tableau):
    pos = {}
    for r, row in enumerate(tableau):
        for c, v in enumerate(row):
            pos[v] = (r, c)
    return pos


def _swap_entries(tableau, a, b):
    return tuple(tuple(b if v == a else a if v == b else v for v in row)
                 for row in tableau)


def _seminormal_matrix(tableaux, index, k):
    """Matrix of the adjacent transposition (k, k+1) on the tableau basis.

    With d the signed axial distance (content of k+1 minus content of k in
    the tableau T), the transposition sends v_T to (1/d) v_T plus, when the
    swapped tableau T' is standard, either v_T' (d > 0) or (1 - 1/d^2) v_T'
    (d < 0).  The two-by-two blocks square to the identity by construction.
    """
    size = len(tableaux)
    rows = [[_F0] * size for _ in range(size)]
    for col, t in enumerate(tableaux):
        pos = _positions(t)
        r1, c1 = pos[k]
        r2, c2 = pos[k + 1]
        d = (c2 - r2) - (c1 - r1)
        rows[col][col] = Fraction(1, d)
        if r1 != r2 and c1 != c2:
            partner = index[_swap_entries(t, k, k + 1)]
            rows[partner][col] = _F1 if d > 0 else _F1 - Fraction(1, d * d)
    return Matrix(rows)


def _partition_label(shape, n):
    if shape == (n,):
        return "triv"
    if shape == (1,) * n:
        return "sgn"
    if shape == (n - 1, 1):
        return "std"
    return "p" + "".join(str(p) for p in shape)


def _symmetric_irreps(group: Group, n: int):
    out = []
    for shape in _partitions(n):
        tableaux = sorted(_standard_tableaux(shape))
        index = {t: i for i, t in enumerate(tableaux)}
        gen_mats = {}
        for k in range(1, n):
            gi = group.generators[k - 1][0]
            gen_mats[gi] = _seminormal_matrix(tableaux, index, k)
        label = _partition_label(shape, n)
        if n == 1:
            out.append(Rep(group, [Matrix.identity(1)], label))
        else:
            out.append(Rep.from_generators(group, gen_mats, label))
    return out


# ---------------------------------------------------------------------------
# dihedral, cyclic, product families
# ---------------------------------------------------------------------------

def _root_sum(n: int, k: int):
    """2 cos(2 pi k / n) as an exact scalar, demoted to Q when possible."""
    a = Cyclotomic.zeta(n, k % n) + Cyclotomic.zeta(n, (-k) % n)
    return a.as_fraction() if a.is_rational else a


def _dihedral_irreps(group: Group, n: int):
    if n == 1:
        s = group.generators[0][0]
        return [Rep.from_generators(group, {s: Matrix([[_F1]])}, "triv"),
                Rep.from_generators(group, {s: Matrix([[-_F1]])}, "sgn")]
    r = group.generators[0][0]
    s = group.generators[1][0]
    out = [
        Rep.from_generators(group, {r: Matrix([[_F1]]),
                                    s: Matrix([[_F1]])}, "triv"),
        Rep.from_generators(group, {r: Matrix([[_F1]]),
                                    s: Matrix([[-_F1]])}, "sgn"),
    ]
    if n % 2 == 0:
        out.append(Rep.from_generators(group, {r: Matrix([[-_F1]]),
                                               s: Matrix([[_F1]])}, "alt"))
        out.append(Rep.from_generators(group, {r: Matrix([[-_F1]]),
                                               s: Matrix([[-_F1]])}, "altsgn"))
    for k in range(1, (n + 1) // 2):
        a = _root_sum(n, k)
        rot = Matrix([[_F0, -_F1], [_F1, a]])
        ref = Matrix([[_F1, a], [_F0, -_F1]])
        out.append(Rep.from_generators(group, {r: rot, s: ref}, "rho%d" % k))
    return out


def _cyclic_irreps(group: Group, n: int):
    out = []
    for k in range(n):
        if n == 1:
            out.append(Rep(group, [Matrix.identity(1)], "chi0"))
            continue
        if n == 2:
            z = -_F1 if k else _F1
        else:
            zk = Cyclotomic.zeta(n, k)
            z = zk.as_fraction() if zk.is_rational else zk
        x = group.generators[0][0]
        out.append(Rep.from_generators(group, {x: Matrix([[z]])},
                                       "chi%d" % k))
    return out


def _needed_cyclotomic_order(descriptor) -> int:
    """Order of the cyclotomic field sufficient to split the group."""
    kind = descriptor["kind"]
    if kind == "symmetric":
        return 1
    if kind == "cyclic":
        return 1 if descriptor["n"] <= 2 else descriptor["n"]
    if kind == "dihedral":
        return 1 if descriptor["n"] in (1, 2, 3, 4, 6) else descriptor["n"]
    if kind == "product":
        a = _needed_cyclotomic_order(descriptor["factors"][0])
        b = _needed_cyclotomic_order(descriptor["factors"][1])
        return lcm(a, b)
    raise PreconditionError("no irreducible construction for %r" % kind)


def _product_irreps(group: Group):
    left = from_descriptor(group.descriptor["factors"][0])
    right = from_descriptor(group.descriptor["factors"][1])
    lreps = irreps(left)
    rreps = irreps(right)
    out = []
    nb = right.order
    for lv in lreps:
        for rv in rreps:
            try:
                mats = [lv.matrices[i // nb].kron(rv.matrices[i % nb])
                        for i in range(group.order)]
            except VariantError as e:
                order = _needed_cyclotomic_order(group.descriptor)
                raise RealizabilityError(
                    "factors need incompatible cyclotomic fields; a "
                    "cyclotomic(%d) implementation would be required" % order
                ) from e
            out.append(Rep(group, mats, "%s*%s" % (lv.label, rv.label)))
    return out


def irreps(group: Group, field: str = "auto"):
    """All irreducible representations over the smallest supported field.

    With field="rational" a RealizabilityError is raised (naming the
    cyclotomic order that would be needed) whenever the rationals do not
    split the group.
    """
    if field not in ("auto", "rational"):
        raise PreconditionError("unknown field choice %r" % field)
    key = (id(group), field)
    if key in _IRREP_CACHE:
        return _IRREP_CACHE[key]
    kind = group.descriptor.get("kind")
    if field == "rational":
        need = _needed_cyclotomic_order(group.descriptor)
        if need > 2:
            raise RealizabilityError(
                "the rationals do not split %s; cyclotomic(%d) scalars "
                "are required" % (group.name, need))
    if kind == "symmetric":
        out = _symmetric_irreps(group, group.descriptor["n"])
    elif kind == "dihedral":
        out = _dihedral_irreps(group, group.descriptor["n"])
    elif kind == "cyclic":
        out = _cyclic_irreps(group, group.descriptor["n"])
    elif kind == "product":
        out = _product_irreps(group)
    else:
        raise PreconditionError(
            "no irreducible construction for descriptor kind %r" % kind)
    total = sum(v.dim ** 2 for v in out)
    if total != group.order:
        raise InternalError(
            "sum of squared dimensions %d misses the group order %d"
            % (total, group.order))
    out = tuple(out)
    _IRREP_CACHE[key] = out
    return out


def trivial_rep(group: Group) -> Rep:
    return Rep(group, [Matrix.identity(1)] * group.order, "triv")


# ---------------------------------------------------------------------------
# morphism spaces, decomposition, Grothendieck classes
# ---------------------------------------------------------------------------

def intertwiners(v: Rep, w: Rep):
    """A basis of the space of module maps V -> W, by exact elimination.

    X intertwines exactly when w(g) X = X v(g) on the group generators;
    the nullspace of that linear system is returned as matrices.
    """
    if not same_group(v.group, w.group):
        raise PreconditionError("representations of different groups")
    gens = [gi for gi, _ in v.group.generators] or list(range(v.group.order))
    unknowns = w.dim * v.dim
    rows = []
    for gi in gens:
        a = w.matrices[gi]
        b = v.matrices[gi]
        for r in range(w.dim):
            for c in range(v.dim):
                row = [_F0] * unknowns
                for k in range(w.dim):
                    row[k * v.dim + c] = row[k * v.dim + c] + a.rows[r][k]
                for k in range(v.dim):
                    row[r * v.dim + k] = row[r * v.dim + k] - b.rows[k][c]
                rows.append(row)
    res = solve_linear(rows, [_F0] * len(rows))
    out = []
    for vec in res.nullspace:
        out.append(Matrix([[vec[r * v.dim + c] for c in range(v.dim)]
                           for r in range(w.dim)]))
    return out


def hom_dim(v: Rep, w: Rep) -> int:
    return len(intertwiners(v, w))


def end_dim(v: Rep) -> int:
    """Dimension of the commutant End(V); equals 1 for split simples."""
    return hom_dim(v, v)


def isomorphic(v: Rep, w: Rep) -> bool:
    """Character comparison, falling back to an invertible intertwiner."""
    if not same_group(v.group, w.group):
        raise PreconditionError("representations of different groups")
    if v.dim != w.dim:
        return False
    if v.character() == w.character():
        return True
    # a different-looking character can still hide an isomorphism only in
    # characteristic p; look for an invertible intertwiner anyway
    basis = intertwiners(v, w)
    if not basis:
        return False
    candidates = list(basis)
    acc = basis[0]
    for m in basis[1:]:
        acc = acc + m
    candidates.append(acc)
    rng = random.Random(4802)
    for _ in range(10):
        m = basis[0].scale(Fraction(rng.randint(-5, 5)))
        for other in basis[1:]:
            m = m + other.scale(Fraction(rng.randint(-5, 5)))
        candidates.append(m)
    return any(m.rank() == v.dim for m in candidates)


class K0Element:
    """A multiplicity vector over the irreducible labels of one group."""

    __slots__ = ("group", "multiplicities")

    def __init__(self, group: Group, multiplicities: dict):
        clean = {}
        for label, m in multiplicities.items():
            m = int(m)
            if m:
                clean[label] = m
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "multiplicities", clean)

    def __setattr__(self, *a):
        raise AttributeError("K0Element is immutable")

    def __add__(self, other):
        if not isinstance(other, K0Element):
            return NotImplemented
        if not same_group(self.group, other.group):
            raise PreconditionError("classes over different groups")
        out = dict(self.multiplicities)
        for k, m in other.multiplicities.items():
            out[k] = out.get(k, 0) + m
        return K0Element(self.group, out)

    def __eq__(self, other):
        if not isinstance(other, K0Element):
            return NotImplemented
        return (same_group(self.group, other.group)
                and self.multiplicities == other.multiplicities)

    def __hash__(self):
        return hash((id(self.group),
                     tuple(sorted(self.multiplicities.items()))))

    def __getitem__(self, label: str) -> int:
        return self.multiplicities.get(label, 0)

    def __repr__(self):
        if not self.multiplicities:
            return "0"
        bits = []
        for label in sorted(self.multiplicities):
            m = self.multiplicities[label]
            bits.append(label if m == 1 else "%d*%s" % (m, label))
        return " + ".join(bits)


def _as_rational(x):
    x = as_scalar(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Cyclotomic) and x.is_rational:
        return x.as_fraction()
    raise InternalError("expected a rational value, got %r" % (x,))


def decompose_character(grp: Group, chi) -> K0Element:
    """Multiplicities of the irreducible characters inside a class function.

    The input is any functional on the group; pairing it with each
    irreducible character must produce nonnegative integers.
    """
    simples = irreps(grp)
    mult = {}
    for w in simples:
        chi_w = w.character()
        acc = None
        for g in range(grp.order):
            term = chi(g) * chi_w(grp.inverse(g))
            acc = term if acc is None else acc + term
        m = _as_rational(acc) / grp.order
        if m.denominator != 1 or m < 0:
            raise InternalError(
                "character pairing produced a non-multiplicity %s" % m)
        if m:
            mult[w.label] = int(m)
    return K0Element(grp, mult)


def decompose(v: Rep) -> K0Element:
    """Multiplicities of the irreducibles inside V by character pairing."""
    grp = v.group
    out = decompose_character(grp, v.character())
    recovered = sum(out[w.label] * w.dim for w in irreps(grp))
    if recovered != v.dim:
        raise InternalError(
            "multiplicities rebuild dimension %d, expected %d"
            % (recovered, v.dim))
    return out


def assert_split(v: Rep):
    """Require End(V) to be one-dimensional (V absolutely simple)."""
    d = end_dim(v)
    if d != 1:
        raise NotSplitError(
            "End(%s) has dimension %d; the base field does not split it"
            % (v.label, d))


# ---------------------------------------------------------------------------
# extensions by cocycles
# ---------------------------------------------------------------------------

def cocycle_check(v: Rep, w: Rep, rho) -> bool:
    """Does rho satisfy rho(gh) = rho(g) w(h) + v(g) rho(h) for all g, h?"""
    grp = v.group
    rho = tuple(rho)
    if len(rho) != grp.order:
        raise PreconditionError("need one matrix per group element")
    for m in rho:
        if m.nrows != v.dim or m.ncols != w.dim:
            raise PreconditionError("cocycle matrices must map W to V")
    for g in range(grp.order):
        for h in range(grp.order):
            lhs = rho[grp.mul(g, h)]
            rhs = rho[g] * w.matrices[h] + v.matrices[g] * rho[h]
            if lhs != rhs:
                return False
    return True


def coboundary(v: Rep, w: Rep, phi: Matrix):
    """The cocycle g -> phi w(g) - v(g) phi attached to a linear map phi."""
    if phi.nrows != v.dim or phi.ncols != w.dim:
        raise PreconditionError("phi must map W to V")
    return tuple(phi * w.matrices[g] - v.matrices[g] * phi
                 for g in range(v.group.order))


def zero_cocycle(v: Rep, w: Rep):
    return tuple(Matrix.zeros(v.dim, w.dim) for _ in range(v.group.order))


def extension_by_cocycle(v: Rep, w: Rep, rho) -> Rep:
    """The module V oplus_rho W: block upper triangular action.

    V embeds as a submodule, W is the quotient.  Raises CocycleError when
    rho is not a cocycle.
    """
    if not same_group(v.group, w.group):
        raise PreconditionError("representations of different groups")
    if not cocycle_check(v, w, rho):
        raise CocycleError("the given map violates the cocycle identity")
    rho = tuple(rho)
    mats = []
    for g in range(v.group.order):
        top = [list(a) + list(b)
               for a, b in zip(v.matrices[g].rows, rho[g].rows)]
        bot = [[_F0] * v.dim + list(r) for r in w.matrices[g].rows]
        mats.append(Matrix(top + bot))
    return Rep(v.group, mats, "%s(+_rho)%s" % (v.label, w.label))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _matrix_to_json(m: Matrix):
    return [[scalar_to_str(x) for x in row] for row in m.rows]


def _matrix_from_json(doc):
    return Matrix([[scalar_from_str(s) for s in row] for row in doc])


def rep_to_json(v: Rep) -> dict:
    """Generator-indexed matrices; enough to rebuild along generator words."""
    doc = {"group": v.group.descriptor, "label": v.label, "dim": v.dim}
    if v.group.generators:
        doc["generators"] = [[gi, _matrix_to_json(v.matrices[gi])]
                             for gi, _ in v.group.generators]
    else:
        doc["matrices"] = [_matrix_to_json(m) for m in v.matrices]
    return doc


def rep_from_json(doc: dict) -> Rep:
    grp = from_descriptor(doc["group"])
    if "generators" in doc:
        gen_mats = {int(gi): _matrix_from_json(m)
                    for gi, m in doc["generators"]}
        out = Rep.from_generators(grp, gen_mats, doc["label"])
    else:
        out = Rep(grp, [_matrix_from_json(m) for m in doc["matrices"]],
                  doc["label"])
    if out.dim != doc["dim"]:
        raise ParseError("dimension field does not match the matrices")
    return out
