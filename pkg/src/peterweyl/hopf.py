"""The group algebra H = kG as a Hopf algebra.

Elements of H, of tensor powers of H, and of the dual H* are all stored
sparsely (or densely for the dual, whose dimension is the group order) over
one exact scalar variant.  The comultiplication, counit, and antipode are the
standard ones for a group algebra:

    delta(g) = g (x) g,    counit(g) = 1,    antipode(g) = g^{-1},

so the antipode squares to the identity and every completed tensor product
collapses to the algebraic one (H is finite-dimensional).

Four module actions are provided uniformly through ``act``:

* ``ad``       h acts by conjugation  g . b = g b g^{-1}
* ``ad_star``  the reversed conjugation  g . b = g^{-1} b g
* ``left``     left regular action (on functionals: (g . f)(b) = f(b g))
* ``right``    right regular action (on functionals: (g . f)(b) = f(g b))
* ``diamond``  the antipode-twisted action  g . b = S^2(g) b S(g), which on
               functionals evaluates to (g . f)(h) = f(g^{-1} h g)

``diamond`` is computed from its defining formula through the antipode, not
rewritten to conjugation, so agreement with ``ad`` on group algebras is a
checkable fact rather than a definition.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import DimensionError, PreconditionError
from .exact.linalg import Subspace, solve_linear
from .exact.scalars import as_scalar, scalar_from_str, scalar_to_str, unify
from .groups import Group, GroupElement, from_descriptor, same_group

_F0 = Fraction(0)
_F1 = Fraction(1)


def _clean_terms(terms):
    vals = unify([as_scalar(c) for c in terms.values()])
    out = {}
    for k, c in zip(terms.keys(), vals):
        if c:
            out[k] = c
    return out


class AlgebraElement:
    """A sparse element of kG: map from group-element index to scalar."""

    __slots__ = ("group", "terms")

    def __init__(self, group: Group, terms=None):
        terms = dict(terms or {})
        for i in terms:
            if not 0 <= i < group.order:
                raise PreconditionError("term index out of range")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", _clean_terms(terms))

    def __setattr__(self, *a):
        raise AttributeError("AlgebraElement is immutable")

    @staticmethod
    def basis(group: Group, i: int, coeff=1) -> "AlgebraElement":
        return AlgebraElement(group, {i: coeff})

    @staticmethod
    def one(group: Group) -> "AlgebraElement":
        return AlgebraElement(group, {0: 1})

    @staticmethod
    def zero(group: Group) -> "AlgebraElement":
        return AlgebraElement(group, {})

    @staticmethod
    def of(x) -> "AlgebraElement":
        if isinstance(x, AlgebraElement):
            return x
        if isinstance(x, GroupElement):
            return AlgebraElement.basis(x.group, x.index)
        raise PreconditionError("cannot view %r as an algebra element" % (x,))

    def _require_same(self, other):
        if not same_group(self.group, other.group):
            raise PreconditionError("elements of different group algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._require_same(other)
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, 0) + c
        return AlgebraElement(self.group, out)

    def __neg__(self):
        return AlgebraElement(self.group, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._require_same(other)
            table = self.group.table
            out = {}
            for i, a in self.terms.items():
                for j, b in other.terms.items():
                    k = table[i][j]
                    out[k] = out.get(k, 0) + a * b
            return AlgebraElement(self.group, out)
        s = as_scalar(other)
        return AlgebraElement(self.group,
                              {i: c * s for i, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return same_group(self.group, other.group) and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.group), tuple(sorted(self.terms.items(),
                                                  key=lambda kv: kv[0]))))

    def __bool__(self):
        return bool(self.terms)

    # -- Hopf structure maps -------------------------------------------------

    def antipode(self) -> "AlgebraElement":
        inv = self.group.inv
        return AlgebraElement(self.group,
                              {inv[i]: c for i, c in self.terms.items()})

    def counit(self):
        acc = _F0
        for c in self.terms.values():
            acc = acc + c
        return acc

    def delta(self) -> "TensorElement":
        return TensorElement(self.group, 2,
                             {(i, i): c for i, c in self.terms.items()})

    # -- conversions -----------------------------------------------------------

    def to_vector(self):
        zero = _zero_like(self.terms.values())
        return [self.terms.get(i, zero) for i in range(self.group.order)]

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.group.elements
        bits = []
        for i in sorted(self.terms):
            c = self.terms[i]
            bits.append("%s*%s" % (scalar_to_str(c), names[i]))
        return " + ".join(bits)


def _zero_like(values):
    for v in values:
        return v * 0
    return _F0


class TensorElement:
    """A sparse element of H^(x)k: map from k-tuples of indices to scalars."""

    __slots__ = ("group", "arity", "terms")

    def __init__(self, group: Group, arity: int, terms=None):
        if arity < 1:
            raise PreconditionError("tensor arity must be at least 1")
        terms = dict(terms or {})
        for key in terms:
            if len(key) != arity:
                raise DimensionError("tensor key arity mismatch")
            if any(not 0 <= i < group.order for i in key):
                raise PreconditionError("tensor index out of range")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms",
                           {tuple(k): c for k, c in _clean_terms(terms).items()})

    def __setattr__(self, *a):
        raise AttributeError("TensorElement is immutable")

    @staticmethod
    def unit(group: Group, arity: int) -> "TensorElement":
        return TensorElement(group, arity, {(0,) * arity: 1})

    def _require_compatible(self, other):
        if not same_group(self.group, other.group):
            raise PreconditionError("tensors over different group algebras")
        if self.arity != other.arity:
            raise DimensionError("tensor arity mismatch")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._require_compatible(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.group, self.arity, out)

    def __neg__(self):
        return TensorElement(self.group, self.arity,
                             {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            self._require_compatible(other)
            table = self.group.table
            out = {}
            for k1, a in self.terms.items():
                for k2, b in other.terms.items():
                    k = tuple(table[i][j] for i, j in zip(k1, k2))
                    out[k] = out.get(k, 0) + a * b
            return TensorElement(self.group, self.arity, out)
        s = as_scalar(other)
        return TensorElement(self.group, self.arity,
                             {k: c * s for k, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (same_group(self.group, other.group)
                and self.arity == other.arity and self.terms == other.terms)

    def __hash__(self):
        return hash((id(self.group), self.arity,
                     tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def to_vector(self):
        """Dense coordinates over all index tuples in lexicographic order."""
        zero = _zero_like(self.terms.values())
        n = self.group.order
        return [self.terms.get(key, zero)
                for key in itertools.product(range(n), repeat=self.arity)]

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.group.elements
        bits = []
        for key in sorted(self.terms):
            c = self.terms[key]
            bits.append("%s*(%s)" % (scalar_to_str(c),
                                     "(x)".join(names[i] for i in key)))
        return " + ".join(bits)


def tensor(*factors) -> TensorElement:
    """Outer tensor product of algebra elements."""
    factors = [AlgebraElement.of(f) for f in factors]
    if not factors:
        raise PreconditionError("tensor of zero factors")
    group = factors[0].group
    for f in factors[1:]:
        if not same_group(group, f.group):
            raise PreconditionError("tensors over different group algebras")
    terms = {(): _F1}
    for f in factors:
        terms = {k + (i,): c * ci
                 for k, c in terms.items() for i, ci in f.terms.items()}
    return TensorElement(group, len(factors), terms)


def to_algebra(x: TensorElement) -> AlgebraElement:
    if x.arity != 1:
        raise DimensionError("only arity-1 tensors convert to algebra elements")
    return AlgebraElement(x.group, {k[0]: c for k, c in x.terms.items()})


# ---------------------------------------------------------------------------
# slot operations on tensors (everything a group-like basis makes cheap)
# ---------------------------------------------------------------------------

def apply_delta(x: TensorElement, slot: int) -> TensorElement:
    """Comultiply one slot: ... g ... becomes ... g g ... (arity grows by 1)."""
    if not 0 <= slot < x.arity:
        raise DimensionError("slot out of range")
    out = {}
    for k, c in x.terms.items():
        key = k[:slot] + (k[slot], k[slot]) + k[slot + 1:]
        out[key] = out.get(key, 0) + c
    return TensorElement(x.group, x.arity + 1, out)


def apply_antipode(x: TensorElement, slot: int) -> TensorElement:
    if not 0 <= slot < x.arity:
        raise DimensionError("slot out of range")
    inv = x.group.inv
    out = {}
    for k, c in x.terms.items():
        key = k[:slot] + (inv[k[slot]],) + k[slot + 1:]
        out[key] = out.get(key, 0) + c
    return TensorElement(x.group, x.arity, out)


def apply_counit(x: TensorElement, slot: int):
    """Apply the counit to one slot; drops to arity-1 (or a scalar at arity 1)."""
    if not 0 <= slot < x.arity:
        raise DimensionError("slot out of range")
    if x.arity == 1:
        acc = _F0
        for c in x.terms.values():
            acc = acc + c
        return acc
    out = {}
    for k, c in x.terms.items():
        key = k[:slot] + k[slot + 1:]
        out[key] = out.get(key, 0) + c
    return TensorElement(x.group, x.arity - 1, out)


def multiply_adjacent(x: TensorElement, slot: int) -> TensorElement:
    """Multiply slot and slot+1 together (arity drops by 1)."""
    if not 0 <= slot < x.arity - 1:
        raise DimensionError("slot out of range")
    table = x.group.table
    out = {}
    for k, c in x.terms.items():
        key = k[:slot] + (table[k[slot]][k[slot + 1]],) + k[slot + 2:]
        out[key] = out.get(key, 0) + c
    return TensorElement(x.group, x.arity - 1, out)


def permute_slots(x: TensorElement, perm) -> TensorElement:
    """Reorder slots: entry i of the result is old slot perm[i]."""
    perm = tuple(perm)
    if sorted(perm) != list(range(x.arity)):
        raise DimensionError("not a permutation of the slots")
    out = {}
    for k, c in x.terms.items():
        key = tuple(k[p] for p in perm)
        out[key] = out.get(key, 0) + c
    return TensorElement(x.group, x.arity, out)


def embed(x: TensorElement, arity: int, slots) -> TensorElement:
    """Place x into chosen slots of a larger tensor, identity elsewhere."""
    slots = tuple(slots)
    if len(slots) != x.arity or len(set(slots)) != x.arity:
        raise DimensionError("need one distinct target slot per factor")
    if any(not 0 <= s < arity for s in slots):
        raise DimensionError("slot out of range")
    out = {}
    for k, c in x.terms.items():
        key = [0] * arity
        for s, i in zip(slots, k):
            key[s] = i
        key = tuple(key)
        out[key] = out.get(key, 0) + c
    return TensorElement(x.group, arity, out)


def contract(x: TensorElement, xi: "Functional", slot: int):
    """Pair one slot against a functional; arity drops by 1 (or to a scalar)."""
    if not same_group(x.group, xi.group):
        raise PreconditionError("functional over a different group algebra")
    if not 0 <= slot < x.arity:
        raise DimensionError("slot out of range")
    if x.arity == 1:
        acc = _F0
        for k, c in x.terms.items():
            acc = acc + c * xi.values[k[0]]
        return acc
    out = {}
    for k, c in x.terms.items():
        s = c * xi.values[k[slot]]
        if not s:
            continue
        key = k[:slot] + k[slot + 1:]
        out[key] = out.get(key, 0) + s
    return TensorElement(x.group, x.arity - 1, out)


# ---------------------------------------------------------------------------
# the dual H*
# ---------------------------------------------------------------------------

class Functional:
    """An element of H* stored densely on the dual basis {delta_g}."""

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values):
        values = unify([as_scalar(v) for v in values])
        if len(values) != group.order:
            raise DimensionError("functional needs one value per element")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", tuple(values))

    def __setattr__(self, *a):
        raise AttributeError("Functional is immutable")

    @staticmethod
    def delta(group: Group, i: int) -> "Functional":
        return Functional(group, [_F1 if j == i else _F0
                                  for j in range(group.order)])

    @staticmethod
    def counit(group: Group) -> "Functional":
        return Functional(group, [_F1] * group.order)

    @staticmethod
    def zero(group: Group) -> "Functional":
        return Functional(group, [_F0] * group.order)

    def __call__(self, x):
        if isinstance(x, int):
            return self.values[x]
        if isinstance(x, GroupElement):
            return self.values[x.index]
        if isinstance(x, AlgebraElement):
            if not same_group(self.group, x.group):
                raise PreconditionError("pairing across different groups")
            acc = _F0
            for i, c in x.terms.items():
                acc = acc + c * self.values[i]
            return acc
        raise PreconditionError("cannot pair with %r" % (x,))

    def __add__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        if not same_group(self.group, other.group):
            raise PreconditionError("functionals over different groups")
        return Functional(self.group,
                          [a + b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return Functional(self.group, [-v for v in self.values])

    def __sub__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Functional):
            return convolve(self, other)
        s = as_scalar(other)
        return Functional(self.group, [v * s for v in self.values])

    def __rmul__(self, other):
        if isinstance(other, Functional):
            return NotImplemented
        return self * other

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return (same_group(self.group, other.group)
                and all(a == b for a, b in zip(self.values, other.values)))

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __bool__(self):
        return any(self.values)

    def __repr__(self):
        names = self.group.elements
        bits = ["%s*d(%s)" % (scalar_to_str(v), names[i])
                for i, v in enumerate(self.values) if v]
        return " + ".join(bits) if bits else "0"


def convolve(xi: Functional, eta: Functional) -> Functional:
    """Convolution product on H*; for kG this is pointwise on the basis.

    (xi . eta)(g) = xi(g_(1)) eta(g_(2)) = xi(g) eta(g) since g is group-like.
    """
    if not same_group(xi.group, eta.group):
        raise PreconditionError("functionals over different groups")
    return Functional(xi.group,
                      [a * b for a, b in zip(xi.values, eta.values)])


def pair(xi: Functional, x: AlgebraElement):
    return xi(x)


# ---------------------------------------------------------------------------
# the five actions
# ---------------------------------------------------------------------------

ACTIONS = ("ad", "ad_star", "diamond", "left", "right")


def _act_basis_algebra(action: str, g: int, b: AlgebraElement) -> AlgebraElement:
    grp = b.group
    table, inv = grp.table, grp.inv
    if action == "ad":
        f = lambda i: table[table[g][i]][inv[g]]
    elif action == "ad_star":
        f = lambda i: table[table[inv[g]][i]][g]
    elif action == "diamond":
        # S^2(g) b S(g), computed through the antipode
        s2, s1 = inv[inv[g]], inv[g]
        f = lambda i: table[table[s2][i]][s1]
    elif action == "left":
        f = lambda i: table[g][i]
    elif action == "right":
        f = lambda i: table[i][g]
    else:
        raise PreconditionError("unknown action %r" % action)
    out = {}
    for i, c in b.terms.items():
        j = f(i)
        out[j] = out.get(j, 0) + c
    return AlgebraElement(grp, out)


def _act_basis_tensor(action: str, g: int, b: TensorElement) -> TensorElement:
    grp = b.group
    table, inv = grp.table, grp.inv
    if action == "ad":
        f = lambda i: table[table[g][i]][inv[g]]
    elif action == "ad_star":
        f = lambda i: table[table[inv[g]][i]][g]
    elif action == "diamond":
        s2, s1 = inv[inv[g]], inv[g]
        f = lambda i: table[table[s2][i]][s1]
    elif action == "left":
        f = lambda i: table[g][i]
    elif action == "right":
        f = lambda i: table[i][g]
    else:
        raise PreconditionError("unknown action %r" % action)
    out = {}
    for k, c in b.terms.items():
        key = tuple(f(i) for i in k)
        out[key] = out.get(key, 0) + c
    return TensorElement(grp, b.arity, out)


def _act_basis_functional(action: str, g: int, b: Functional) -> Functional:
    grp = b.group
    table, inv = grp.table, grp.inv
    vals = b.values
    if action == "left":
        # (g . f)(b) = f(b g)
        new = [vals[table[i][g]] for i in range(grp.order)]
    elif action == "right":
        # (g . f)(b) = f(g b)
        new = [vals[table[g][i]] for i in range(grp.order)]
    elif action == "diamond":
        # S^2(g) acting left after S(g) acting right: f(S(g) b S^2(g))
        s2, s1 = inv[inv[g]], inv[g]
        new = [vals[table[table[s1][i]][s2]] for i in range(grp.order)]
    elif action == "ad":
        new = [vals[table[table[inv[g]][i]][g]] for i in range(grp.order)]
    elif action == "ad_star":
        new = [vals[table[table[g][i]][inv[g]]] for i in range(grp.order)]
    else:
        raise PreconditionError("unknown action %r" % action)
    return Functional(grp, new)


def act(action: str, h, b):
    """Apply one of the five actions of h on b, extended linearly in h."""
    if action not in ACTIONS:
        raise PreconditionError("unknown action %r (expected one of %s)"
                                % (action, ", ".join(ACTIONS)))
    h = AlgebraElement.of(h)
    if isinstance(b, AlgebraElement):
        if not same_group(h.group, b.group):
            raise PreconditionError("action across different groups")
        out = AlgebraElement.zero(b.group)
        for g, c in h.terms.items():
            out = out + _act_basis_algebra(action, g, b) * c
        return out
    if isinstance(b, TensorElement):
        if not same_group(h.group, b.group):
            raise PreconditionError("action across different groups")
        out = TensorElement(b.group, b.arity)
        for g, c in h.terms.items():
            out = out + _act_basis_tensor(action, g, b) * c
        return out
    if isinstance(b, Functional):
        if not same_group(h.group, b.group):
            raise PreconditionError("action across different groups")
        out = Functional.zero(b.group)
        for g, c in h.terms.items():
            out = out + _act_basis_functional(action, g, b) * c
        return out
    raise PreconditionError("cannot act on %r" % (b,))


def orbit_sum(x: TensorElement) -> TensorElement:
    """[x]_G = sum over g of (g (x) g) x (g^{-1} (x) g^{-1})."""
    if x.arity != 2:
        raise DimensionError("orbit sums are defined for two tensor factors")
    grp = x.group
    out = {}
    for g in range(grp.order):
        for (a, b), c in x.terms.items():
            key = (grp.conjugate(g, a), grp.conjugate(g, b))
            out[key] = out.get(key, 0) + c
    return TensorElement(grp, 2, out)


# ---------------------------------------------------------------------------
# invariant subspaces (several independently assembled linear systems)
# ---------------------------------------------------------------------------

def _nullspace_subspace(rows, n: int) -> Subspace:
    if not rows:
        return Subspace(n, [[_F1 if j == i else _F0 for j in range(n)]
                            for i in range(n)])
    res = solve_linear(rows, [_F0] * len(rows))
    return Subspace(n, res.nullspace)


def center_subspace(g: Group) -> Subspace:
    """{x : a x = x a for every group element a}, by left/right tables."""
    n = g.order
    rows = []
    for a in range(n):
        for target in range(n):
            row = [_F0] * n
            for i in range(n):
                if g.table[a][i] == target:
                    row[i] = row[i] + _F1
                if g.table[i][a] == target:
                    row[i] = row[i] - _F1
            if any(row):
                rows.append(row)
    return _nullspace_subspace(rows, n)


def conjugation_invariant_subspace(g: Group) -> Subspace:
    """{x : a x a^{-1} = x for every a}, assembled from the inverse table."""
    n = g.order
    rows = []
    for a in range(n):
        for i in range(n):
            j = g.conjugate(a, i)
            if j == i:
                continue
            row = [_F0] * n
            row[i], row[j] = _F1, -_F1
            rows.append(row)
    return _nullspace_subspace(rows, n)


def action_invariant_subspace(g: Group, action: str,
                              target: str = "algebra") -> Subspace:
    """Fixed points of the named action of the generators, via act itself.

    For each generator the matrix M of the action on the chosen space is
    assembled column by column (image of each basis vector), and the result
    is the joint nullspace of the matrices M - I.
    """
    if target not in ("algebra", "dual"):
        raise PreconditionError("unknown target %r" % target)
    n = g.order
    gens = [gi for gi, _ in g.generators] or list(range(n))
    rows = []
    for gi in gens:
        m = [[_F0] * n for _ in range(n)]
        for bi in range(n):
            if target == "algebra":
                image = _act_basis_algebra(action, gi,
                                           AlgebraElement.basis(g, bi))
                col = image.to_vector()
            else:
                image = _act_basis_functional(action, gi,
                                              Functional.delta(g, bi))
                col = list(image.values)
            for r in range(n):
                m[r][bi] = col[r]
        for r in range(n):
            m[r][r] = m[r][r] - _F1
        rows.extend(r for r in m if any(r))
    return _nullspace_subspace(rows, n)


def class_indicator_subspace(g: Group) -> Subspace:
    """Span of the conjugacy-class indicator vectors.

    Read in H* these are the class indicator functionals; read in H (as
    coefficient vectors) they are the class sums, a basis of the center.
    Either way the subspace of k^N is the same, built directly from the
    class partition with no linear solving.
    """
    n = g.order
    vecs = []
    for cls in g.conjugacy_classes():
        v = [_F0] * n
        for i in cls:
            v[i] = _F1
        vecs.append(v)
    return Subspace(n, vecs)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def tensor_to_json(x: TensorElement) -> dict:
    terms = [[*key, scalar_to_str(c)] for key, c in sorted(x.terms.items())]
    return {"group": x.group.descriptor, "arity": x.arity, "terms": terms}


def tensor_from_json(obj: dict) -> TensorElement:
    group = from_descriptor(obj["group"])
    arity = int(obj["arity"])
    terms = {}
    for entry in obj["terms"]:
        key = tuple(int(i) for i in entry[:-1])
        if len(key) != arity:
            raise DimensionError("tensor key arity mismatch")
        c = scalar_from_str(entry[-1])
        terms[key] = terms.get(key, 0) + c
    return TensorElement(group, arity, terms)
