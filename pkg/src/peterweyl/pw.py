"""Matrix-coefficient subspaces of the dual algebra and their characters.

For a module V the map beta sends v (x) f to the functional
g -> <g acts on v, f>.  Its image is the coefficient subspace of V inside
the dual algebra; the image of the identity tensor is the character z_V.
The decomposition machinery checks, entirely in exact arithmetic, that

* coefficient subspaces only see the isomorphism class (direct sums and
  cocycle extensions add nothing new),
* convolution multiplies coefficient subspaces the way tensor products
  multiply modules,
* the characters of the simples are a basis of the class functions, with
  convolution structure constants equal to the tensor multiplicities,
* over the whole list of simples the subspaces are independent and fill
  the dual algebra.
"""

from __future__ import annotations

import itertools

from .errors import DimensionError, InternalError, PreconditionError
from .exact.linalg import Infeasible, Subspace, solve_linear
from .exact.scalars import scalar_to_str
from .groups import Group, same_group
from .hopf import Functional, convolve
from .reps import Rep, decompose, extension_by_cocycle, irreps, pairing


def beta(v: Rep, vec, fvec) -> Functional:
    """The matrix-coefficient functional g -> <g acts on vec, fvec>."""
    vec = list(vec)
    fvec = list(fvec)
    if len(vec) != v.dim or len(fvec) != v.dim:
        raise DimensionError("coordinate length must match the module")
    grp = v.group
    return Functional(grp, [pairing(v.matrix(g).apply(vec), fvec)
                            for g in range(grp.order)])


def z(v: Rep) -> Functional:
    """The character functional z_V: the trace of the action."""
    return v.character()


class PWComponent:
    """A coefficient subspace together with its character."""

    __slots__ = ("label", "subspace", "z")

    def __init__(self, label: str, subspace: Subspace, z_fun: Functional):
        if not subspace.contains(list(z_fun.values)):
            raise InternalError("the character must lie in its own component")
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "subspace", subspace)
        object.__setattr__(self, "z", z_fun)

    def __setattr__(self, *a):
        raise AttributeError("PWComponent is immutable")

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def __eq__(self, other):
        if not isinstance(other, PWComponent):
            return NotImplemented
        return self.subspace == other.subspace

    def __repr__(self):
        return "PWComponent(%s, dim=%d)" % (self.label, self.dim)


def component(v: Rep) -> PWComponent:
    """Span of all matrix-coefficient functionals of V."""
    grp = v.group
    unit = [0] * v.dim
    vectors = []
    for i in range(v.dim):
        e_i = list(unit)
        e_i[i] = 1
        for j in range(v.dim):
            f_j = list(unit)
            f_j[j] = 1
            vectors.append(beta(v, e_i, f_j).values)
    return PWComponent(v.label, Subspace(grp.order, vectors), z(v))


def z_additive_check(v: Rep, w: Rep, rho) -> bool:
    """Does the extension along rho have character z(V) + z(W)?"""
    ext = extension_by_cocycle(v, w, rho)
    return z(ext) == z(v) + z(w)


def z_multiplicative_check(v: Rep, w: Rep) -> bool:
    """Does convolution of characters match the tensor product character?"""
    return convolve(z(v), z(w)) == z(v.tensor(w))


def product_component_check(v: Rep, w: Rep) -> bool:
    """Is the convolution span of two components the tensor component?"""
    if not same_group(v.group, w.group):
        raise PreconditionError("representations of different groups")
    grp = v.group
    cv = component(v)
    cw = component(w)
    products = []
    for a in cv.subspace.basis:
        for b in cw.subspace.basis:
            products.append(convolve(Functional(grp, a),
                                     Functional(grp, b)).values)
    return Subspace(grp.order, products) == component(v.tensor(w)).subspace


def direct_sum_decomposition(group: Group) -> bool:
    """Do the simple components independently fill the whole dual algebra?"""
    comps = [component(v) for v in irreps(group)]
    if sum(c.dim for c in comps) != group.order:
        return False
    total = Subspace(group.order, [])
    for c in comps:
        total = total.sum(c.subspace)
    return total.dim == group.order


def _coords_on(chars, target: Functional):
    """Solve for target as a combination of the given functionals."""
    rows = [[c.values[g] for c in chars] for g in range(len(target.values))]
    res = solve_linear(rows, list(target.values), want_nullspace=False)
    if isinstance(res, Infeasible):
        raise InternalError("character product left the span of characters")
    return list(res.particular)


def character_structure_constants(group: Group) -> dict:
    """Coefficients of convolve(z_V, z_W) on the character basis.

    Returned as {(label_V, label_W): {label: coefficient}}; an InternalError
    is raised if some product fails to lie in the span of the characters.
    The numbers are checked against the tensor multiplicities by the tests.
    """
    simples = irreps(group)
    chars = [z(v) for v in simples]
    if Subspace(group.order, [c.values for c in chars]).dim != len(simples):
        raise InternalError("characters of the simples must be independent")
    out = {}
    for v, cv in zip(simples, chars):
        for w, cw in zip(simples, chars):
            coords = _coords_on(chars, convolve(cv, cw))
            out[v.label, w.label] = {
                simples[k].label: coords[k]
                for k in range(len(simples)) if coords[k]
            }
    return out


def component_report(group: Group) -> dict:
    """Per-simple dimensions, character vectors, and the product table."""
    simples = irreps(group)
    comps = {v.label: component(v) for v in simples}
    report = {
        "group": group.descriptor,
        "order": group.order,
        "components": {
            label: {
                "dim": comp.dim,
                "z": [scalar_to_str(x) for x in comp.z.values],
            }
            for label, comp in comps.items()
        },
        "products": {},
        "direct_sum_fills_dual": direct_sum_decomposition(group),
    }
    for v, w in itertools.product(simples, repeat=2):
        mult = decompose(v.tensor(w)).multiplicities
        report["products"]["%s|%s" % (v.label, w.label)] = dict(
            sorted(mult.items()))
    return report
