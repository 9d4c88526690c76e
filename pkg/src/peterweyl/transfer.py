"""The transfer map from the dual algebra into the group algebra.

A two-slot tensor P induces the linear map xi -> (xi (x) 1)(P).  Three
families of exact predicates classify P:

* admissible: P (S^2 (x) 1)(Delta h) = (Delta h) P, equivalently either of
  two slotwise reformulations (the three are checked independently and must
  agree);
* multiplicative: images of coefficient subspaces multiply into the image
  of the tensor-product subspace, pair by pair;
* strongly multiplicative: on characters the map is an algebra
  homomorphism into the center.

A sufficient criterion for multiplicativity is the factorization
(Delta (x) 1)(P) = (m (x) m (x) 1)((T (x) 1) P_15 P_35) for a four-slot
tensor T; the defining equation is linear in T, so the solver assembles
the full coefficient system and hands it to the exact kernel, returning
either T or an infeasibility certificate.

Admissible multiplicative candidates come from pairs (R+, R-) satisfying
quasitriangularity-style axioms: P = (R+)_21 R- (g (x) 1) with g group-like
central.  Abelian groups provide such pairs through bicharacters; the
symmetric group on three letters has a two-parameter family built from
orbit sums, transcribed here exactly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import (
    InternalError,
    MembershipError,
    PreconditionError,
)
from .exact.linalg import Infeasible, Matrix, Subspace, solve_linear
from .exact.scalars import Cyclotomic, as_scalar, scalar_to_str
from .groups import Group, from_descriptor, same_group
from .hopf import (
    AlgebraElement,
    Functional,
    TensorElement,
    act,
    apply_delta,
    convolve,
    embed,
    multiply_adjacent,
    orbit_sum,
    permute_slots,
    tensor,
)
from .pw import component, z
from .reps import decompose_character, irreps

_F0 = Fraction(0)
_F1 = Fraction(1)


class PCandidate:
    """A two-slot tensor together with a note saying how it was built."""

    __slots__ = ("tensor", "note")

    def __init__(self, tens: TensorElement, note: str = ""):
        if tens.arity != 2:
            raise PreconditionError("candidates live in two tensor slots")
        object.__setattr__(self, "tensor", tens)
        object.__setattr__(self, "note", note)

    def __setattr__(self, *a):
        raise AttributeError("PCandidate is immutable")

    @property
    def group(self) -> Group:
        return self.tensor.group

    def __eq__(self, other):
        if not isinstance(other, PCandidate):
            return NotImplemented
        return self.tensor == other.tensor

    def __repr__(self):
        return "PCandidate(%s)" % (self.note or "unnamed")


def _tensor_of(p) -> TensorElement:
    if isinstance(p, PCandidate):
        return p.tensor
    if isinstance(p, TensorElement):
        return p
    raise PreconditionError("expected a candidate or a two-slot tensor")


# ---------------------------------------------------------------------------
# the transfer map itself
# ---------------------------------------------------------------------------

def phi(p, xi: Functional) -> AlgebraElement:
    """(xi (x) 1)(P): pair the first slot with xi, keep the second."""
    t = _tensor_of(p)
    if not same_group(t.group, xi.group):
        raise PreconditionError("functional and tensor over different groups")
    out: dict = {}
    for (a, b), c in t.terms.items():
        v = xi.values[a]
        if v:
            out[b] = out.get(b, 0) + c * v
    return AlgebraElement(t.group, out)


def phi_matrix(p) -> Matrix:
    """Matrix of the transfer map on the delta basis: column g is phi(delta_g)."""
    t = _tensor_of(p)
    n = t.group.order
    rows = [[_F0] * n for _ in range(n)]
    for (a, b), c in t.terms.items():
        rows[b][a] = rows[b][a] + c
    return Matrix(rows)


def phi_rank(p) -> int:
    return phi_matrix(p).rank()


# ---------------------------------------------------------------------------
# admissibility (three equivalent slotwise conditions)
# ---------------------------------------------------------------------------

def _gen_indices(g: Group):
    return [gi for gi, _ in g.generators]


def _map_slots(t: TensorElement, f1, f2) -> TensorElement:
    out: dict = {}
    for (a, b), c in t.terms.items():
        key = (f1(a), f2(b))
        out[key] = out.get(key, 0) + c
    return TensorElement(t.group, 2, out)


def in_a_conditions(p):
    """The three admissibility conditions, each checked on all generators.

    For a group algebra the antipode squares to the identity, so the
    product condition reads P (g (x) g) = (g (x) g) P; the translation
    condition reads (1 (x) g) P = (g^{-1} P_1 g) (x) (P_2 g); the adjoint
    condition reads (g^{-1} P_1 g) (x) P_2 = P_1 (x) (g P_2 g^{-1}).
    """
    t = _tensor_of(p)
    grp = t.group
    mul, inv = grp.mul, grp.inverse
    ok_product = True
    ok_translation = True
    ok_adjoint = True
    for gi in _gen_indices(grp):
        gg = tensor(AlgebraElement.basis(grp, gi),
                    AlgebraElement.basis(grp, gi))
        if t * gg != gg * t:
            ok_product = False
        lhs = _map_slots(t, lambda a: a, lambda b: mul(gi, b))
        rhs = _map_slots(t, lambda a: mul(inv(gi), mul(a, gi)),
                         lambda b: mul(b, gi))
        if lhs != rhs:
            ok_translation = False
        lhs2 = _map_slots(t, lambda a: mul(inv(gi), mul(a, gi)), lambda b: b)
        rhs2 = _map_slots(t, lambda a: a,
                          lambda b: mul(gi, mul(b, inv(gi))))
        if lhs2 != rhs2:
            ok_adjoint = False
    return ok_product, ok_translation, ok_adjoint


def in_a(p) -> bool:
    """Admissibility; the three equivalent conditions must agree."""
    a, b, c = in_a_conditions(p)
    if not (a == b == c):
        raise InternalError(
            "the equivalent admissibility conditions disagree: %s %s %s"
            % (a, b, c))
    return a


def equivariance_check(p) -> bool:
    """phi intertwines the diamond action with the adjoint action."""
    if not in_a(p):
        raise PreconditionError("equivariance requires an admissible tensor")
    t = _tensor_of(p)
    grp = t.group
    for gi in _gen_indices(grp):
        h = AlgebraElement.basis(grp, gi)
        for i in range(grp.order):
            xi = Functional.delta(grp, i)
            if phi(t, act("diamond", h, xi)) != act("ad", h, phi(t, xi)):
                return False
    return True


def center_image_check(p) -> bool:
    """phi sends every class function into the center."""
    if not in_a(p):
        raise PreconditionError(
            "the center-image property requires an admissible tensor")
    t = _tensor_of(p)
    grp = t.group
    gens = [AlgebraElement.basis(grp, gi) for gi in _gen_indices(grp)]
    for cls in grp.conjugacy_classes():
        ind = Functional(grp, [_F1 if i in cls else _F0
                               for i in range(grp.order)])
        img = phi(t, ind)
        for h in gens:
            if img * h != h * img:
                return False
    return True


# ---------------------------------------------------------------------------
# multiplicativity
# ---------------------------------------------------------------------------

def _image_vectors(t: TensorElement, subspace: Subspace):
    grp = t.group
    return [phi(t, Functional(grp, v)).to_vector() for v in subspace.basis]


def in_m(p):
    """Pairwise multiplicativity on coefficient subspaces, with witnesses.

    Returns (bool, witnesses); each witness is a pair of irreducible labels
    whose image product escapes the image of the tensor component.
    """
    t = _tensor_of(p)
    grp = t.group
    simples = irreps(grp)
    images = {}
    for v in simples:
        images[v.label] = _image_vectors(t, component(v).subspace)
    witnesses = []
    for v in simples:
        for w in simples:
            target = Subspace(
                grp.order,
                _image_vectors(t, component(v.tensor(w)).subspace))
            products = []
            for x in images[v.label]:
                ex = AlgebraElement(grp, dict(enumerate(x)))
                for y in images[w.label]:
                    ey = AlgebraElement(grp, dict(enumerate(y)))
                    products.append((ex * ey).to_vector())
            if not target.contains_subspace(Subspace(grp.order, products)):
                witnesses.append((v.label, w.label))
    return not witnesses, tuple(witnesses)


def in_m0(p) -> bool:
    """Is the transfer map an algebra homomorphism on characters into Z?"""
    t = _tensor_of(p)
    grp = t.group
    simples = irreps(grp)
    if len(simples) != len(grp.conjugacy_classes()):
        raise InternalError("character count must match class count")
    gens = [AlgebraElement.basis(grp, gi) for gi in _gen_indices(grp)]
    zs = [z(v) for v in simples]
    imgs = [phi(t, zi) for zi in zs]
    for img in imgs:
        for h in gens:
            if img * h != h * img:
                return False
    for i, zi in enumerate(zs):
        for j in range(i, len(zs)):
            if phi(t, convolve(zi, zs[j])) != imgs[i] * imgs[j]:
                return False
    return True


# ---------------------------------------------------------------------------
# the T-factorization
# ---------------------------------------------------------------------------

def solve_t(p):
    """Solve (Delta (x) 1)(P) = (m (x) m (x) 1)((T (x) 1) P_15 P_35) for T.

    The unknown T ranges over the full four-fold tensor power, so the
    system has |G|^3 equations in |G|^4 unknowns.  Returns a four-slot
    tensor or the Infeasible certificate produced by the exact solver.
    """
    t = _tensor_of(p)
    grp = t.group
    n = grp.order
    mul, inv = grp.mul, grp.inverse
    coeffs = t.terms

    def row_index(g1, g2, g3):
        return (g1 * n + g2) * n + g3

    rows = [[_F0] * (n ** 4) for _ in range(n ** 3)]
    col = 0
    support = list(coeffs.items())
    for t1 in range(n):
        for t2 in range(n):
            for t3 in range(n):
                for t4 in range(n):
                    for (p1, p2), c in support:
                        g1 = mul(t1, mul(p1, t2))
                        base = c
                        for (q1, q2), d in support:
                            g2 = mul(t3, mul(q1, t4))
                            g3 = mul(p2, q2)
                            r = row_index(g1, g2, g3)
                            rows[r][col] = rows[r][col] + base * d
                    col += 1
    b = [_F0] * (n ** 3)
    for (a, c2), coeff in coeffs.items():
        b[row_index(a, a, c2)] = b[row_index(a, a, c2)] + coeff
    res = solve_linear(rows, b, want_nullspace=False)
    if isinstance(res, Infeasible):
        return res
    terms = {}
    idx = 0
    for t1 in range(n):
        for t2 in range(n):
            for t3 in range(n):
                for t4 in range(n):
                    v = res.particular[idx]
                    if v:
                        terms[(t1, t2, t3, t4)] = v
                    idx += 1
    return TensorElement(grp, 4, terms)


def check_t(p, t4: TensorElement) -> bool:
    """Re-substitute a proposed T into the defining equation."""
    t = _tensor_of(p)
    if t4.arity != 4:
        raise PreconditionError("T must have four slots")
    lhs = apply_delta(t, 0)
    big = embed(t4, 5, (0, 1, 2, 3)) * embed(t, 5, (0, 4)) \
        * embed(t, 5, (2, 4))
    rhs = multiply_adjacent(multiply_adjacent(big, 0), 1)
    return lhs == rhs


def check_t_normalized(t4: TensorElement) -> bool:
    """(m^op (x) m^op)(T) = 1 (x) 1."""
    if t4.arity != 4:
        raise PreconditionError("T must have four slots")
    grp = t4.group
    mul = grp.mul
    out: dict = {}
    for (a, b, c, d), coeff in t4.terms.items():
        key = (mul(b, a), mul(d, c))
        out[key] = out.get(key, 0) + coeff
    return TensorElement(grp, 2, out) == TensorElement.unit(grp, 2)


def phi_mult_identity_check(p, t4: TensorElement, xi: Functional,
                            eta: Functional) -> bool:
    """phi(xi.eta) = sum over T of phi(t2 > xi < t1) phi(t4 > eta < t3)."""
    t = _tensor_of(p)
    grp = t.group
    lhs = phi(t, convolve(xi, eta))
    rhs = AlgebraElement.zero(grp)
    for (t1, t2, t3, t4i), coeff in t4.terms.items():
        xi_mod = act("left", AlgebraElement.basis(grp, t2),
                     act("right", AlgebraElement.basis(grp, t1), xi))
        eta_mod = act("left", AlgebraElement.basis(grp, t4i),
                      act("right", AlgebraElement.basis(grp, t3), eta))
        rhs = rhs + (phi(t, xi_mod) * phi(t, eta_mod)) * coeff
    return lhs == rhs


# ---------------------------------------------------------------------------
# candidates from (R+, R-) pairs
# ---------------------------------------------------------------------------

def r_failures(rplus: TensorElement, rminus: TensorElement):
    """Names of the violated axioms for the pair (R+, R-), empty if none."""
    grp = rplus.group
    if not same_group(grp, rminus.group):
        raise PreconditionError("the pair must live over one group")
    fails = []
    for name, r in (("plus", rplus), ("minus", rminus)):
        if apply_delta(r, 0) != embed(r, 3, (0, 2)) * embed(r, 3, (1, 2)):
            fails.append("coproduct on first slot of R%s" % name)
    if apply_delta(rplus, 1) \
            != embed(rplus, 3, (0, 2)) * embed(rplus, 3, (0, 1)):
        fails.append("coproduct on second slot of Rplus")
    prod = permute_slots(rplus, (1, 0)) * rminus
    for gi in _gen_indices(grp):
        gg = tensor(AlgebraElement.basis(grp, gi),
                    AlgebraElement.basis(grp, gi))
        if prod * gg != gg * prod:
            fails.append("commutation with the coproduct image")
            break
    return tuple(fails)


def r_membership(rplus: TensorElement, rminus: TensorElement) -> bool:
    return not r_failures(rplus, rminus)


def grouplike_check(g: AlgebraElement) -> bool:
    """Group-like with g S^2(h) = h g; for group algebras: central basis g."""
    if g.delta() != tensor(g, g) or g.counit() != 1:
        return False
    for gi in _gen_indices(g.group):
        h = AlgebraElement.basis(g.group, gi)
        if g * h != h * g:
            return False
    return True


def p_from_r(rplus: TensorElement, rminus: TensorElement,
             g: AlgebraElement) -> PCandidate:
    """P = (R+)_21 R- (g (x) 1); admissible and strongly multiplicative."""
    fails = r_failures(rplus, rminus)
    if fails:
        raise MembershipError("axioms failed: " + "; ".join(fails))
    if not grouplike_check(g):
        raise MembershipError(
            "g must be group-like and commute with the antipode square")
    p = permute_slots(rplus, (1, 0)) * rminus \
        * tensor(g, AlgebraElement.one(g.group))
    cand = PCandidate(p, "from-r-pair")
    if not in_a(cand):
        raise InternalError("an r-pair candidate must be admissible")
    if not in_m0(cand):
        raise InternalError(
            "an r-pair candidate must be strongly multiplicative")
    return cand


def t_from_r(rplus: TensorElement) -> TensorElement:
    """T = (S (x) S^2 (x) 1 (x) 1)((R+)_13 (R+)_23), four slots."""
    big = embed(rplus, 4, (0, 2)) * embed(rplus, 4, (1, 2))
    inv = rplus.group.inv
    out: dict = {}
    for (a, b, c, d), coeff in big.terms.items():
        key = (inv[a], b, c, d)
        out[key] = out.get(key, 0) + coeff
    return TensorElement(rplus.group, 4, out)


def _bichar_table(descriptor):
    """Coefficient table of the standard bicharacter of an abelian group."""
    kind = descriptor.get("kind")
    if kind == "cyclic":
        n = descriptor["n"]
        out = {}
        for a in range(n):
            for b in range(n):
                if n == 1:
                    val = _F1
                elif n == 2:
                    val = _F1 if (a * b) % 2 == 0 else -_F1
                else:
                    zk = Cyclotomic.zeta(n, (a * b) % n)
                    val = zk.as_fraction() if zk.is_rational else zk
                out[a, b] = val
        return out, n
    if kind == "product":
        ta, na = _bichar_table(descriptor["factors"][0])
        tb, nb = _bichar_table(descriptor["factors"][1])
        out = {}
        for (a1, b1), va in ta.items():
            for (a2, b2), vb in tb.items():
                out[a1 * nb + a2, b1 * nb + b2] = va * vb
        return out, na * nb
    raise PreconditionError(
        "bicharacters are built for cyclic groups and their products")


def bicharacter_r(group: Group) -> TensorElement:
    """R = (1/|G|) sum of bichar(a, b) a (x) b, an R-matrix for abelian G."""
    table, n = _bichar_table(group.descriptor)
    if n != group.order:
        raise InternalError("bicharacter table size mismatch")
    scale = Fraction(1, n)
    return TensorElement(group, 2,
                         {k: v * scale for k, v in table.items()})


def unit_p(group: Group) -> PCandidate:
    return PCandidate(TensorElement.unit(group, 2), "unit")


def regular_p(group: Group) -> PCandidate:
    """Sum of g (x) g^{-1}; transfers delta_g to g^{-1}."""
    terms = {(i, group.inverse(i)): _F1 for i in range(group.order)}
    return PCandidate(TensorElement(group, 2, terms), "regular")


def s3_family(lam, mu) -> PCandidate:
    """The two-parameter family over the symmetric group on three letters.

    Three orbit-sum groups with coefficients 1/6, 1/36, 1/18; the transfer
    map is bijective exactly when both parameters are nonzero.
    """
    from .groups import symmetric

    lam = as_scalar(lam)
    mu = as_scalar(mu)
    grp = symmetric(3)
    e = AlgebraElement.one(grp)
    s1 = AlgebraElement.basis(grp, grp.generators[0][0])
    s2 = AlgebraElement.basis(grp, grp.generators[1][0])
    s1s2 = s1 * s2
    s2s1 = s2 * s1
    s1s2s1 = s1 * s2 * s1

    first = TensorElement(grp, 2,
                          {(0, i): Fraction(1, 6) for i in range(6)})
    inner2 = (e + s1 * (mu * 2 - 1) - (s2 + s1s2s1) * (mu + 1)
              + s1s2 + s2s1)
    second = orbit_sum(tensor(s1, inner2)) * Fraction(1, 36)
    inner3 = e * 2 + s1s2 * (lam - 1) - s2s1 * (lam + 1)
    third = orbit_sum(tensor(s1s2, inner3)) * Fraction(1, 18)
    note = "s3-family(%s,%s)" % (scalar_to_str(lam), scalar_to_str(mu))
    return PCandidate(first + second + third, note)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

class MembershipReport:
    """All predicate outcomes for one candidate."""

    __slots__ = ("product_condition", "translation_condition",
                 "adjoint_condition", "admissible", "multiplicative",
                 "character_multiplicative", "rank", "center_image",
                 "witnesses")

    def __init__(self, conds, multiplicative, witnesses,
                 character_multiplicative, rank, center_image):
        a, b, c = conds
        if not (a == b == c):
            raise InternalError(
                "the equivalent admissibility conditions disagree")
        object.__setattr__(self, "product_condition", a)
        object.__setattr__(self, "translation_condition", b)
        object.__setattr__(self, "adjoint_condition", c)
        object.__setattr__(self, "admissible", a)
        object.__setattr__(self, "multiplicative", multiplicative)
        object.__setattr__(self, "character_multiplicative",
                           character_multiplicative)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "center_image", center_image)
        object.__setattr__(self, "witnesses", tuple(witnesses))

    def __setattr__(self, *a):
        raise AttributeError("MembershipReport is immutable")

    def to_json(self) -> dict:
        return {
            "A": self.admissible,
            "A_conditions": [self.product_condition,
                             self.translation_condition,
                             self.adjoint_condition],
            "M": self.multiplicative,
            "M_witnesses": [list(w) for w in self.witnesses],
            "M0": self.character_multiplicative,
            "rank": self.rank,
            "center_image": self.center_image,
        }


def membership_report(p) -> MembershipReport:
    t = _tensor_of(p)
    conds = in_a_conditions(t)
    admissible = conds[0] and conds[1] and conds[2]
    m_ok, witnesses = in_m(t)
    # the two multiplicativity conditions are independent: a candidate can
    # be multiplicative on characters while a pairwise component product
    # escapes its target, so M0 is always computed outright
    m0_ok = in_m0(t)
    center = center_image_check(t) if admissible else False
    return MembershipReport(conds, m_ok, witnesses, m0_ok, phi_rank(t),
                            center)


def mock_pw_decomposition(p) -> dict:
    """Block decomposition of the group algebra through the transfer map.

    Requires admissibility, multiplicativity, and bijectivity; produces
    per-simple blocks with their adjoint-action characters decomposed, a
    directness flag, and the span data of the central character images.
    """
    t = _tensor_of(p)
    grp = t.group
    if not in_a(t):
        raise PreconditionError("decomposition requires an admissible tensor")
    m_ok, _ = in_m(t)
    if not m_ok:
        raise PreconditionError(
            "decomposition requires a multiplicative tensor")
    if phi_rank(t) != grp.order:
        raise PreconditionError("decomposition requires a bijective transfer")
    simples = irreps(grp)
    blocks = []
    running = Subspace(grp.order, [])
    direct = True
    for v in simples:
        sub = Subspace(grp.order,
                       _image_vectors(t, component(v).subspace))
        traces = []
        for g in range(grp.order):
            h = AlgebraElement.basis(grp, g)
            trace = _F0
            for j, row in enumerate(sub.basis):
                img = act("ad", h, AlgebraElement(grp, dict(enumerate(row))))
                vec = img.to_vector()
                if not sub.contains(vec):
                    raise InternalError("block is not stable under the "
                                        "adjoint action")
                trace = trace + vec[sub.pivots[j]]
            traces.append(trace)
        ad_char = Functional(grp, traces)
        ad_type = decompose_character(grp, ad_char)
        expected = Functional(grp, [
            v.character()(g) * v.character()(grp.inverse(g))
            for g in range(grp.order)])
        if ad_char != expected:
            raise InternalError(
                "adjoint character of the block must match V tensor V-dual")
        grown = running.sum(sub)
        if grown.dim != running.dim + sub.dim:
            direct = False
        running = grown
        blocks.append({"label": v.label, "dim": sub.dim,
                       "ad_type": dict(sorted(ad_type.multiplicities.items()))})
    c_vectors = [phi(t, z(v)).to_vector() for v in simples]
    c_span = Subspace(grp.order, c_vectors)
    center_dim = len(grp.conjugacy_classes())
    return {
        "group": grp.descriptor,
        "order": grp.order,
        "blocks": blocks,
        "dims": [b["dim"] for b in blocks],
        "direct": direct and running.dim == grp.order,
        "c_rank": c_span.dim,
        "center_dim": center_dim,
        "c_spans_center": c_span.dim == center_dim,
    }
