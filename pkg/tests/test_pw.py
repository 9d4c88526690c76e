"""Coefficient subspaces, characters, and the decomposition of the dual.

The structure constants of character convolution are compared against the
tensor multiplicities computed by the wholly independent character-pairing
route in the module layer."""

import itertools
import random
from fractions import Fraction

import pytest

from peterweyl.errors import CocycleError, DimensionError
from peterweyl.exact.linalg import Subspace
from peterweyl.groups import cyclic, dihedral, parse_group, symmetric
from peterweyl.hopf import (
    AlgebraElement,
    Functional,
    act,
    class_indicator_subspace,
    convolve,
)
from peterweyl.reps import coboundary, decompose, irreps, zero_cocycle
from peterweyl.pw import (
    PWComponent,
    beta,
    character_structure_constants,
    component,
    component_report,
    direct_sum_decomposition,
    product_component_check,
    z,
    z_additive_check,
    z_multiplicative_check,
)
from peterweyl.exact.linalg import Matrix

F = Fraction


def by_label(group):
    return {v.label: v for v in irreps(group)}


# ---------------------------------------------------------------------------
# beta
# ---------------------------------------------------------------------------

def test_beta_of_trivial_is_counit():
    g = symmetric(3)
    t = by_label(g)["triv"]
    assert beta(t, [1], [1]) == Functional.counit(g)


def test_beta_of_sign_is_sign_functional():
    g = symmetric(3)
    s = by_label(g)["sgn"]
    # elements: e, two transpositions, two 3-cycles, one transposition
    assert tuple(beta(s, [1], [1]).values) \
        == (F(1), F(-1), F(-1), F(1), F(1), F(-1))


def test_beta_reads_matrix_entries():
    g = symmetric(3)
    v = by_label(g)["std"]
    for i in range(2):
        for j in range(2):
            e_i = [1 if k == i else 0 for k in range(2)]
            f_j = [1 if k == j else 0 for k in range(2)]
            fun = beta(v, e_i, f_j)
            for a in range(6):
                assert fun(a) == v.matrix(a).rows[j][i]


def test_beta_dimension_mismatch():
    v = by_label(symmetric(3))["std"]
    with pytest.raises(DimensionError):
        beta(v, [1], [1, 0])


def test_beta_is_a_bimodule_homomorphism():
    g = symmetric(3)
    v = by_label(g)["std"]
    rng = random.Random(601)
    for _ in range(20):
        h = rng.randrange(6)
        vec = [F(rng.randint(-3, 3)) for _ in range(2)]
        fvec = [F(rng.randint(-3, 3)) for _ in range(2)]
        base = beta(v, vec, fvec)
        hh = AlgebraElement.basis(g, h)
        left = beta(v, v.matrix(h).apply(vec), fvec)
        assert left == act("left", hh, base)
        right = beta(v, vec, v.dual().act_right(fvec, h))
        assert right == act("right", hh, base)


def test_beta_bilinear():
    g = dihedral(4)
    v = by_label(g)["rho1"]
    rng = random.Random(602)
    for _ in range(10):
        a = [F(rng.randint(-3, 3)) for _ in range(2)]
        b = [F(rng.randint(-3, 3)) for _ in range(2)]
        f = [F(rng.randint(-3, 3)) for _ in range(2)]
        s = F(rng.randint(-3, 3))
        lhs = beta(v, [x + s * y for x, y in zip(a, b)], f)
        assert lhs == beta(v, a, f) + beta(v, b, f) * s


# ---------------------------------------------------------------------------
# components
# ---------------------------------------------------------------------------

def test_component_of_trivial():
    g = symmetric(3)
    c = component(by_label(g)["triv"])
    assert c.dim == 1
    assert c.subspace == Subspace(6, [[F(1)] * 6])


def test_component_of_standard_has_dim_four():
    assert component(by_label(symmetric(3))["std"]).dim == 4


def test_component_dims_are_squares_for_simples():
    for grp in (symmetric(3), dihedral(4), cyclic(5), parse_group("Z2xZ2")):
        for v in irreps(grp):
            assert component(v).dim == v.dim ** 2


def test_component_ignores_multiplicity():
    v = by_label(symmetric(3))["std"]
    assert component(v.direct_sum(v)) == component(v)


def test_component_of_extension_is_sum_of_components():
    reps = by_label(symmetric(3))
    v, w = reps["std"], reps["sgn"]
    from peterweyl.reps import extension_by_cocycle
    rho = coboundary(v, w, Matrix([[F(2)], [F(-1)]]))
    ext = extension_by_cocycle(v, w, rho)
    assert component(ext).subspace \
        == component(v).subspace.sum(component(w).subspace)


def test_distinct_simples_have_independent_components():
    for grp in (symmetric(3), dihedral(4)):
        comps = [component(v) for v in irreps(grp)]
        for a, b in itertools.combinations(comps, 2):
            assert a.subspace != b.subspace
            assert a.subspace.intersect(b.subspace).dim == 0


def test_pairing_block_of_submodule_against_quotient_dual_vanishes():
    # inside an extension the submodule block pairs to zero against the
    # dual coordinates of the quotient block, cocycle or not
    from peterweyl.reps import extension_by_cocycle
    reps = by_label(symmetric(3))
    v, w = reps["std"], reps["sgn"]
    rho = coboundary(v, w, Matrix([[F(1)], [F(3)]]))
    ext = extension_by_cocycle(v, w, rho)
    for i in range(v.dim):
        vec = [F(1) if k == i else F(0) for k in range(3)]
        fvec = [F(0), F(0), F(1)]
        assert not beta(ext, vec, fvec)


def test_pw_component_requires_character_inside():
    g = symmetric(3)
    with pytest.raises(Exception):
        PWComponent("bogus", Subspace(6, [[1, 0, 0, 0, 0, 0]]),
                    Functional.counit(g))


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

def test_z_of_trivial_is_counit():
    g = symmetric(3)
    assert z(by_label(g)["triv"]) == Functional.counit(g)


def test_z_of_standard_frozen():
    # delta-basis vector ordered by element index; on classes this reads
    # 2 at the identity, 0 at transpositions, -1 at three-cycles
    vals = z(by_label(symmetric(3))["std"]).values
    assert tuple(vals) == (F(2), F(0), F(0), F(-1), F(-1), F(0))


def test_z_at_identity_is_dimension():
    for grp in (symmetric(3), dihedral(4), cyclic(5)):
        for v in irreps(grp):
            assert z(v)(0) == v.dim


def test_z_are_class_functions():
    for grp in (symmetric(3), dihedral(4), cyclic(5)):
        ind = class_indicator_subspace(grp)
        for v in irreps(grp):
            assert ind.contains(list(z(v).values))


def test_z_invariant_under_adjoint_action_on_dual():
    g = dihedral(4)
    for v in irreps(g):
        zi = z(v)
        for h in range(g.order):
            assert act("ad", AlgebraElement.basis(g, h), zi) == zi


def test_z_additive_over_extensions():
    reps = by_label(symmetric(3))
    v, w = reps["std"], reps["sgn"]
    assert z_additive_check(v, w, zero_cocycle(v, w))
    assert z_additive_check(v, w, coboundary(v, w, Matrix([[F(1)], [F(2)]])))
    with pytest.raises(CocycleError):
        z_additive_check(v, w, tuple(Matrix([[F(1)], [F(1)]])
                                     for _ in range(6)))


def test_z_multiplicative_for_all_pairs():
    for grp in (symmetric(3), dihedral(4)):
        for v in irreps(grp):
            for w in irreps(grp):
                assert z_multiplicative_check(v, w)


def test_z_product_decomposes_like_tensor():
    reps = by_label(symmetric(3))
    zs = {k: z(v) for k, v in reps.items()}
    assert convolve(zs["std"], zs["std"]) \
        == zs["triv"] + zs["sgn"] + zs["std"]


def test_characters_of_simples_are_independent():
    for grp in (symmetric(3), dihedral(4), cyclic(5)):
        reps = irreps(grp)
        span = Subspace(grp.order, [list(z(v).values) for v in reps])
        assert span.dim == len(reps)


def test_convolution_structure_constants_match_tensor_multiplicities():
    for grp in (symmetric(3), dihedral(4)):
        consts = character_structure_constants(grp)
        for v in irreps(grp):
            for w in irreps(grp):
                want = decompose(v.tensor(w)).multiplicities
                got = consts[v.label, w.label]
                assert got == {k: F(m) for k, m in want.items()}


# ---------------------------------------------------------------------------
# products of components and the full decomposition
# ---------------------------------------------------------------------------

def test_product_component_check_all_s3_pairs():
    reps = irreps(symmetric(3))
    for v in reps:
        for w in reps:
            assert product_component_check(v, w)


def test_product_component_check_d4_spot_pairs():
    reps = by_label(dihedral(4))
    for a, b in (("triv", "rho1"), ("rho1", "rho1"), ("sgn", "alt"),
                 ("alt", "rho1")):
        assert product_component_check(reps[a], reps[b])


def test_direct_sum_decomposition():
    for grp in (symmetric(3), dihedral(4), cyclic(5), parse_group("Z2xZ2")):
        assert direct_sum_decomposition(grp)


def test_component_sum_closed_under_convolution():
    g = symmetric(3)
    comps = [component(v) for v in irreps(g)]
    total = Subspace(g.order, [])
    for c in comps:
        total = total.sum(c.subspace)
    rng = random.Random(603)
    for _ in range(15):
        a = [F(rng.randint(-3, 3)) for _ in range(6)]
        b = [F(rng.randint(-3, 3)) for _ in range(6)]
        prod = convolve(Functional(g, a), Functional(g, b))
        assert total.contains(list(prod.values))


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def test_component_report_s3():
    g = symmetric(3)
    rep = component_report(g)
    assert rep["order"] == 6
    assert rep["group"] == {"kind": "symmetric", "n": 3}
    assert rep["components"]["triv"]["dim"] == 1
    assert rep["components"]["std"]["dim"] == 4
    assert rep["components"]["std"]["z"] \
        == ["2/1", "0/1", "0/1", "-1/1", "-1/1", "0/1"]
    assert rep["products"]["std|std"] == {"sgn": 1, "std": 1, "triv": 1}
    assert rep["products"]["sgn|sgn"] == {"triv": 1}
    assert rep["direct_sum_fills_dual"] is True


def test_component_report_cyclotomic_group():
    rep = component_report(cyclic(5))
    assert rep["components"]["chi1"]["z"][1] == "[0/1,1/1,0/1,0/1]@zeta(5)"
    assert rep["products"]["chi1|chi4"] == {"chi0": 1}
