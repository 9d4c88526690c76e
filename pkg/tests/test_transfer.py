"""Tests for the transfer map, its membership predicates, and candidates.

Independent oracles used here:

* admissibility is re-checked against the brute-force centralizer condition
  quantified over every group element, not just generators;
* the linear system behind the factorization solver is re-assembled column
  by column in a separate routine to validate infeasibility certificates;
* block decompositions are compared against character arithmetic done by
  hand (frozen dictionaries).
"""

import random
from fractions import Fraction as F

import pytest

from peterweyl.errors import (
    InternalError,
    MembershipError,
    PreconditionError,
)
from peterweyl.exact.linalg import Infeasible, Subspace
from peterweyl.exact.scalars import Cyclotomic
from peterweyl.groups import cyclic, dihedral, parse_group, symmetric
from peterweyl.hopf import (
    AlgebraElement,
    Functional,
    TensorElement,
    action_invariant_subspace,
    center_subspace,
    class_indicator_subspace,
    conjugation_invariant_subspace,
    convolve,
    tensor,
)
from peterweyl.transfer import (
    PCandidate,
    bicharacter_r,
    center_image_check,
    check_t,
    check_t_normalized,
    equivariance_check,
    grouplike_check,
    in_a,
    in_a_conditions,
    in_m,
    in_m0,
    t_from_r,
    membership_report,
    mock_pw_decomposition,
    p_from_r,
    phi,
    phi_matrix,
    phi_mult_identity_check,
    phi_rank,
    r_failures,
    r_membership,
    regular_p,
    s3_family,
    solve_t,
    unit_p,
)


def random_two_tensor(grp, rng, terms=6):
    """A random sparse two-slot tensor with small rational coefficients."""
    out = {}
    for _ in range(terms):
        key = (rng.randrange(grp.order), rng.randrange(grp.order))
        out[key] = F(rng.randint(-4, 4), rng.randint(1, 4))
    return TensorElement(grp, 2, out)


def centralizer_condition_all_elements(t):
    """Brute-force admissibility: commute with g (x) g for every g."""
    grp = t.group
    for g in range(grp.order):
        gg = tensor(AlgebraElement.basis(grp, g), AlgebraElement.basis(grp, g))
        if t * gg != gg * t:
            return False
    return True


def perturbed_family_point():
    """A family member plus a term that breaks admissibility."""
    grp = symmetric(3)
    bump = TensorElement(grp, 2, {(grp.generators[0][0], 0): F(1, 7)})
    return PCandidate(s3_family(F(1), F(1)).tensor + bump, "perturbed")


# ---------------------------------------------------------------------------
# the map itself
# ---------------------------------------------------------------------------

def test_regular_candidate_transfers_delta_to_inverse():
    grp = symmetric(3)
    p = regular_p(grp)
    for g in range(grp.order):
        assert phi(p, Functional.delta(grp, g)) \
            == AlgebraElement.basis(grp, grp.inverse(g))


def test_phi_is_linear_in_the_functional():
    grp = dihedral(4)
    p = regular_p(grp)
    rng = random.Random(811)
    for _ in range(5):
        xi = Functional(grp, [F(rng.randint(-3, 3)) for _ in range(grp.order)])
        eta = Functional(grp, [F(rng.randint(-3, 3))
                               for _ in range(grp.order)])
        assert phi(p, xi + eta) == phi(p, xi) + phi(p, eta)
        assert phi(p, xi * F(5, 3)) == phi(p, xi) * F(5, 3)


def test_phi_matrix_columns_are_the_delta_images():
    grp = symmetric(3)
    p = s3_family(F(2), F(3))
    m = phi_matrix(p)
    for g in range(grp.order):
        col = phi(p, Functional.delta(grp, g)).to_vector()
        assert [m.rows[r][g] for r in range(grp.order)] == col


def test_unit_candidate_has_rank_one():
    grp = symmetric(3)
    assert phi_rank(unit_p(grp)) == 1


def test_family_rank_depends_on_both_parameters():
    expected = {(1, 1): 6, (2, 3): 6, (5, 7): 6, (0, 1): 5, (1, 0): 4}
    for (lam, mu), rank in expected.items():
        assert phi_rank(s3_family(F(lam), F(mu))) == rank


def test_phi_rejects_mismatched_groups():
    with pytest.raises(PreconditionError):
        phi(unit_p(symmetric(3)), Functional.delta(cyclic(6), 0))


def test_candidates_have_exactly_two_slots():
    with pytest.raises(PreconditionError):
        PCandidate(TensorElement.unit(symmetric(3), 3))


# ---------------------------------------------------------------------------
# admissibility
# ---------------------------------------------------------------------------

def test_structured_candidates_are_admissible():
    grp = symmetric(3)
    assert in_a(unit_p(grp))
    assert in_a(regular_p(grp))
    assert in_a(regular_p(dihedral(4)))
    for pt in [(1, 1), (2, 3), (5, 7), (0, 1), (1, 0)]:
        assert in_a(s3_family(F(pt[0]), F(pt[1])))


def test_admissibility_conditions_agree_on_random_tensors():
    rng = random.Random(821)
    for grp in (symmetric(3), dihedral(4)):
        for _ in range(50):
            conds = in_a_conditions(random_two_tensor(grp, rng))
            assert conds[0] == conds[1] == conds[2]


def test_admissibility_matches_the_all_elements_centralizer():
    rng = random.Random(823)
    grp = symmetric(3)
    cands = [random_two_tensor(grp, rng) for _ in range(10)]
    cands += [unit_p(grp).tensor, regular_p(grp).tensor,
              s3_family(F(1), F(1)).tensor]
    for t in cands:
        assert in_a(t) == centralizer_condition_all_elements(t)


def test_perturbed_family_member_is_not_admissible():
    assert not in_a(perturbed_family_point())


def test_admissible_transfer_is_equivariant():
    assert equivariance_check(s3_family(F(1), F(1)))
    assert equivariance_check(regular_p(dihedral(4)))


def test_class_functions_land_in_the_center():
    assert center_image_check(s3_family(F(1), F(1)))
    assert center_image_check(unit_p(dihedral(4)))


def test_equivariance_requires_admissibility():
    with pytest.raises(PreconditionError):
        equivariance_check(perturbed_family_point())
    with pytest.raises(PreconditionError):
        center_image_check(perturbed_family_point())


# ---------------------------------------------------------------------------
# multiplicativity
# ---------------------------------------------------------------------------

def test_family_point_is_multiplicative():
    ok, witnesses = in_m(s3_family(F(1), F(1)))
    assert ok and witnesses == ()


def test_regular_candidate_fails_at_the_sign_sign_pair():
    p = regular_p(symmetric(3))
    ok, witnesses = in_m(p)
    assert not ok
    assert witnesses == (("sgn", "sgn"),)
    assert not in_m0(p)


def test_family_points_are_character_multiplicative():
    for pt in [(1, 1), (2, 3), (5, 7), (0, 1), (1, 0)]:
        assert in_m0(s3_family(F(pt[0]), F(pt[1])))


def test_perturbed_member_is_not_character_multiplicative():
    assert not in_m0(perturbed_family_point())


def test_unit_candidate_is_character_multiplicative():
    assert in_m0(unit_p(symmetric(3)))
    ok, witnesses = in_m(unit_p(symmetric(3)))
    assert ok and witnesses == ()


# ---------------------------------------------------------------------------
# the factorization tensor
# ---------------------------------------------------------------------------

def test_unit_candidate_factorization_roundtrip():
    grp = symmetric(3)
    p = unit_p(grp)
    t4 = solve_t(p)
    assert isinstance(t4, TensorElement)
    assert check_t(p, t4)
    assert check_t_normalized(t4)


def _column_of_t_system(grp, coeffs, col):
    """Independent assembly of one column of the factorization system."""
    t1, t2, t3, t4 = col
    n = grp.order
    mul = grp.mul
    out = {}
    for (p1, p2), c in coeffs.items():
        g1 = mul(t1, mul(p1, t2))
        for (q1, q2), d in coeffs.items():
            g2 = mul(t3, mul(q1, t4))
            g3 = mul(p2, q2)
            r = (g1 * n + g2) * n + g3
            out[r] = out.get(r, F(0)) + c * d
    return out


def test_family_point_has_no_factorization_tensor():
    grp = symmetric(3)
    p = s3_family(F(1), F(1))
    res = solve_t(p)
    assert isinstance(res, Infeasible)
    y = res.certificate
    n = grp.order
    coeffs = p.tensor.terms
    dot_b = F(0)
    for (a, c2), coeff in coeffs.items():
        dot_b += y[(a * n + a) * n + c2] * coeff
    assert dot_b == 1
    rng = random.Random(829)
    for _ in range(40):
        col = tuple(rng.randrange(n) for _ in range(4))
        entries = _column_of_t_system(grp, coeffs, col)
        assert sum(y[r] * v for r, v in entries.items()) == 0


def test_v4_bicharacter_has_a_factorization_tensor():
    grp = parse_group("Z2xZ2")
    cand = p_from_r(TensorElement.unit(grp, 2), bicharacter_r(grp),
                    AlgebraElement.one(grp))
    t4 = solve_t(cand)
    assert isinstance(t4, TensorElement)
    assert check_t(cand, t4)


def test_proof_formula_tensor_passes_both_checks():
    grp = cyclic(5)
    r = bicharacter_r(grp)
    unit2 = TensorElement.unit(grp, 2)
    cand = p_from_r(unit2, r, AlgebraElement.one(grp))
    t4 = t_from_r(unit2)
    assert check_t(cand, t4)
    assert check_t_normalized(t4)
    cand2 = p_from_r(r, r, AlgebraElement.one(grp))
    t4b = t_from_r(r)
    assert check_t(cand2, t4b)
    assert check_t_normalized(t4b)


def test_factorization_drives_multiplicativity_of_phi():
    grp = cyclic(5)
    r = bicharacter_r(grp)
    cand = p_from_r(r, r, AlgebraElement.one(grp))
    t4 = t_from_r(r)
    rng = random.Random(839)
    for _ in range(20):
        xi = Functional(grp, [F(rng.randint(-3, 3)) for _ in range(5)])
        eta = Functional(grp, [F(rng.randint(-3, 3)) for _ in range(5)])
        assert phi_mult_identity_check(cand, t4, xi, eta)


def test_wrong_factorization_tensor_is_rejected():
    grp = cyclic(5)
    r = bicharacter_r(grp)
    cand = p_from_r(TensorElement.unit(grp, 2), r, AlgebraElement.one(grp))
    bad = t_from_r(bicharacter_r(grp)) * F(2)
    assert not check_t(cand, bad)
    assert not check_t_normalized(TensorElement.unit(grp, 4) * F(2))
    with pytest.raises(PreconditionError):
        check_t(cand, TensorElement.unit(grp, 3))


# ---------------------------------------------------------------------------
# candidates from pairs
# ---------------------------------------------------------------------------

def test_bicharacter_pairs_satisfy_the_axioms():
    for name in ("Z2", "Z4", "Z5", "Z6", "Z2xZ2", "Z2xZ4"):
        grp = parse_group(name)
        r = bicharacter_r(grp)
        assert r_failures(TensorElement.unit(grp, 2), r) == ()
        assert r_membership(r, r)


def test_v4_bicharacter_values_are_frozen_signs():
    grp = parse_group("Z2xZ2")
    r = bicharacter_r(grp)
    quarter = F(1, 4)
    for a in range(4):
        for b in range(4):
            a1, a2 = divmod(a, 2)
            b1, b2 = divmod(b, 2)
            sign = -1 if (a1 * b1 + a2 * b2) % 2 else 1
            assert r.terms[(a, b)] == quarter * sign


def test_z5_bicharacter_entry_is_a_root_of_unity():
    r = bicharacter_r(cyclic(5))
    assert r.terms[(1, 1)] == Cyclotomic.zeta(5, 1) * F(1, 5)
    assert r.terms[(2, 3)] == Cyclotomic.zeta(5, 1) * F(1, 5)
    assert r.terms[(0, 3)] == F(1, 5)


def test_broken_pair_reports_the_failed_axiom():
    grp = cyclic(5)
    r = bicharacter_r(grp)
    broken = r + TensorElement(grp, 2, {(1, 2): F(1, 3)})
    fails = r_failures(TensorElement.unit(grp, 2), broken)
    assert fails and any("coproduct" in f for f in fails)
    with pytest.raises(MembershipError):
        p_from_r(TensorElement.unit(grp, 2), broken, AlgebraElement.one(grp))


def test_grouplike_check_behaviour():
    grp = symmetric(3)
    assert grouplike_check(AlgebraElement.one(grp))
    assert not grouplike_check(AlgebraElement.basis(grp, grp.generators[0][0]))
    z6 = cyclic(6)
    assert grouplike_check(AlgebraElement.basis(z6, 2))
    two = AlgebraElement.one(z6) + AlgebraElement.basis(z6, 1)
    assert not grouplike_check(two)


def test_pair_construction_requires_a_grouplike():
    grp = cyclic(5)
    r = bicharacter_r(grp)
    bad = AlgebraElement.one(grp) * F(2)
    with pytest.raises(MembershipError):
        p_from_r(TensorElement.unit(grp, 2), r, bad)


def test_bicharacter_pair_candidates_are_bijective():
    for name, order in (("Z4", 4), ("Z5", 5), ("Z2xZ2", 4)):
        grp = parse_group(name)
        cand = p_from_r(TensorElement.unit(grp, 2), bicharacter_r(grp),
                        AlgebraElement.one(grp))
        assert phi_rank(cand) == order


def test_bicharacter_needs_an_abelian_group():
    with pytest.raises(PreconditionError):
        bicharacter_r(symmetric(3))


# ---------------------------------------------------------------------------
# block decomposition
# ---------------------------------------------------------------------------

def test_family_block_decomposition_is_frozen():
    rep = mock_pw_decomposition(s3_family(F(1), F(1)))
    assert rep["order"] == 6
    assert [b["label"] for b in rep["blocks"]] == ["triv", "std", "sgn"]
    assert rep["dims"] == [1, 4, 1]
    assert rep["direct"] is True
    assert rep["c_rank"] == 3
    assert rep["center_dim"] == 3
    assert rep["c_spans_center"] is True


def test_block_adjoint_characters_match_the_tensor_square():
    rep = mock_pw_decomposition(s3_family(F(2), F(3)))
    by_label = {b["label"]: b["ad_type"] for b in rep["blocks"]}
    assert by_label["triv"] == {"triv": 1}
    assert by_label["sgn"] == {"triv": 1}
    assert by_label["std"] == {"sgn": 1, "std": 1, "triv": 1}


def test_decomposition_requires_each_hypothesis():
    with pytest.raises(PreconditionError):
        mock_pw_decomposition(perturbed_family_point())
    with pytest.raises(PreconditionError):
        mock_pw_decomposition(regular_p(symmetric(3)))
    with pytest.raises(PreconditionError):
        mock_pw_decomposition(s3_family(F(1), F(0)))


def test_bicharacter_decomposition_has_line_blocks():
    grp = cyclic(5)
    cand = p_from_r(TensorElement.unit(grp, 2), bicharacter_r(grp),
                    AlgebraElement.one(grp))
    rep = mock_pw_decomposition(cand)
    assert rep["dims"] == [1, 1, 1, 1, 1]
    assert rep["direct"] is True
    assert rep["c_spans_center"] is True


def test_v4_decomposition_has_line_blocks():
    grp = parse_group("Z2xZ2")
    cand = p_from_r(TensorElement.unit(grp, 2), bicharacter_r(grp),
                    AlgebraElement.one(grp))
    rep = mock_pw_decomposition(cand)
    assert rep["dims"] == [1, 1, 1, 1]
    assert rep["direct"] is True and rep["c_spans_center"] is True


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def test_report_for_a_family_point():
    rep = membership_report(s3_family(F(1), F(1)))
    assert rep.to_json() == {
        "A": True,
        "A_conditions": [True, True, True],
        "M": True,
        "M_witnesses": [],
        "M0": True,
        "rank": 6,
        "center_image": True,
    }


def test_report_for_the_regular_candidate():
    rep = membership_report(regular_p(symmetric(3)))
    assert rep.admissible is True
    assert rep.multiplicative is False
    assert rep.witnesses == (("sgn", "sgn"),)
    assert rep.character_multiplicative is False
    assert rep.rank == 6
    assert rep.center_image is True


def test_report_for_a_non_admissible_tensor():
    rep = membership_report(perturbed_family_point())
    assert rep.admissible is False
    assert rep.center_image is False


# ---------------------------------------------------------------------------
# invariant-subspace chains
# ---------------------------------------------------------------------------

def test_adjoint_and_diamond_invariants_coincide():
    for grp in (symmetric(3), dihedral(4)):
        ad_inv = action_invariant_subspace(grp, "ad")
        diamond_inv = action_invariant_subspace(grp, "diamond", "dual")
        assert ad_inv == center_subspace(grp)
        assert diamond_inv == class_indicator_subspace(grp)


def test_center_equals_conjugation_invariants():
    for grp in (symmetric(3), dihedral(4), cyclic(6)):
        center = center_subspace(grp)
        assert center == conjugation_invariant_subspace(grp)
        assert center == action_invariant_subspace(grp, "ad")
        assert center == class_indicator_subspace(grp)


# ---------------------------------------------------------------------------
# the family itself
# ---------------------------------------------------------------------------

def test_family_is_affine_in_its_parameters():
    base = s3_family(F(0), F(0)).tensor
    dlam = s3_family(F(1), F(0)).tensor - base
    dmu = s3_family(F(0), F(1)).tensor - base
    rng = random.Random(841)
    for _ in range(6):
        lam = F(rng.randint(-9, 9), rng.randint(1, 5))
        mu = F(rng.randint(-9, 9), rng.randint(1, 5))
        assert s3_family(lam, mu).tensor == base + dlam * lam + dmu * mu


def test_family_counit_normalization():
    grp = symmetric(3)
    for pt in [(4, 9), (1, 1), (0, 0)]:
        p = s3_family(F(pt[0]), F(pt[1])).tensor
        # the all-ones functional is the unit for convolution; it must map
        # to the algebra unit
        assert phi(p, Functional.counit(grp)) == AlgebraElement.one(grp)
        # pairing the second slot with the counit also recovers the unit
        slot_sums = {}
        for (a, b), c in p.terms.items():
            slot_sums[a] = slot_sums.get(a, F(0)) + c
        assert {a: c for a, c in slot_sums.items() if c} == {0: F(1)}


def test_candidate_equality_ignores_the_note():
    a = s3_family(F(1), F(1))
    b = PCandidate(s3_family(F(1), F(1)).tensor, "other note")
    assert a == b
    assert a != regular_p(symmetric(3))
