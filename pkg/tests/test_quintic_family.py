"""Invariant quintic family: monomials, symmetry, freeness, smoothness."""

import pytest
from hypothesis import given, settings, strategies as st

from godeaux_cert.exact_arith import (
    FieldElement,
    iter_projective_coords,
    primitive_fifth_root,
    projective_points,
)
from godeaux_cert import quintic_family as qf

FERMAT = (1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0)


def test_enumerate_monomials_is_canonical():
    mons = qf.enumerate_monomials()
    assert len(mons) == 12
    assert mons[0] == (5, 0, 0, 0)
    assert mons == qf._MONOMIAL_ORDER
    for n in mons:
        assert sum(n) == 5
        assert sum((i + 1) * v for i, v in enumerate(n)) % 5 == 0


def test_enumeration_is_exhaustive():
    # every composition of 5 into 4 parts outside the list fails the
    # weighted-sum condition
    for n1 in range(6):
        for n2 in range(6 - n1):
            for n3 in range(6 - n1 - n2):
                n = (n1, n2, n3, 5 - n1 - n2 - n3)
                w = sum((i + 1) * v for i, v in enumerate(n)) % 5
                assert (n in qf._MONOMIAL_ORDER) == (w == 0)


def test_build_quintic_fermat():
    f = qf.build_quintic(FERMAT, 11)
    assert set(f.terms) == {(5, 0, 0, 0), (0, 5, 0, 0), (0, 0, 5, 0), (0, 0, 0, 5)}
    assert all(c == 1 for c in f.terms.values())


def test_build_quintic_single_term():
    a = [0] * 12
    a[1] = 1
    f = qf.build_quintic(a, 11)
    assert set(f.terms) == {(3, 0, 1, 1)}


def test_build_quintic_rejects_zero():
    with pytest.raises(ValueError):
        qf.build_quintic([0] * 12, 11)
    with pytest.raises(ValueError):
        qf.build_quintic([11] * 12, 11)  # all zero after reduction


def test_invariance_generator_always_true():
    g = qf.GroupElement.generator()
    assert qf.invariance_check(FERMAT, g, 11)
    assert qf.invariance_check([1] * 12, g, 31)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 10), min_size=12, max_size=12).filter(lambda a: any(v % 11 for v in a)))
def test_invariance_generator_random_members(a):
    assert qf.invariance_check(a, qf.GroupElement.generator(), 11)


def test_invariance_fails_for_unbalanced_weights():
    # weights (1,0,0,0): the Fermat member still scales uniformly (by 1),
    # but a member mixing z1-degrees does not
    g = qf.GroupElement((1, 0, 0, 0))
    assert qf.invariance_check(FERMAT, g, 11)
    perturbed = list(FERMAT)
    perturbed[1] = 1  # adds z1^3 z3 z4, z1-degree 3 vs 5 and 0
    assert not qf.invariance_check(perturbed, g, 11)


def test_group_element_powers():
    g = qf.GroupElement.generator()
    assert g.power(2).weights == (2, 4, 1, 3)
    assert g.power(5).is_identity


def test_fixed_points_are_coordinate_points():
    pts = qf.fixed_points(qf.GroupElement.generator(), 11)
    assert len(pts) == 4
    coords = [[c.value for c in p.coords] for p in pts]
    assert coords == [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
    ]


def test_fixed_points_match_brute_force():
    g = qf.GroupElement.generator()
    assert set(qf.brute_force_fixed_points(g, 11)) == set(qf.fixed_points(g, 11))
    g2 = g.power(2)
    assert set(qf.brute_force_fixed_points(g2, 11)) == set(qf.fixed_points(g2, 11))


def test_fixed_points_rejects_identity_and_repeats():
    with pytest.raises(ValueError):
        qf.fixed_points(qf.GroupElement((0, 0, 0, 0)), 11)
    with pytest.raises(ValueError):
        qf.fixed_points(qf.GroupElement((1, 1, 2, 3)), 11)


def test_free_action_fermat_true():
    assert qf.free_action_check(FERMAT, 11)
    assert qf.free_action_check([1] * 12, 11)


def test_free_action_fails_without_pure_power():
    a = list(FERMAT)
    a[0] = 0
    assert not qf.free_action_check(a, 11)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 30), min_size=12, max_size=12).filter(lambda a: any(v % 31 for v in a)))
def test_free_action_routes_agree(a):
    # free_action_check raises AssertionError internally on disagreement
    qf.free_action_check(a, 31)


def test_smoothness_fermat_multi_prime():
    for q in (11, 31):
        assert qf.smoothness_check(FERMAT, q)


def test_smoothness_rejects_degenerate_member():
    a = [0] * 12
    a[0] = 1  # z1^5 = 0 is non-reduced
    assert not qf.smoothness_check(a, 11)


def _field_route_singular(a, q):
    """Independent oracle: FieldElement evaluation over projective_points."""
    f = qf.build_quintic(a, q)
    partials = [f.partial(v) for v in range(4)]
    for p in projective_points(q, 3):
        if not f.eval(p.coords) and all(not d.eval(p.coords) for d in partials):
            return True
    return False


def test_smoothness_agrees_with_field_route():
    cases = [FERMAT, [1] * 12, [1, 2, 0, 0, 3, 0, 0, 1, 4, 1, 0, 0]]
    for a in cases:
        assert qf.smoothness_check(a, 11) == (not _field_route_singular(a, 11))


def test_transversality_fermat_all_planes():
    for plane in range(1, 5):
        assert qf.transversality_check(FERMAT, plane, 11)


def test_transversality_degenerate():
    a = [0] * 12
    a[0] = 1
    assert not qf.transversality_check(a, 2, 11)


def test_transversality_detects_lost_pure_power():
    # drop z2^5: the restriction to z1 = 0 becomes z3^5 + z4^5 + ...,
    # compare against the generic smooth answer of the full Fermat member
    a = list(FERMAT)
    a[7] = 0
    # restriction to z1=0 is z3^5 + z4^5, a quintic with a singular point
    # at (1:0:0) in the plane coordinates (z2:z3:z4)
    assert not qf.transversality_check(a, 1, 11)


def test_transversality_rejects_bad_plane_index():
    with pytest.raises(ValueError):
        qf.transversality_check(FERMAT, 0, 11)
    with pytest.raises(ValueError):
        qf.transversality_check(FERMAT, 5, 11)


def test_family_dimension():
    assert qf.weight_difference_rank() == 3
    assert qf.family_dimension() == 8


def test_invariant_hyperplanes_are_coordinate_planes():
    planes = qf.invariant_hyperplanes()
    assert planes == (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    )
    with pytest.raises(ValueError):
        qf.invariant_hyperplanes((1, 1, 2, 3))


def test_invariant_hyperplane_count_matches_brute_force():
    g = qf.GroupElement.generator()
    assert qf.brute_force_invariant_hyperplanes(g, 11) == 4
