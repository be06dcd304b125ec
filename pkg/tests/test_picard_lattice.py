"""Lattice model: roots, Gram data, divisor counting, orbit partition."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from godeaux_cert import picard_lattice as pl
from godeaux_cert import rr_engine


def test_vector_validation():
    with pytest.raises(ValueError):
        pl.E8Vector((1,) * 7)
    with pytest.raises(ValueError):
        pl.E8Vector((1, 2, 0, 0, 0, 0, 0, 1))  # mixed parity
    with pytest.raises(ValueError):
        pl.E8Vector((2, 0, 0, 0, 0, 0, 0, 0))  # sum 2, not 0 mod 4


def test_root_count_and_norms():
    roots = pl.e8_roots()
    assert len(roots) == 240
    assert all(r.norm == -2 for r in roots)


def test_root_count_by_shape():
    roots = pl.e8_roots()
    doubled = [r for r in roots if any(abs(c) == 2 for c in r.c)]
    half = [r for r in roots if all(abs(c) == 1 for c in r.c)]
    assert len(doubled) == 112
    assert len(half) == 128
    assert len(doubled) + len(half) == 240


def test_roots_closed_under_negation():
    roots = set(pl.e8_roots())
    assert all(-r in roots for r in roots)


_vec = st.sampled_from(pl.e8_roots())


@given(_vec, _vec)
def test_pairing_symmetric_and_bounded(u, v):
    assert u.dot(v) == v.dot(u)
    # Cauchy-Schwarz in the (positive) doubled form: |<u,v>| <= 2 for roots
    assert abs(u.dot(v)) <= 2


@given(_vec, _vec, _vec)
def test_pairing_bilinear_on_sums(u, v, w):
    s = pl.E8Vector(tuple(a + b for a, b in zip(u.c, v.c)))
    assert s.dot(w) == u.dot(w) + v.dot(w)


def test_gram_determinant_unimodular():
    gram = pl.gram_matrix(pl.SIMPLE_ROOTS)
    assert abs(_fraction_det(gram)) == 1


def _fraction_det(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def test_simple_roots_are_roots():
    root_set = set(pl.e8_roots())
    assert all(r in root_set for r in pl.SIMPLE_ROOTS)


def test_lattice_checks_all_pass():
    entries = pl.lattice_checks()
    assert all(e.status == "pass" for e in entries)
    ids = {e.check_id for e in entries}
    assert "lattice.gram_det" in ids
    assert "lattice.picard_rank" in ids


def test_divisor_candidates_count_and_numerics():
    cands = pl.divisor_candidates()
    assert len(cands) == 1200
    K = pl.CANONICAL
    for E in cands[:25] + cands[-25:]:
        assert E.pair(E) == -2
        assert E.pair(K) == 0


def test_divisors_have_expected_numerics():
    for D in pl.divisors()[:50]:
        assert D.pair(D) == -1
        assert D.pair(pl.CANONICAL) == 1
        assert rr_engine.chi_divisor(rr_engine.GODEAUX, D.numerics) == 0


def test_orbit_partition():
    orbits = pl.partition_orbits()
    assert len(orbits) == 120
    assert all(len(o.members) == 10 for o in orbits)
    seen = set()
    for o in orbits:
        assert not (o.members & seen)
        seen |= o.members
    assert len(seen) == 1200


def test_orbit_structure_contains_both_signs_and_all_torsion():
    orbit = pl.partition_orbits()[0]
    es = {m.e for m in orbit.members}
    ts = {m.t for m in orbit.members}
    assert len(es) == 2
    e1, e2 = es
    assert e1 == -e2
    assert ts == {0, 1, 2, 3, 4}


def test_theorem_counts():
    counts = pl.theorem_counts()
    assert counts == {
        "candidates": 1200,
        "good_lower_bound": 1080,
        "excellent_lower_bound": 840,
    }


def test_verify_divisor_conditions():
    D = pl.divisors()[0]
    C = pl.canonical_curves()[0]
    entries = pl.verify_divisor_conditions(D, C)
    assert all(e.status == "pass" for e in entries)


def test_verify_divisor_conditions_rejects_bad_inputs():
    C = pl.canonical_curves()[0]
    with pytest.raises(ValueError):
        pl.verify_divisor_conditions(pl.CANONICAL, C)  # D - K not a root
    with pytest.raises(ValueError):
        pl.verify_divisor_conditions(pl.divisors()[0], pl.divisors()[0])


def test_picard_class_arithmetic():
    a = pl.PicardClass(1, pl.e8_roots()[0], 3)
    b = pl.PicardClass(0, pl.e8_roots()[0], 4)
    s = a + b
    assert s.k == 1 and s.t == 2  # torsion wraps mod 5
    assert (a - a).pair(a) == 0
