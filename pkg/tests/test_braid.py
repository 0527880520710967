from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exotic_mtc import braid as B
from exotic_mtc.cyclo import root_of_unity

fracs = st.fractions(min_value=0, max_value=1, max_denominator=60)


@given(st.lists(fracs, min_size=1, max_size=8), fracs)
def test_projective_order_invariant_under_scaling(es, r):
    e = B.EigenvalueMultiset.of(es)
    assert B.projective_order(e) == B.projective_order(e.scaled(r))
    assert B.projective_order(e) == B.projective_order(e.conj())


small = st.fractions(min_value=0, max_value=1, max_denominator=13)


@settings(deadline=None, max_examples=60)
@given(st.lists(small, min_size=1, max_size=4))
def test_projective_order_brute_force(es):
    e = B.EigenvalueMultiset.of(es)
    same = lambda k: len({(k * x) % 1 for x in e.exponents}) == 1
    want = next(k for k in range(1, 10**6) if same(k))
    assert B.projective_order(e) == want


def test_x4_paper_eigenvalues_order_12():
    q = Fraction(1, 12)
    e = B.EigenvalueMultiset.of([-2 * q, Fraction(1, 2) - q, q])
    assert B.projective_order(e) == 12


def test_x4_squares_from_twists(e6, e6_ring):
    X4 = e6_ring.index("X4")
    sq = B.squared_braid_eigs(e6, e6_ring, X4, X4)
    q = Fraction(1, 12)
    assert sq == B.EigenvalueMultiset.of([-2 * q, Fraction(1, 2) - q, q]).squared()
    assert B.tw_irreducibility(e6, e6_ring, X4) is True
    assert B.tw_irreducibility(e6, e6_ring, 0) is False


def test_density_advisory():
    assert B.density_advisory(3, 12, True) == B.INFINITE
    for args in ((3, 6, True), (1, 12, True), (3, 12, None), (3, 12, False)):
        assert B.density_advisory(*args) == B.INCONCLUSIVE


def test_haagerup_lists(haag, haag_ring):
    from exotic_mtc.suites import _gamma_lists

    printed = _gamma_lists()
    mu1 = haag_ring.index("mu1")
    for tgt, dim in (("mu2", 7), ("mu1", 10)):
        e = B.squared_braid_eigs(haag, haag_ring, mu1, haag_ring.index(tgt))
        assert len(e) == dim
        assert B.multiset_match(e, printed[tgt]) == "conjugate"
    assert B.tw_irreducibility(haag, haag_ring, mu1) is None


def test_from_numbers_rejects_non_roots():
    assert B.EigenvalueMultiset.from_numbers([root_of_unity(12, 5)]).exponents == (Fraction(5, 12),)
    with pytest.raises(ValueError):
        B.EigenvalueMultiset.from_numbers([root_of_unity(12) * 2])
