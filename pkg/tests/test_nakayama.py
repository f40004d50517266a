import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from frobcat.exact import Matrix
from frobcat.finvect import Mor, compose, tensor
from frobcat.frobenius import check_symmetric
from frobcat.nakayama import (
    NotAUnit,
    NotAnAutomorphism,
    PointElement,
    ad,
    check_separability_invariance,
    convolve,
    heart,
    inner_search,
    invert_unit,
    is_inner,
    left_action,
    nakayama,
    random_element,
    random_unit,
    relate_pairings,
    right_action,
    separability_idempotent,
    symmetrize,
    try_invert_unit,
    twist_pairing,
)
from frobcat.structures import DegeneratePairingError, Pairing, check_invariance
from frobcat.zoo import cyclic_table, group_algebra, matrix_algebra, quantum_plane, trace_pairing

from suite import packages

M2 = matrix_algebra(2).algebra


def mat(entries):
    return PointElement.of(M2, entries)


def test_convolution_unit_and_group():
    a = mat([1, 2, 3, 4])
    one = PointElement.one(M2)
    assert convolve(one, a) == a == convolve(a, one)
    Z2 = group_algebra(cyclic_table(2)).algebra
    g = PointElement.of(Z2, [0, 1])
    assert (g * g).vec == Z2.eta


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_convolution_associative(seed):
    rng = random.Random(seed)
    a, b, c = (random_element(M2, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    # l_a and r_b commute
    assert compose(left_action(a), right_action(b)) == compose(right_action(b), left_action(a))


def test_convolution_matches_matrix_product():
    # [[1,2],[3,4]] @ [[0,1],[5,6]] = [[10,13],[20,27]]
    assert (mat([1, 2, 3, 4]) * mat([0, 1, 5, 6])).coords == (10, 13, 20, 27)


def test_units():
    one = PointElement.one(M2)
    u = invert_unit(one)
    assert u.inverse == one
    d = invert_unit(mat([1, 0, 0, 2]))
    assert d.inverse.coords == (1, 0, 0, Fraction(1, 2))
    L = quantum_plane(2).algebra
    res = try_invert_unit(PointElement.of(L, [0, 1, 0, 0]))
    assert isinstance(res, NotAUnit) and res.rank_defect > 0
    with pytest.raises(NotAUnit):
        invert_unit(PointElement.of(L, [0, 1, 0, 0]))


def test_left_action_of_matrix_unit():
    E11 = left_action(mat([1, 0, 0, 0])).matrix
    assert E11 @ E11 == E11
    assert E11.nonzero_count() == 2
    assert left_action(PointElement.one(M2)).is_identity()


def test_ad_orientation():
    # ad_g(x) = g⁻¹ x g, so conjugating E_12 by diag(1,2) scales it by 2
    g = invert_unit(mat([1, 0, 0, 2]))
    image = compose(ad(g), mat([0, 1, 0, 0]).vec)
    assert image.matrix == Matrix.column([0, 2, 0, 0])
    assert ad(invert_unit(PointElement.one(M2))).is_identity()


def test_ad_group_law():
    rng = random.Random(11)
    for A in (M2, quantum_plane(3).algebra, group_algebra(cyclic_table(3)).algebra):
        for _ in range(5):
            g, h = random_unit(A, rng), random_unit(A, rng)
            assert compose(ad(g), ad(h)) == ad(h * g)
            assert ad(g.inv()) == ad(g).inverse()


def test_nakayama_examples():
    rep = nakayama(M2, trace_pairing(2))
    assert rep.is_identity and rep.relation_holds and rep.is_algebra_morphism
    assert rep.inner_witness is not None and rep.inner_witness.element.coords == (1, 0, 0, 1)

    rep = nakayama(M2, trace_pairing(2, [[1, 0], [0, 2]]))
    assert not rep.is_identity
    w = rep.inner_witness.element.coords
    # any nonzero multiple of diag(1,2) is a valid witness
    assert w[1] == w[2] == 0 and w[3] == 2 * w[0] != 0

    L = packages()["Lambda_2"]
    rep = nakayama(L.algebra, L.pairing)
    assert rep.naka.matrix == Matrix([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, Fraction(1, 2), 0], [0, 0, 0, 1]])
    assert rep.inner_witness is None and rep.inner.certified_none


def test_is_inner_rejects_non_automorphisms():
    with pytest.raises(NotAnAutomorphism):
        is_inner(M2, M2.id * 2)
    # matrix transposition reverses products
    transpose = Mor(M2.carrier, M2.carrier, Matrix.identity(4).permute_rows([0, 2, 1, 3]))
    with pytest.raises(NotAnAutomorphism):
        is_inner(M2, transpose)
    assert is_inner(M2, M2.id).element.vec == M2.eta


def test_inner_search_on_conjugations():
    rng = random.Random(3)
    for _ in range(5):
        g = random_unit(M2, rng)
        search = inner_search(M2, ad(g))
        assert search.witness is not None and ad(search.witness) == ad(g)
        assert len(search.solution_space) == 1


def test_symmetry_criterion_and_symmetrize():
    for name, pkg in packages().items():
        A, k = pkg.algebra, pkg.pairing
        rep = nakayama(A, k)
        assert check_symmetric(k) == rep.is_identity, name
        k_sym = symmetrize(A, k)
        assert (k_sym is not None) == (rep.inner_witness is not None), name
        if k_sym is not None:
            assert check_symmetric(k_sym) and nakayama(A, k_sym, search_inner=False).is_identity, name
        if rep.is_identity:
            assert k_sym == k, name
        assert rep.inner.decided, name


def test_relate_pairings_examples():
    k, ku = trace_pairing(2), trace_pairing(2, [[1, 0], [0, 2]])
    rel = relate_pairings(M2, k, ku)
    # tr(a b u) = κ(a, b u), so the connecting unit is u itself
    assert rel.g.element.coords == (1, 0, 0, 2)
    assert rel.h.element.coords == (1, 0, 0, 2)
    same = relate_pairings(M2, k, k)
    assert same.g.element.vec == M2.eta


def test_relate_pairings_errors():
    with pytest.raises(ValueError):
        relate_pairings(M2, trace_pairing(2), packages()["Lambda_2"].pairing)
    with pytest.raises(DegeneratePairingError):
        relate_pairings(M2, trace_pairing(2), Pairing.from_gram(M2.carrier, Matrix.zeros(4, 4)))


def test_separability_examples():
    e = separability_idempotent(M2, trace_pairing(2))
    assert compose(M2.m, e) == M2.eta * 2
    e2 = separability_idempotent(M2, trace_pairing(2, scale=2))
    assert compose(M2.m, e2) == M2.eta and heart(M2, e2, e2) == e2
    M1 = matrix_algebra(1).algebra
    e1 = separability_idempotent(M1, trace_pairing(1))
    assert e1.matrix == Matrix([[1]]) and heart(M1, e1, e1) == e1
    L = packages()["Lambda_2"]
    eL = separability_idempotent(L.algebra, L.pairing)
    assert check_separability_invariance(L.algebra, eL)
    assert compose(L.algebra.m, eL) != L.algebra.eta


def test_twist_identity_and_validation():
    pkg = packages()["Q[S3]"]
    A, k = pkg.algebra, pkg.pairing
    one = invert_unit(PointElement.one(A))
    assert twist_pairing(A, k, one, one) == k
    rng = random.Random(8)
    g, h = random_unit(A, rng), random_unit(A, rng)
    k2 = twist_pairing(A, k, g, h)
    assert check_invariance(A, k2)
    expected = compose(k.kappa, tensor(left_action(g.element), right_action(h.element)))
    assert k2.kappa == expected
