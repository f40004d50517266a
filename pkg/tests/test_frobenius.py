from fractions import Fraction

import pytest

from frobcat.exact import Matrix
from frobcat.finvect import Mor, compose
from frobcat.frobenius import (
    FrobeniusError,
    FrobeniusPackage,
    check_symmetric,
    check_symmetric_counit,
    check_symmetric_phi,
    coalgebra_from_pairing,
    coproduct_descriptions,
    cyclic_pairing,
    kappa_from_counit,
    pairing_from_phi,
    phi_from_pairing,
    phi_inverses_from_coproduct,
)
from frobcat.structures import Coalgebra, DegeneratePairingError, Pairing
from frobcat.zoo import matrix_algebra, quantum_plane

from suite import EXPECTED_SYMMETRIC, packages


def test_coproduct_descriptions_agree():
    for name, pkg in packages().items():
        first, second, third = coproduct_descriptions(pkg.algebra, pkg.pairing)
        assert first == second == third, name


def test_phi_inverses_from_coproduct():
    for name, pkg in packages().items():
        left, right = phi_inverses_from_coproduct(pkg.algebra, pkg.coalgebra)
        k = pkg.pairing
        assert compose(left, k.phi_l).is_identity(), name
        assert compose(right, k.phi_r).is_identity(), name


def test_matrix_coproduct_by_hand():
    # trace form on M2: Δ(E_il) = Σ_j E_ij ⊗ E_jl and ε = trace
    pkg = matrix_algebra(2).complete()
    n = 2
    D = pkg.coalgebra.delta.matrix
    for i in range(n):
        for l in range(n):
            col = i * n + l
            expected = {((i * n + j) * 4 + (j * n + l)) for j in range(n)}
            support = {r for r in range(16) if D[r, col] != 0}
            assert support == expected
            assert all(D[r, col] == 1 for r in support)
    assert pkg.coalgebra.eps.matrix == Matrix.row([1, 0, 0, 1])


def test_pairing_from_phi_inverts_phi_from_pairing():
    for name, pkg in packages().items():
        k = pkg.pairing
        assert pairing_from_phi(pkg.algebra, phi_from_pairing(k)).kappa == k.kappa, name


def test_symmetry_flags_match_expectations():
    for name, pkg in packages().items():
        A = pkg.algebra
        expected = EXPECTED_SYMMETRIC[name]
        assert check_symmetric(pkg.pairing) == expected, name
        assert check_symmetric_counit(A, pkg.coalgebra) == expected, name
        assert check_symmetric_phi(pkg.phi, A) == expected, name
        assert pkg.flags()["symmetric"] == expected, name


def test_cyclic_pairing_swaps_arguments():
    k = packages()["Lambda_2"].pairing
    K = k.gram()
    swapped = Pairing(k.carrier, cyclic_pairing(k)).gram()
    assert swapped == K.T


def test_quantum_plane_pairing_values():
    # κ_ε(x, y) = 1, κ(y, x) = q, κ(1, xy) = κ(xy, 1) = 1, everything else 0
    q = Fraction(2)
    K = quantum_plane(q).complete().pairing.gram()
    expected = Matrix([[0, 0, 0, 1], [0, 0, 1, 0], [0, q, 0, 0], [1, 0, 0, 0]])
    assert K == expected


def test_degenerate_pairing_rejected():
    A = matrix_algebra(2).algebra
    zero = Pairing.from_gram(A.carrier, Matrix.zeros(4, 4))
    with pytest.raises(DegeneratePairingError):
        coalgebra_from_pairing(A, zero)
    non_invariant = Pairing.from_gram(A.carrier, Matrix.identity(4))
    with pytest.raises(FrobeniusError):
        coalgebra_from_pairing(A, non_invariant)


def test_non_frobenius_coalgebra_rejected():
    pkg = packages()["M2"]
    C = Coalgebra(pkg.carrier, pkg.coalgebra.delta * 2, pkg.coalgebra.eps)
    with pytest.raises(FrobeniusError) as info:
        kappa_from_counit(pkg.algebra, C)
    assert info.value.report is not None and not info.value.report.passed


def test_package_complete_and_validate():
    pkg = FrobeniusPackage(quantum_plane(-2).algebra, pairing=quantum_plane(-2).complete().pairing)
    full = pkg.complete()
    assert full.coalgebra is not None and full.phi is not None
    assert full.validate().passed
    assert all(v is not None for v in full.flags().values())
    assert FrobeniusPackage(pkg.algebra).flags() == {
        "invariant": None, "nondegenerate": None, "bimodule_compat": None, "symmetric": None,
    }
    with pytest.raises(FrobeniusError):
        FrobeniusPackage(pkg.algebra).complete()


def test_validate_flags_inconsistent_presentations():
    pkg = packages()["M2"]
    mixed = FrobeniusPackage(pkg.algebra, coalgebra=pkg.coalgebra, pairing=pkg.pairing * 2)
    report = mixed.validate()
    assert not report.passed
    assert [c.name for c in report.failures] == ["κ = ε∘m"]


def test_phi_must_have_dual_codomain():
    pkg = packages()["M2"]
    with pytest.raises(ValueError):
        pairing_from_phi(pkg.algebra, pkg.algebra.id)
    with pytest.raises(ValueError):
        check_symmetric_phi(Mor(pkg.carrier, pkg.carrier, Matrix.identity(4)), pkg.algebra)
