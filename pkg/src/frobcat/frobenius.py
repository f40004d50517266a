"""Conversions between the three presentations of a Frobenius structure on an algebra.

A Frobenius structure on ``(A, m, η)`` can be given as

* a counit/coproduct pair ``(Δ, ε)`` whose coproduct is a bimodule map,
* an invariant non-degenerate pairing ``κ``, or
* a left-module isomorphism ``φ : A -> ^∨A``.

The functions here pass between them and decide symmetry in each language.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

from .finvect import (
    Mor,
    chain,
    coev_left,
    coev_right,
    compose,
    dual,
    ev_left,
    ev_right,
    identity,
    tensor,
    wee,
)
from .structures import (
    Algebra,
    Check,
    Coalgebra,
    DegeneratePairingError,
    Pairing,
    Report,
    check_algebra,
    check_coalgebra,
    check_frobenius_compat,
    check_invariance,
    check_module_morphism,
    check_nondegenerate,
    dual_actions,
    regular_module,
)

__all__ = [
    "DegeneratePairingError",
    "FrobeniusError",
    "FrobeniusPackage",
    "check_symmetric",
    "check_symmetric_counit",
    "check_symmetric_phi",
    "coalgebra_from_pairing",
    "coproduct_descriptions",
    "cyclic_pairing",
    "kappa_from_counit",
    "nakayama_endo_from_counit",
    "pairing_from_phi",
    "phi_from_pairing",
    "phi_inverses_from_coproduct",
]


class FrobeniusError(ValueError):
    """Input data fails a precondition; ``report`` holds the failing checks."""

    def __init__(self, message: str, report: Report | None = None):
        super().__init__(message)
        self.report = report


def _require_compat(A: Algebra, C: Coalgebra) -> None:
    report = check_frobenius_compat(A, C)
    report.extend(check_coalgebra(C))
    if not report.passed:
        raise FrobeniusError(
            "not a Frobenius coalgebra: " + ", ".join(c.name for c in report.failures), report
        )


def _require_frobenius_pairing(A: Algebra, k: Pairing) -> None:
    if A.carrier != k.carrier:
        raise FrobeniusError("pairing lives on a different carrier")
    if not check_invariance(A, k):
        raise FrobeniusError("pairing is not invariant")
    if not k.is_nondegenerate:
        k.phi_l_inv  # raises DegeneratePairingError with the kernel witness


# (Δ, ε) -> κ ----------------------------------------------------------------


def kappa_from_counit(A: Algebra, C: Coalgebra) -> Pairing:
    """``κ_ε = ε∘m``; invariant and non-degenerate whenever ``(Δ, ε)`` is Frobenius."""
    _require_compat(A, C)
    return Pairing(A.carrier, compose(C.eps, A.m))


def phi_inverses_from_coproduct(A: Algebra, C: Coalgebra) -> tuple[Mor, Mor]:
    """Inverses of ``Φ_l`` and ``Φ_r`` for ``κ_ε``, written with ``Δ∘η`` only."""
    _require_compat(A, C)
    X, Xd = A.carrier, dual(A.carrier)
    casimir = compose(C.delta, A.eta)
    left = compose(tensor(A.id, ev_left(X)), tensor(casimir, identity(Xd)))
    right = compose(tensor(ev_right(X), A.id), tensor(identity(Xd), casimir))
    return left, right


# κ -> (Δ, ε) ----------------------------------------------------------------


def coalgebra_from_pairing(A: Algebra, k: Pairing) -> Coalgebra:
    """``Δ_κ = (id⊗m)(id⊗Φ_r⁻¹⊗id)(coev_right⊗id)`` and ``ε_κ = κ(id⊗η)``."""
    _require_frobenius_pairing(A, k)
    X = A.carrier
    delta = chain(
        tensor(A.id, A.m),
        tensor(A.id, k.phi_r_inv, A.id),
        tensor(coev_right(X), A.id),
    )
    eps = compose(k.kappa, tensor(A.id, A.eta))
    return Coalgebra(X, delta, eps)


def coproduct_descriptions(A: Algebra, k: Pairing) -> tuple[Mor, Mor, Mor]:
    """Three formulas for ``Δ_κ`` that agree when ``κ`` is invariant and non-degenerate.

    The first inserts the argument on the right of the copairing, the other two
    on the left, using ``Φ_r⁻¹`` and ``Φ_l⁻¹`` respectively.
    """
    _require_frobenius_pairing(A, k)
    X = A.carrier
    first = chain(
        tensor(A.id, A.m),
        tensor(A.id, k.phi_r_inv, A.id),
        tensor(coev_right(X), A.id),
    )
    second = chain(
        tensor(A.m, A.id),
        tensor(A.id, A.id, k.phi_r_inv),
        tensor(A.id, coev_right(X)),
    )
    third = chain(
        tensor(A.m, A.id),
        tensor(A.id, k.phi_l_inv, A.id),
        tensor(A.id, coev_left(X)),
    )
    return first, second, third


# φ <-> κ --------------------------------------------------------------------


def pairing_from_phi(A: Algebra, phi: Mor) -> Pairing:
    """``κ_φ = ev_left∘(id⊗φ)``, so that ``κ_φ(a, b) = φ(b)(a)``."""
    X = A.carrier
    if phi.dom != X or phi.cod != dual(X):
        raise ValueError("phi must map A -> ^∨A")
    return Pairing(X, compose(ev_left(X), tensor(A.id, phi)))


def phi_from_pairing(k: Pairing) -> Mor:
    return k.phi_l


# symmetry -------------------------------------------------------------------


def _symmetry_composites(k: Pairing) -> tuple[Mor, Mor]:
    X = k.carrier
    idA, idD = identity(X), identity(dual(X))
    # ev_right∘(id⊗κ⊗id)∘(coev_left⊗id⊗id) : a⊗b ↦ κ(b, a)
    bent_left = chain(
        ev_right(X),
        tensor(idD, k.kappa, idA),
        tensor(coev_left(X), idA, idA),
    )
    # mirror image: ev_left∘(id⊗κ⊗id)∘(id⊗id⊗coev_right)
    bent_right = chain(
        ev_left(X),
        tensor(idA, k.kappa, idD),
        tensor(idA, idA, coev_right(X)),
    )
    return bent_left, bent_right


def cyclic_pairing(k: Pairing) -> Mor:
    """``ev_right∘(id⊗κ⊗id)∘(coev_left⊗id⊗id)``, i.e. ``a⊗b ↦ κ(b, a)``."""
    return _symmetry_composites(k)[0]


def check_symmetric(k: Pairing) -> bool:
    """Whether bending one leg of ``κ`` around reproduces ``κ``; both bends must agree."""
    bent_left, bent_right = _symmetry_composites(k)
    a, b = bent_left == k.kappa, bent_right == k.kappa
    if a != b:
        raise AssertionError("the two symmetry tests disagree")
    return a


def check_symmetric_phi(phi: Mor, A: Algebra) -> bool:
    """A module isomorphism ``φ : A -> ^∨A`` is symmetric iff ``wee(φ) = φ``.

    Also cross-checked against the pairing-level statement
    ``ev_left∘(id⊗φ) = ev_right∘(φ⊗id)``.
    """
    X = A.carrier
    if phi.dom != X or phi.cod != dual(X):
        raise ValueError("phi must map A -> ^∨A")
    by_wee = wee(phi) == phi
    by_pairing = compose(ev_left(X), tensor(A.id, phi)) == compose(ev_right(X), tensor(phi, A.id))
    if by_wee != by_pairing:
        raise AssertionError("the two symmetry tests for phi disagree")
    return by_wee


def nakayama_endo_from_counit(A: Algebra, C: Coalgebra) -> Mor:
    """``(ev_right⊗id)∘[id⊗(Δ∘η∘ε∘m)]∘(coev_left⊗id)``; the identity iff ``(Δ, ε)`` is symmetric."""
    _require_compat(A, C)
    X = A.carrier
    idD = identity(dual(X))
    # the loop is kept in pieces; it factors through the unit, so the chain never
    # has to push a dense rank-one square through the tensor product
    return chain(
        tensor(ev_right(X), A.id),
        tensor(idD, C.delta),
        tensor(idD, A.eta),
        tensor(idD, C.eps),
        tensor(idD, A.m),
        tensor(coev_left(X), A.id),
    )


def check_symmetric_counit(A: Algebra, C: Coalgebra) -> bool:
    return nakayama_endo_from_counit(A, C).is_identity()


# packages -------------------------------------------------------------------


@dataclass(frozen=True)
class FrobeniusPackage:
    """An algebra with any subset of the three Frobenius presentations."""

    algebra: Algebra
    coalgebra: Optional[Coalgebra] = None
    pairing: Optional[Pairing] = None
    phi: Optional[Mor] = None
    name: str = ""
    info: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def carrier(self):
        return self.algebra.carrier

    def with_pairing(self, k: Pairing) -> "FrobeniusPackage":
        return FrobeniusPackage(self.algebra, pairing=k, name=self.name, info=dict(self.info))

    def any_pairing(self) -> Pairing:
        """The stored pairing, or one derived from whichever presentation is present."""
        if self.pairing is not None:
            return self.pairing
        if self.coalgebra is not None:
            return kappa_from_counit(self.algebra, self.coalgebra)
        if self.phi is not None:
            return pairing_from_phi(self.algebra, self.phi)
        raise FrobeniusError("package carries no Frobenius presentation")

    def complete(self) -> "FrobeniusPackage":
        """Fill in every missing presentation from the available ones."""
        k = self.any_pairing()
        C = self.coalgebra or coalgebra_from_pairing(self.algebra, k)
        phi = self.phi if self.phi is not None else phi_from_pairing(k)
        return replace(self, coalgebra=C, pairing=k, phi=phi)

    def flags(self) -> dict[str, Optional[bool]]:
        """Tri-state flags: ``None`` when the relevant data is absent."""
        A = self.algebra
        out: dict[str, Optional[bool]] = {
            "invariant": None,
            "nondegenerate": None,
            "bimodule_compat": None,
            "symmetric": None,
        }
        if self.coalgebra is not None:
            rep = check_frobenius_compat(A, self.coalgebra)
            rep.extend(check_coalgebra(self.coalgebra))
            out["bimodule_compat"] = rep.passed
        k = self.pairing
        if k is None and self.phi is not None:
            k = pairing_from_phi(A, self.phi)
        if k is not None:
            out["invariant"] = check_invariance(A, k)
            out["nondegenerate"] = k.is_nondegenerate
            if out["invariant"] and out["nondegenerate"]:
                out["symmetric"] = check_symmetric(k)
        elif out["bimodule_compat"]:
            out["symmetric"] = check_symmetric_counit(A, self.coalgebra)
        return out

    def validate(self) -> Report:
        """Axioms of every stored presentation plus their mutual consistency."""
        A = self.algebra
        report = Report(self.name or "frobenius package")
        algebra_report = check_algebra(A)
        report.extend(algebra_report)
        k = self.pairing
        if self.coalgebra is not None:
            report.extend(check_coalgebra(self.coalgebra))
            report.extend(check_frobenius_compat(A, self.coalgebra))
        if k is not None:
            report.add(Check("pairing invariant", check_invariance(A, k)))
            report.add(Check("pairing non-degenerate", bool(check_nondegenerate(k))))
        if self.phi is not None and algebra_report.passed:
            # the dual module only exists once the algebra axioms hold
            rho, _ = dual_actions(A)
            report.add(Check(
                "phi left-module map", check_module_morphism(self.phi, regular_module(A), rho)
            ))
            report.add(Check("phi invertible", pairing_from_phi(A, self.phi).is_nondegenerate))
        if not report.passed:
            return report
        if self.coalgebra is not None and k is not None:
            report.add(Check.equal("κ = ε∘m", compose(self.coalgebra.eps, A.m), k.kappa))
        if self.phi is not None and k is not None:
            report.add(Check.equal("φ = Φ_l(κ)", self.phi, k.phi_l))
        return report
