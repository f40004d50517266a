"""Algebras, coalgebras, pairings and module actions, with exact axiom checkers.

Checkers never raise on a failed axiom; they return a :class:`Report` whose
entries carry the exact difference matrix of the two sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exact import Matrix, SingularReport, solve_or_invert
from .finvect import (
    Mor,
    Word,
    as_word,
    chain,
    coev_left,
    coev_right,
    compose,
    dim,
    dual,
    ev_left,
    ev_right,
    identity,
    tensor,
    wee,
    word_str,
)

__all__ = [
    "Algebra",
    "Check",
    "Coalgebra",
    "DegeneratePairingError",
    "ModuleAction",
    "Nondegeneracy",
    "Pairing",
    "Report",
    "check_algebra",
    "check_coalgebra",
    "check_frobenius_compat",
    "check_invariance",
    "check_module_morphism",
    "check_nondegenerate",
    "dual_actions",
    "invariance_defect",
    "pairing_identities",
    "regular_module",
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    difference: Matrix | None = None

    @classmethod
    def equal(cls, name: str, lhs: Mor, rhs: Mor) -> "Check":
        diff = lhs.matrix - rhs.matrix
        return cls(name, diff.is_zero(), None if diff.is_zero() else diff)


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def __str__(self) -> str:
        lines = [f"{self.title}: {'ok' if self.passed else 'FAILED'}"]
        lines += [f"  {'ok ' if c.passed else 'BAD'} {c.name}" for c in self.checks]
        return "\n".join(lines)


class DegeneratePairingError(ValueError):
    """The pairing's transpose into the dual is not invertible."""

    def __init__(self, report: SingularReport):
        super().__init__(f"degenerate pairing (rank {report.rank} of {report.size})")
        self.report = report

    @property
    def null_vector(self):
        return self.report.null_basis[0]


def _carrier(w) -> Word:
    w = as_word(w)
    if not w:
        raise ValueError("carrier must be a nonempty word")
    return w


@dataclass(frozen=True)
class Algebra:
    """``(A, m, η)`` with ``m : A⊗A -> A`` and ``η : 1 -> A``; axioms are checked separately."""

    carrier: Word
    m: Mor
    eta: Mor

    def __post_init__(self):
        A = _carrier(self.carrier)
        object.__setattr__(self, "carrier", A)
        if self.m.dom != A + A or self.m.cod != A:
            raise ValueError(f"product must map {word_str(A + A)} -> {word_str(A)}")
        if self.eta.dom != () or self.eta.cod != A:
            raise ValueError(f"unit must map 1 -> {word_str(A)}")

    @property
    def dim(self) -> int:
        return dim(self.carrier)

    @classmethod
    def from_structure_constants(cls, carrier, table, unit) -> "Algebra":
        """``table[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``."""
        A = _carrier(carrier)
        n = dim(A)
        t = np.asarray(table, dtype=object)
        if t.shape != (n, n, n) or len(unit) != n:
            raise ValueError(f"structure constants must have shape {(n, n, n)}")
        rows = [[t[i, j, k] for i in range(n) for j in range(n)] for k in range(n)]
        m = Mor(A + A, A, Matrix(rows, shape=(n, n * n)))
        eta = Mor((), A, Matrix.column(list(unit)))
        return cls(A, m, eta)

    def structure_constants(self) -> list[list[list]]:
        n = self.dim
        M = self.m.matrix
        return [[[M[k, i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]

    @cached_property
    def id(self) -> Mor:
        return identity(self.carrier)

    def mult(self, a: Mor, b: Mor) -> Mor:
        return compose(self.m, tensor(a, b))


@dataclass(frozen=True)
class Coalgebra:
    carrier: Word
    delta: Mor
    eps: Mor

    def __post_init__(self):
        C = _carrier(self.carrier)
        object.__setattr__(self, "carrier", C)
        if self.delta.dom != C or self.delta.cod != C + C:
            raise ValueError(f"coproduct must map {word_str(C)} -> {word_str(C + C)}")
        if self.eps.dom != C or self.eps.cod != ():
            raise ValueError(f"counit must map {word_str(C)} -> 1")


@dataclass(frozen=True)
class Pairing:
    """A morphism ``κ : A⊗A -> 1`` together with its two transposes into the dual."""

    carrier: Word
    kappa: Mor

    def __post_init__(self):
        A = _carrier(self.carrier)
        object.__setattr__(self, "carrier", A)
        if self.kappa.dom != A + A or self.kappa.cod != ():
            raise ValueError(f"pairing must map {word_str(A + A)} -> 1")

    @cached_property
    def phi_l(self) -> Mor:
        """``A -> ^∨A``, ``a ↦ κ(-, a)``."""
        A = self.carrier
        return chain(tensor(identity(dual(A)), self.kappa), tensor(coev_left(A), identity(A)))

    @cached_property
    def phi_r(self) -> Mor:
        """``A -> A^∨``, ``a ↦ κ(a, -)``."""
        A = self.carrier
        return chain(tensor(self.kappa, identity(dual(A))), tensor(identity(A), coev_right(A)))

    @cached_property
    def _phi_l_inverse(self) -> Matrix | SingularReport:
        return solve_or_invert(self.phi_l.matrix)

    @property
    def is_nondegenerate(self) -> bool:
        return isinstance(self._phi_l_inverse, Matrix)

    @cached_property
    def phi_l_inv(self) -> Mor:
        inv = self._phi_l_inverse
        if isinstance(inv, SingularReport):
            raise DegeneratePairingError(inv)
        return Mor(self.phi_l.cod, self.phi_l.dom, inv)

    @cached_property
    def phi_r_inv(self) -> Mor:
        return self.phi_r.inverse()

    def gram(self) -> Matrix:
        """``gram[i, j] = κ(e_i ⊗ e_j)``."""
        n = dim(self.carrier)
        return Matrix.from_flat(n, n, self.kappa.matrix.entries)

    @classmethod
    def from_gram(cls, carrier, gram) -> "Pairing":
        A = _carrier(carrier)
        g = gram if isinstance(gram, Matrix) else Matrix(gram)
        n = dim(A)
        if g.shape != (n, n):
            raise ValueError("Gram matrix has the wrong size")
        return cls(A, Mor(A + A, (), Matrix.row(list(g.entries))))

    def __mul__(self, c) -> "Pairing":
        return Pairing(self.carrier, self.kappa * c)

    __rmul__ = __mul__


@dataclass(frozen=True)
class ModuleAction:
    """A left (``A⊗M -> M``) or right (``M⊗A -> M``) module; axioms are enforced on construction."""

    algebra: Algebra
    carrier: Word
    action: Mor
    side: str = "left"

    def __post_init__(self):
        M = _carrier(self.carrier)
        object.__setattr__(self, "carrier", M)
        A = self.algebra.carrier
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        expected = A + M if self.side == "left" else M + A
        if self.action.dom != expected or self.action.cod != M:
            raise ValueError(f"action must map {word_str(expected)} -> {word_str(M)}")
        report = self.axioms()
        if not report.passed:
            raise ValueError(
                "module axioms fail: " + ", ".join(c.name for c in report.failures)
            )

    def axioms(self) -> Report:
        A, M = self.algebra, self.carrier
        act, idA, idM = self.action, A.id, identity(M)
        report = Report(f"{self.side} module")
        if self.side == "left":
            report.add(Check.equal(
                "associativity",
                compose(act, tensor(A.m, idM)),
                chain(act, tensor(idA, act)),
            ))
            report.add(Check.equal("unit", compose(act, tensor(A.eta, idM)), idM))
        else:
            report.add(Check.equal(
                "associativity",
                compose(act, tensor(idM, A.m)),
                chain(act, tensor(act, idA)),
            ))
            report.add(Check.equal("unit", compose(act, tensor(idM, A.eta)), idM))
        return report


def regular_module(A: Algebra, side: str = "left") -> ModuleAction:
    return ModuleAction(A, A.carrier, A.m, side)


# axiom checks ---------------------------------------------------------------


def check_algebra(A: Algebra) -> Report:
    m, eta, idA = A.m, A.eta, A.id
    report = Report("algebra")
    report.add(Check.equal(
        "associativity", compose(m, tensor(m, idA)), compose(m, tensor(idA, m))
    ))
    report.add(Check.equal("left unit", compose(m, tensor(eta, idA)), idA))
    report.add(Check.equal("right unit", compose(m, tensor(idA, eta)), idA))
    return report


def check_coalgebra(C: Coalgebra) -> Report:
    delta, eps, idC = C.delta, C.eps, identity(C.carrier)
    report = Report("coalgebra")
    report.add(Check.equal(
        "coassociativity",
        compose(tensor(delta, idC), delta),
        compose(tensor(idC, delta), delta),
    ))
    report.add(Check.equal("left counit", compose(tensor(eps, idC), delta), idC))
    report.add(Check.equal("right counit", compose(tensor(idC, eps), delta), idC))
    return report


def check_frobenius_compat(A: Algebra, C: Coalgebra) -> Report:
    """The coproduct is a bimodule map: ``(id⊗m)(Δ⊗id) = Δ m = (m⊗id)(id⊗Δ)``."""
    if A.carrier != C.carrier:
        raise ValueError("algebra and coalgebra live on different carriers")
    m, delta, idA = A.m, C.delta, A.id
    middle = compose(delta, m)
    report = Report("frobenius compatibility")
    report.add(Check.equal(
        "right-module coproduct", compose(tensor(idA, m), tensor(delta, idA)), middle
    ))
    report.add(Check.equal(
        "left-module coproduct", compose(tensor(m, idA), tensor(idA, delta)), middle
    ))
    return report


def invariance_defect(A: Algebra, k: Pairing) -> Matrix:
    """``κ∘(m⊗id) - κ∘(id⊗m)``."""
    lhs = compose(k.kappa, tensor(A.m, A.id))
    rhs = compose(k.kappa, tensor(A.id, A.m))
    return lhs.matrix - rhs.matrix


def check_invariance(A: Algebra, k: Pairing) -> bool:
    if A.carrier != k.carrier:
        raise ValueError("pairing lives on a different carrier")
    return invariance_defect(A, k).is_zero()


@dataclass(frozen=True)
class Nondegeneracy:
    nondegenerate: bool
    phi_l_inverse: Mor | None = None
    null_vector: tuple | None = None

    def __bool__(self) -> bool:
        return self.nondegenerate


def check_nondegenerate(k: Pairing) -> Nondegeneracy:
    """Decide whether ``Φ_l`` is invertible; the witness is its inverse or a kernel vector."""
    inv_l = solve_or_invert(k.phi_l.matrix)
    inv_r = solve_or_invert(k.phi_r.matrix)
    if isinstance(inv_l, Matrix) != isinstance(inv_r, Matrix):
        raise AssertionError("left and right transposes disagree on invertibility")
    if isinstance(inv_l, Matrix):
        return Nondegeneracy(True, Mor(k.phi_l.cod, k.phi_l.dom, inv_l))
    return Nondegeneracy(False, null_vector=inv_l.null_basis[0])


def dual_actions(A: Algebra) -> tuple[ModuleAction, ModuleAction]:
    """Left action on ``^∨A`` (``(a·φ)(x) = φ(x a)``) and right action on ``A^∨`` (``(φ·a)(x) = φ(a x)``)."""
    Ad, idA, idD = dual(A.carrier), A.id, identity(dual(A.carrier))
    rho = chain(
        tensor(idD, ev_left(A.carrier)),
        tensor(idD, A.m, idD),
        tensor(coev_left(A.carrier), idA, idD),
    )
    rho_bar = chain(
        tensor(ev_right(A.carrier), idD),
        tensor(idD, A.m, idD),
        tensor(idD, idA, coev_right(A.carrier)),
    )
    return ModuleAction(A, Ad, rho, "left"), ModuleAction(A, Ad, rho_bar, "right")


def check_module_morphism(f: Mor, M: ModuleAction, N: ModuleAction) -> bool:
    if M.side != N.side or M.algebra != N.algebra:
        raise ValueError("modules over different algebras or on different sides")
    if f.dom != M.carrier or f.cod != N.carrier:
        raise ValueError("morphism does not connect the module carriers")
    idA = M.algebra.id
    if M.side == "left":
        rhs = compose(N.action, tensor(idA, f))
    else:
        rhs = compose(N.action, tensor(f, idA))
    return compose(f, M.action) == rhs


def pairing_identities(k: Pairing) -> Report:
    """Identities tying a non-degenerate pairing to the (co)evaluations."""
    A = k.carrier
    idA, Ad = identity(A), dual(A)
    pl, pr = k.phi_l, k.phi_r
    report = Report("pairing identities")
    report.add(Check.equal("ev_right∘(Φ_r⊗id) = κ", compose(ev_right(A), tensor(pr, idA)), k.kappa))
    report.add(Check.equal("ev_left∘(id⊗Φ_l) = κ", compose(ev_left(A), tensor(idA, pl)), k.kappa))
    report.add(Check.equal("Φ_r = wee(Φ_l)", wee(pl), pr))
    if not k.is_nondegenerate:
        return report
    pli, pri = k.phi_l_inv, k.phi_r_inv
    report.add(Check.equal(
        "(Φ_l⊗Φ_r⁻¹)∘coev_right = coev_left", compose(tensor(pl, pri), coev_right(A)), coev_left(A)
    ))
    report.add(Check.equal(
        "ev_right∘(Φ_r⊗Φ_l⁻¹) = ev_left", compose(ev_right(A), tensor(pr, pli)), ev_left(A)
    ))
    report.add(Check.equal(
        "ev_right∘(id⊗Φ_l⁻¹) = ev_left∘(Φ_r⁻¹⊗id)",
        compose(ev_right(A), tensor(identity(Ad), pli)),
        compose(ev_left(A), tensor(pri, identity(Ad))),
    ))
    # the mirrored identity needs ^∨A = A^∨
    report.add(Check.equal(
        "ev_right∘(Φ_l⊗Φ_r⁻¹) = ev_left", compose(ev_right(A), tensor(pl, pri)), ev_left(A)
    ))
    return report
