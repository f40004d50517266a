"""Points of an algebra, units, inner automorphisms and Nakayama automorphisms.

Elements of ``A`` are morphisms ``1 -> A``; they multiply by convolution
``m∘(a⊗b)``. Every invariant non-degenerate pairing ``κ`` has a Nakayama
automorphism ``℧ = Φ_r⁻¹∘Φ_l`` characterised by ``κ(℧a, b) = κ(b, a)``.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterator, Optional, Sequence

import numpy as np

from .exact import Matrix, det, null_space, rank, solve
from .finvect import Mor, chain, coev_left, compose, point, tensor
from .frobenius import FrobeniusError, check_symmetric, cyclic_pairing, pairing_from_phi
from .structures import Algebra, Check, Pairing, Report, check_invariance

__all__ = [
    "InnerSearch",
    "NakayamaReport",
    "NotAUnit",
    "NotAnAutomorphism",
    "PairingRelation",
    "PointElement",
    "Unit",
    "ad",
    "check_separability_invariance",
    "convolve",
    "heart",
    "inner_search",
    "invert_unit",
    "is_inner",
    "left_action",
    "nakayama",
    "random_element",
    "random_unit",
    "relate_pairings",
    "right_action",
    "separability_idempotent",
    "symmetrize",
    "try_invert_unit",
    "twist_counit",
    "twist_pairing",
    "twist_phi",
]

# largest grid enumerated by the unit search
GRID_BUDGET = 20_000


class NotAUnit(ValueError):
    """The element has no two-sided inverse; ``rank_defect`` is ``dim A - rank l_a``."""

    def __init__(self, rank_defect: int):
        super().__init__(f"not a unit (left multiplication has rank defect {rank_defect})")
        self.rank_defect = rank_defect


class NotAnAutomorphism(ValueError):
    pass


# points and units -----------------------------------------------------------


@dataclass(frozen=True)
class PointElement:
    """An element of ``A`` seen as a morphism ``1 -> A``."""

    algebra: Algebra
    vec: Mor

    def __post_init__(self):
        if self.vec.dom != () or self.vec.cod != self.algebra.carrier:
            raise ValueError("a point must be a morphism 1 -> A")

    @classmethod
    def of(cls, A: Algebra, coords: Sequence) -> "PointElement":
        return cls(A, point(A.carrier, coords))

    @classmethod
    def one(cls, A: Algebra) -> "PointElement":
        return cls(A, A.eta)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self.vec.matrix.entries

    def __mul__(self, other: "PointElement") -> "PointElement":
        return convolve(self, other)

    def __add__(self, other: "PointElement") -> "PointElement":
        return PointElement(self.algebra, self.vec + other.vec)

    def scale(self, c) -> "PointElement":
        return PointElement(self.algebra, self.vec * c)


def convolve(a: PointElement, b: PointElement) -> PointElement:
    """``m∘(a⊗b)``."""
    if a.algebra.carrier != b.algebra.carrier:
        raise ValueError("elements of different algebras")
    return PointElement(a.algebra, compose(a.algebra.m, tensor(a.vec, b.vec)))


def left_action(a: PointElement) -> Mor:
    """``l_a = m∘(a⊗id)``."""
    A = a.algebra
    return compose(A.m, tensor(a.vec, A.id))


def right_action(a: PointElement) -> Mor:
    """``r_a = m∘(id⊗a)``."""
    A = a.algebra
    return compose(A.m, tensor(A.id, a.vec))


@dataclass(frozen=True)
class Unit:
    element: PointElement
    inverse: PointElement

    def __post_init__(self):
        eta = self.element.algebra.eta
        if convolve(self.element, self.inverse).vec != eta or convolve(self.inverse, self.element).vec != eta:
            raise ValueError("element and inverse do not multiply to the unit")

    @property
    def algebra(self) -> Algebra:
        return self.element.algebra

    def inv(self) -> "Unit":
        return Unit(self.inverse, self.element)

    def __mul__(self, other: "Unit") -> "Unit":
        return Unit(self.element * other.element, other.inverse * self.inverse)


def try_invert_unit(a: PointElement) -> Unit | NotAUnit:
    """Solve ``l_a(x) = η``; the result is returned, never raised."""
    A = a.algebra
    la = left_action(a).matrix
    x = solve(la, A.eta.matrix)
    if x is None:
        return NotAUnit(A.dim - rank(la))
    inv = PointElement(A, Mor((), A.carrier, x))
    # in finite dimension a left inverse is two-sided; Unit re-verifies both products
    return Unit(a, inv)


def invert_unit(a: PointElement) -> Unit:
    res = try_invert_unit(a)
    if isinstance(res, NotAUnit):
        raise res
    return res


def ad(g: Unit) -> Mor:
    """``ad_g = l_{g⁻¹}∘r_g``, i.e. ``x ↦ g⁻¹ x g``."""
    l_inv, r = left_action(g.inverse), right_action(g.element)
    out = compose(l_inv, r)
    if compose(r, l_inv) != out:
        raise AssertionError("left and right multiplication fail to commute")
    return out


# random elements ------------------------------------------------------------


def random_element(A: Algebra, rng: random.Random, bound: int = 3) -> PointElement:
    return PointElement.of(A, [rng.randint(-bound, bound) for _ in range(A.dim)])


def random_unit(A: Algebra, rng: random.Random, bound: int = 3, tries: int = 1000) -> Unit:
    """A unit ``η + (small random element)``, resampled until invertible."""
    one = PointElement.one(A)
    for _ in range(tries):
        res = try_invert_unit(one + random_element(A, rng, bound))
        if isinstance(res, Unit):
            return res
    raise RuntimeError("no unit found; is the algebra degenerate?")


# Nakayama automorphism ------------------------------------------------------


def _require_frobenius_pairing(A: Algebra, k: Pairing) -> None:
    if A.carrier != k.carrier:
        raise FrobeniusError("pairing lives on a different carrier")
    if not check_invariance(A, k):
        raise FrobeniusError("pairing is not invariant")
    k.phi_l_inv  # raises DegeneratePairingError on a degenerate pairing


def _algebra_morphism_report(A: Algebra, f: Mor) -> Report:
    report = Report("algebra morphism")
    report.add(Check.equal("multiplicative", compose(f, A.m), compose(A.m, tensor(f, f))))
    report.add(Check.equal("unital", compose(f, A.eta), A.eta))
    return report


@dataclass(frozen=True)
class NakayamaReport:
    naka: Mor
    is_identity: bool
    is_algebra_morphism: bool
    inner_witness: Optional[Unit]
    relation_holds: bool
    inner: Optional["InnerSearch"] = field(default=None, compare=False)


def nakayama(A: Algebra, k: Pairing, search_inner: bool = True) -> NakayamaReport:
    """``℧ = Φ_r⁻¹∘Φ_l`` together with its defining relation and algebra-morphism checks."""
    _require_frobenius_pairing(A, k)
    naka = compose(k.phi_r_inv, k.phi_l)
    relation = compose(k.kappa, tensor(naka, A.id)) == cyclic_pairing(k)
    morphism = _algebra_morphism_report(A, naka).passed
    search = inner_search(A, naka) if search_inner else None
    return NakayamaReport(
        naka=naka,
        is_identity=naka.is_identity(),
        is_algebra_morphism=morphism,
        inner_witness=search.witness if search else None,
        relation_holds=relation,
        inner=search,
    )


# innerness ------------------------------------------------------------------


@dataclass(frozen=True)
class InnerSearch:
    """Outcome of looking for ``g`` with ``ω = ad_g``.

    ``solution_space`` spans all ``g`` with ``l_g∘ω = r_g``; those of them that
    are units are exactly the witnesses. ``certified_none`` is true when the
    search proved no unit exists.
    """

    witness: Optional[Unit]
    solution_space: tuple[PointElement, ...]
    certified_none: bool
    points_tested: int

    @property
    def decided(self) -> bool:
        return self.witness is not None or self.certified_none


def _primitive(v: Sequence[Fraction]) -> list[int]:
    den = reduce(math.lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0) or 1
    return [x // g for x in ints]


def _grid(s: int, n: int) -> Iterator[tuple[int, ...]]:
    # points of {0..n}^s by increasing coordinate sum, so small combinations come first
    pts = sorted(itertools.product(range(n + 1), repeat=s), key=lambda p: (sum(p), p))
    yield from pts


def _heuristic_grid(s: int, budget: int) -> Iterator[tuple[int, ...]]:
    r = 1
    seen = 0
    while True:
        for p in itertools.product(range(-r, r + 1), repeat=s):
            if max(map(abs, p)) != r:
                continue
            yield p
            seen += 1
            if seen >= budget:
                return
        r += 1


def inner_search(A: Algebra, omega: Mor, budget: int = GRID_BUDGET) -> InnerSearch:
    """Look for a unit ``g`` with ``l_g∘ω = r_g``, i.e. ``ω = ad_g``.

    The determinant of ``l_g`` is a polynomial of degree at most ``n = dim A``
    in each coordinate of ``g`` on the ``s``-dimensional solution space, so if
    it vanishes on the grid ``{0..n}^s`` it vanishes identically. That grid is
    enumerated whenever it has at most ``budget`` points, which certifies a
    negative answer. Beyond the budget a smaller symmetric grid is searched and
    a negative answer is left uncertified.
    """
    if omega.dom != A.carrier or omega.cod != A.carrier:
        raise NotAnAutomorphism("omega must be an endomorphism of A")
    if not _algebra_morphism_report(A, omega).passed or rank(omega.matrix) != A.dim:
        raise NotAnAutomorphism("omega is not an algebra automorphism")
    n = A.dim
    basis = [PointElement.of(A, [int(i == j) for j in range(n)]) for i in range(n)]
    # column i of the system is vec(l_{e_i}∘ω - r_{e_i})
    cols = [(compose(left_action(e), omega) - right_action(e)).matrix.entries for e in basis]
    system = Matrix([[cols[i][r] for i in range(n)] for r in range(n * n)], shape=(n * n, n))
    space = [PointElement.of(A, _primitive(v)) for v in null_space(system)]
    s = len(space)
    if s == 0:
        return InnerSearch(None, (), True, 0)

    lefts = [left_action(p).matrix for p in space]
    den = reduce(math.lcm, (m.denominator for m in lefts), 1)
    ints = np.stack([m.numerators.astype(object) * (den // m.denominator) for m in lefts])

    tested = 0

    def try_point(c: tuple[int, ...]) -> Optional[Unit]:
        nonlocal tested
        tested += 1
        combo = np.tensordot(np.array(c, dtype=object), ints, axes=1)
        if det(Matrix.from_integers(combo)) == 0:
            return None
        g = reduce(lambda x, y: x + y, (p.scale(ci) for p, ci in zip(space, c) if ci))
        return invert_unit(g)

    def done(u: Unit) -> InnerSearch:
        if ad(u) != omega:
            raise AssertionError("inner witness fails to reproduce omega")
        return InnerSearch(u, tuple(space), False, tested)

    # cheap candidates first: the basis of the solution space, then their sum
    for i in range(s):
        u = try_point(tuple(int(i == j) for j in range(s)))
        if u is not None:
            return done(u)
    if (n + 1) ** s <= budget:
        for c in _grid(s, n):
            if sum(1 for x in c if x) <= 1 and max(c) <= 1:
                continue  # zero and basis vectors, already tried
            u = try_point(c)
            if u is not None:
                return done(u)
        return InnerSearch(None, tuple(space), True, tested)
    for c in _heuristic_grid(s, budget):
        u = try_point(c)
        if u is not None:
            return done(u)
    return InnerSearch(None, tuple(space), False, tested)


def is_inner(A: Algebra, omega: Mor) -> Optional[Unit]:
    """A unit ``g`` with ``omega = ad_g``, or ``None`` if none was found."""
    return inner_search(A, omega).witness


# pairings -------------------------------------------------------------------


@dataclass(frozen=True)
class PairingRelation:
    """Units with ``κ' = κ∘(id⊗r_g) = κ∘(l_h⊗id)``; ``h = ℧_κ(g)``."""

    g: Unit
    h: Unit
    sigma_l: Mor
    sigma_r: Mor


def relate_pairings(A: Algebra, k: Pairing, k2: Pairing) -> PairingRelation:
    """Connect two Frobenius pairings on ``A`` by a one-sided twist with a unit."""
    if k.carrier != k2.carrier:
        raise ValueError("pairings live on different carriers")
    _require_frobenius_pairing(A, k)
    _require_frobenius_pairing(A, k2)
    sigma_l = compose(k.phi_l_inv, k2.phi_l)
    sigma_r = compose(k.phi_r_inv, k2.phi_r)
    g = invert_unit(PointElement(A, compose(sigma_l, A.eta)))
    h = invert_unit(PointElement(A, compose(sigma_r, A.eta)))
    if compose(k.kappa, tensor(A.id, right_action(g.element))) != k2.kappa:
        raise AssertionError("κ∘(id⊗r_g) does not reproduce the second pairing")
    if compose(k.kappa, tensor(left_action(h.element), A.id)) != k2.kappa:
        raise AssertionError("κ∘(l_h⊗id) does not reproduce the second pairing")
    naka = compose(k.phi_r_inv, k.phi_l)
    if compose(naka, g.element.vec) != h.element.vec:
        raise AssertionError("h differs from the Nakayama image of g")
    return PairingRelation(g, h, sigma_l, sigma_r)


def symmetrize(A: Algebra, k: Pairing) -> Optional[Pairing]:
    """``κ∘(l_{h⁻¹}⊗id)`` when ``℧_κ = ad_h``; ``None`` if no such ``h`` was found."""
    report = nakayama(A, k)
    h = report.inner_witness
    if h is None:
        return None
    k2 = Pairing(k.carrier, compose(k.kappa, tensor(left_action(h.inverse), A.id)))
    if not check_symmetric(k2):
        raise AssertionError("symmetrized pairing is not symmetric")
    return k2


def separability_idempotent(A: Algebra, k: Pairing) -> Mor:
    """``e = (Φ_l⁻¹⊗id)∘coev_left : 1 -> A⊗A``."""
    _require_frobenius_pairing(A, k)
    return compose(tensor(k.phi_l_inv, A.id), coev_left(A.carrier))


def check_separability_invariance(A: Algebra, e: Mor) -> bool:
    """``(m⊗id)∘(id⊗e) = (id⊗m)∘(e⊗id)`` as maps ``A -> A⊗A``."""
    lhs = compose(tensor(A.m, A.id), tensor(A.id, e))
    rhs = compose(tensor(A.id, A.m), tensor(e, A.id))
    return lhs == rhs


def heart(A: Algebra, g: Mor, h: Mor) -> Mor:
    """Convolution on ``Hom(1, A⊗A)``: ``(m⊗m)∘(id⊗g⊗id)∘h``."""
    return chain(tensor(A.m, A.m), tensor(A.id, g, A.id), h)


# twists ---------------------------------------------------------------------


def twist_pairing(A: Algebra, k: Pairing, g: Unit, h: Unit) -> Pairing:
    """``κ∘(l_g⊗r_h)``, re-validated as an invariant non-degenerate pairing."""
    k2 = Pairing(k.carrier, compose(k.kappa, tensor(left_action(g.element), right_action(h.element))))
    _require_frobenius_pairing(A, k2)
    return k2


def twist_counit(A: Algebra, eps: Mor, g: Unit, h: Unit) -> Mor:
    """``ε∘r_g∘l_h``, checked to give a non-degenerate invariant pairing again."""
    out = chain(eps, right_action(g.element), left_action(h.element))
    _require_frobenius_pairing(A, Pairing(A.carrier, compose(out, A.m)))
    return out


def twist_phi(A: Algebra, phi: Mor, g: Unit) -> Mor:
    """``Φ∘r_g``, checked to remain an invertible left-module map."""
    out = compose(phi, right_action(g.element))
    _require_frobenius_pairing(A, pairing_from_phi(A, out))
    return out
