"""Finite-dimensional rational vector spaces as a strict sovereign monoidal category.

Objects are :class:`Obj` values. A tensor product of objects is a *word*, a
plain tuple of objects; the tensor unit is the empty word, and ``UNIT`` is
dropped wherever it appears. A morphism :class:`Mor` carries its domain and
codomain words and a matrix of shape ``(dim cod, dim dom)``. Basis vectors of a
word are ordered row-major (the first factor is the most significant digit),
which is exactly the index convention of :func:`frobcat.exact.kron`.

Duality conventions. Left and right duals coincide on objects (``^∨U = U^∨``);
the dual of a word reverses it and dualizes every letter. With ``e_i`` a basis
of ``U`` and ``e^i`` the dual basis:

==================  =============================  =====================
function            map                            formula
==================  =============================  =====================
``coev_right(U)``   ``1 -> U ⊗ U^∨``               ``Σ e_i ⊗ e^i``
``ev_right(U)``     ``U^∨ ⊗ U -> 1``               ``e^i ⊗ e_j ↦ δ_ij``
``coev_left(U)``    ``1 -> ^∨U ⊗ U``               ``Σ e^i ⊗ e_i``
``ev_left(U)``      ``U ⊗ ^∨U -> 1``               ``e_i ⊗ e^j ↦ δ_ij``
==================  =============================  =====================

The "left" pair is the one belonging to the left dual ``^∨U``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Union

import numpy as np

from .exact import Matrix, inverse as _mat_inverse, kron

__all__ = [
    "Obj",
    "UNIT",
    "Mor",
    "Word",
    "as_word",
    "chain",
    "compose",
    "coev_left",
    "coev_right",
    "dim",
    "dual",
    "eew",
    "ev_left",
    "ev_right",
    "identity",
    "point",
    "tensor",
    "transpose_left",
    "transpose_right",
    "wee",
    "wee_inverse",
]


@dataclass(frozen=True)
class Obj:
    """A basis-labelled space of dimension ``dim``; ``is_dual`` marks ``U^∨``."""

    label: str
    dim: int
    is_dual: bool = False

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("objects have positive dimension")

    def dual(self) -> "Obj":
        if self == UNIT:
            return self
        return Obj(self.label, self.dim, not self.is_dual)

    def __str__(self) -> str:
        return f"{self.label}^" if self.is_dual else self.label


UNIT = Obj("1", 1)

Word = tuple  # tuple[Obj, ...]
WordLike = Union[Obj, Iterable]


def as_word(*parts: WordLike) -> Word:
    """Flatten objects and nested words into one word, dropping the unit."""
    out = []
    for p in parts:
        if isinstance(p, Obj):
            if p != UNIT:
                out.append(p)
        else:
            out.extend(as_word(*p))
    return tuple(out)


def dual(w: WordLike) -> Word:
    return tuple(o.dual() for o in reversed(as_word(w)))


def dim(w: WordLike) -> int:
    return prod(o.dim for o in as_word(w))


def word_str(w: Word) -> str:
    return " ⊗ ".join(str(o) for o in w) if w else "1"


@dataclass(frozen=True, eq=True)
class Mor:
    """A morphism ``dom -> cod`` stored as a ``dim(cod) × dim(dom)`` matrix."""

    dom: Word
    cod: Word
    matrix: Matrix = field(compare=True)

    def __post_init__(self):
        object.__setattr__(self, "dom", as_word(self.dom))
        object.__setattr__(self, "cod", as_word(self.cod))
        if not isinstance(self.matrix, Matrix):
            object.__setattr__(self, "matrix", Matrix(self.matrix))
        if self.matrix.shape != (dim(self.cod), dim(self.dom)):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not fit "
                f"{word_str(self.dom)} -> {word_str(self.cod)}"
            )

    def __repr__(self) -> str:
        return f"Mor({word_str(self.dom)} -> {word_str(self.cod)}, {self.matrix!r})"

    def __matmul__(self, other: "Mor") -> "Mor":
        return compose(self, other)

    def __add__(self, other: "Mor") -> "Mor":
        _same_type(self, other)
        return Mor(self.dom, self.cod, self.matrix + other.matrix)

    def __sub__(self, other: "Mor") -> "Mor":
        _same_type(self, other)
        return Mor(self.dom, self.cod, self.matrix - other.matrix)

    def __mul__(self, c) -> "Mor":
        return Mor(self.dom, self.cod, self.matrix * c)

    __rmul__ = __mul__

    def inverse(self) -> "Mor":
        return Mor(self.cod, self.dom, _mat_inverse(self.matrix))

    def scalar(self) -> Fraction:
        """The number a ``1 -> 1`` morphism stands for."""
        if self.dom or self.cod:
            raise ValueError("not an endomorphism of the tensor unit")
        return self.matrix[0, 0]

    def is_identity(self) -> bool:
        return self.dom == self.cod and self.matrix.is_identity()


def _same_type(f: Mor, g: Mor) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError(
            f"morphisms of different type: {word_str(f.dom)} -> {word_str(f.cod)} "
            f"vs {word_str(g.dom)} -> {word_str(g.cod)}"
        )


def identity(*w: WordLike) -> Mor:
    w = as_word(*w)
    return Mor(w, w, Matrix.identity(dim(w)))


def point(w: WordLike, coords) -> Mor:
    """The morphism ``1 -> w`` sending 1 to the vector ``coords``."""
    return Mor((), w, Matrix.column(list(coords)))


def compose(g: Mor, f: Mor) -> Mor:
    """``g ∘ f``; the codomain of ``f`` must match the domain of ``g`` letter by letter."""
    if f.cod != g.dom:
        raise ValueError(f"cannot compose: {word_str(f.cod)} is not {word_str(g.dom)}")
    return Mor(f.dom, g.cod, g.matrix @ f.matrix)


def chain(*mors: Mor) -> Mor:
    """``mors[0] ∘ mors[1] ∘ ... ∘ mors[-1]``, multiplied in the cheapest order."""
    if not mors:
        raise ValueError("empty chain")
    for g, f in zip(mors, mors[1:]):
        if f.cod != g.dom:
            raise ValueError(f"cannot compose: {word_str(f.cod)} is not {word_str(g.dom)}")
    if len(mors) == 1:
        return mors[0]
    n = len(mors)
    dims = [mors[0].matrix.rows] + [m.matrix.cols for m in mors]
    cost = [[0] * n for _ in range(n)]
    split = [[0] * n for _ in range(n)]
    for length in range(1, n):
        for i in range(n - length):
            j = i + length
            cost[i][j] = float("inf")
            for k in range(i, j):
                c = cost[i][k] + cost[k + 1][j] + dims[i] * dims[k + 1] * dims[j + 1]
                if c < cost[i][j]:
                    cost[i][j], split[i][j] = c, k

    def build(i: int, j: int) -> Matrix:
        if i == j:
            return mors[i].matrix
        k = split[i][j]
        return build(i, k) @ build(k + 1, j)

    return Mor(mors[-1].dom, mors[0].cod, build(0, n - 1))


def tensor(*mors: Mor) -> Mor:
    """Tensor product of morphisms (Kronecker product of matrices)."""
    if not mors:
        return identity()
    out = mors[0]
    for g in mors[1:]:
        out = Mor(out.dom + g.dom, out.cod + g.cod, kron(out.matrix, g.matrix))
    return out


# evaluation and coevaluation -------------------------------------------------


def _reversal(w: Word) -> np.ndarray:
    """``r[I]`` is the position of the dual basis vector ``e^I`` inside ``dual(w)``."""
    dims = [o.dim for o in w]
    n = prod(dims)
    if len(dims) < 2:
        return np.arange(n)
    t = np.arange(n).reshape(dims).transpose(tuple(reversed(range(len(dims))))).ravel()
    r = np.empty(n, dtype=np.int64)
    r[t] = np.arange(n)
    return r


def _pairing_vector(n: int, positions: np.ndarray) -> np.ndarray:
    v = np.zeros(n * n, dtype=np.int64)
    v[positions] = 1
    return v


def coev_right(u: WordLike) -> Mor:
    """``1 -> U ⊗ U^∨``, ``1 ↦ Σ e_i ⊗ e^i``."""
    w = as_word(u)
    n, r = dim(w), _reversal(w)
    v = _pairing_vector(n, np.arange(n) * n + r)
    return Mor((), w + dual(w), Matrix.from_integers(v.reshape(-1, 1)))


def ev_right(u: WordLike) -> Mor:
    """``U^∨ ⊗ U -> 1``."""
    w = as_word(u)
    n, r = dim(w), _reversal(w)
    v = _pairing_vector(n, r * n + np.arange(n))
    return Mor(dual(w) + w, (), Matrix.from_integers(v.reshape(1, -1)))


def coev_left(u: WordLike) -> Mor:
    """``1 -> ^∨U ⊗ U``, ``1 ↦ Σ e^i ⊗ e_i``."""
    w = as_word(u)
    n, r = dim(w), _reversal(w)
    v = _pairing_vector(n, r * n + np.arange(n))
    return Mor((), dual(w) + w, Matrix.from_integers(v.reshape(-1, 1)))


def ev_left(u: WordLike) -> Mor:
    """``U ⊗ ^∨U -> 1``."""
    w = as_word(u)
    n, r = dim(w), _reversal(w)
    v = _pairing_vector(n, np.arange(n) * n + r)
    return Mor(w + dual(w), (), Matrix.from_integers(v.reshape(1, -1)))


# duals of morphisms -------------------------------------------------------------


def transpose_right(f: Mor) -> Mor:
    """Right dual ``f^∨ : V^∨ -> U^∨`` of ``f : U -> V``, built from ``ev_right``/``coev_right``."""
    U, V = f.dom, f.cod
    Ud, Vd = dual(U), dual(V)
    return chain(
        tensor(ev_right(V), identity(Ud)),
        tensor(identity(Vd), f, identity(Ud)),
        tensor(identity(Vd), coev_right(U)),
    )


def transpose_left(f: Mor) -> Mor:
    """Left dual ``^∨f : ^∨V -> ^∨U`` of ``f : U -> V``, built from ``ev_left``/``coev_left``."""
    U, V = f.dom, f.cod
    Ud, Vd = dual(U), dual(V)
    return chain(
        tensor(identity(Ud), ev_left(V)),
        tensor(identity(Ud), f, identity(Vd)),
        tensor(coev_left(U), identity(Vd)),
    )


def wee(f: Mor) -> Mor:
    """Turn ``f : U -> ^∨V`` into ``V -> U^∨`` by bending both ends to the right.

    Every word is the left dual of its own right dual here, so any morphism is
    a valid input; ``V`` is read off as ``dual(f.cod)``.
    """
    U, V = f.dom, dual(f.cod)
    Ud = dual(U)
    return chain(
        tensor(ev_left(V), identity(Ud)),
        tensor(identity(V), f, identity(Ud)),
        tensor(identity(V), coev_right(U)),
    )


def eew(f: Mor) -> Mor:
    """Turn ``f : U -> V^∨`` into ``V -> ^∨U`` by bending both ends to the left."""
    U, V = f.dom, dual(f.cod)
    Ud = dual(U)
    return chain(
        tensor(identity(Ud), ev_right(V)),
        tensor(identity(Ud), f, identity(V)),
        tensor(coev_left(U), identity(V)),
    )


def wee_inverse(f: Mor) -> Mor:
    """Inverse of ``wee(f)`` assembled from ``f^{-1}`` (requires ``f`` invertible)."""
    U, V = f.dom, dual(f.cod)
    Ud = dual(U)
    finv = f.inverse()
    return chain(
        tensor(ev_right(U), identity(V)),
        tensor(identity(Ud), finv, identity(V)),
        tensor(identity(Ud), coev_left(V)),
    )
