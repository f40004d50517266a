"""Deterministic generators for the example algebras used by tests, demos and the CLI."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import Matrix, as_fraction
from .finvect import Mor, Obj, compose, coev_left, coev_right, ev_left, ev_right, identity, tensor
from .frobenius import FrobeniusPackage, coalgebra_from_pairing
from .structures import Algebra, Coalgebra, Pairing, check_algebra

__all__ = [
    "AlgebraSpec",
    "CayleyTableError",
    "build",
    "canonical_dual_frobenius",
    "cyclic_table",
    "group_algebra",
    "matrix_algebra",
    "quantum_plane",
    "symmetric_group_table",
    "trace_pairing",
]


class CayleyTableError(ValueError):
    pass


def _checked(A: Algebra) -> Algebra:
    report = check_algebra(A)
    if not report.passed:  # generators are wrong if this ever fires
        raise AssertionError(str(report))
    return A


# matrix algebras ------------------------------------------------------------


def _matrix_algebra(n: int) -> Algebra:
    N = n * n
    table = [[[0] * N for _ in range(N)] for _ in range(N)]
    for i, j, l in itertools.product(range(n), repeat=3):
        # E_ij E_jl = E_il
        table[i * n + j][j * n + l][i * n + l] = 1
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    return Algebra.from_structure_constants(Obj(f"M{n}", N), table, unit)


def trace_pairing(n: int, u: Sequence[Sequence] | None = None, scale=1) -> Pairing:
    """``κ(a, b) = scale · tr(u a b)`` on the matrix units of ``M_n``; ``u`` defaults to 1."""
    if u is None:
        u = [[int(i == j) for j in range(n)] for i in range(n)]
    u = [[as_fraction(x) for x in row] for row in u]
    c = as_fraction(scale)
    N = n * n
    gram = [[Fraction(0)] * N for _ in range(N)]
    # tr(u E_ij E_kl) = δ_jk u_li
    for i, j, l in itertools.product(range(n), repeat=3):
        gram[i * n + j][j * n + l] = c * u[l][i]
    return Pairing.from_gram(Obj(f"M{n}", N), gram)


def matrix_algebra(n: int, u: Sequence[Sequence] | None = None) -> FrobeniusPackage:
    """``M_n(Q)`` on the matrix units, with the trace pairing twisted by ``u`` if given."""
    if n < 1:
        raise ValueError("n must be positive")
    A = _checked(_matrix_algebra(n))
    name = f"M{n}" if u is None else f"M{n}[u]"
    return FrobeniusPackage(A, pairing=trace_pairing(n, u), name=name, info={"kind": "matrix", "n": n,
                                  "basis_labels": [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]})


# group algebras -------------------------------------------------------------


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int) -> tuple[list[list[int]], list[str]]:
    """Cayley table of ``S_n``; element ``i`` is the ``i``-th permutation in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return table, labels


def _validate_cayley(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise CayleyTableError("Cayley table must be square and nonempty")
    if any(not isinstance(x, int) or not 0 <= x < n for row in table for x in row):
        raise CayleyTableError("Cayley table entries must be element indices")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise CayleyTableError(f"not associative at ({a}, {b}, {c})")
    units = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if not units:
        raise CayleyTableError("no identity element")
    e = units[0]
    for a in range(n):
        if not any(table[a][b] == e for b in range(n)):
            raise CayleyTableError(f"element {a} has no inverse")
    return e


def group_algebra(table: Sequence[Sequence[int]], name: str = "G",
                  labels: Sequence[str] | None = None) -> FrobeniusPackage:
    """``Q[G]`` with the pairing ``κ(g, h) = [gh = e]`` and counit ``ε`` = coefficient of ``e``."""
    e = _validate_cayley(table)
    n = len(table)
    consts = [[[0] * n for _ in range(n)] for _ in range(n)]
    for g, h in itertools.product(range(n), repeat=2):
        consts[g][h][table[g][h]] = 1
    unit = [int(g == e) for g in range(n)]
    X = Obj(name, n)
    A = _checked(Algebra.from_structure_constants(X, consts, unit))
    gram = [[int(table[g][h] == e) for h in range(n)] for g in range(n)]
    return FrobeniusPackage(A, pairing=Pairing.from_gram(X, gram), name=f"Q[{name}]",
                            info={"kind": "group", "order": n,
                                  "basis_labels": list(labels) if labels else [f"g{i}" for i in range(n)]})


# quantum plane --------------------------------------------------------------


def quantum_plane(q) -> FrobeniusPackage:
    """Basis ``(1, x, y, xy)`` with ``x² = y² = 0`` and ``yx = q·xy``; ``ε`` reads off ``xy``."""
    q = as_fraction(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    consts = [[[Fraction(0)] * 4 for _ in range(4)] for _ in range(4)]
    one, x, y, xy = range(4)
    for b in range(4):
        consts[one][b][b] = Fraction(1)
        consts[b][one][b] = Fraction(1)
    consts[x][y][xy] = Fraction(1)
    consts[y][x][xy] = q
    X = Obj(f"Lq{q}", 4)
    A = _checked(Algebra.from_structure_constants(X, consts, [1, 0, 0, 0]))
    eps = Mor(X, (), Matrix.row([0, 0, 0, 1]))
    kappa = Pairing(X, compose(eps, A.m))
    C = coalgebra_from_pairing(A, kappa)
    return FrobeniusPackage(A, coalgebra=C, name=f"Lambda_{q}", info={"kind": "quantum_plane", "q": q, "basis_labels": ["1", "x", "y", "xy"]})


# canonical Frobenius algebra on X ⊗ X^∨ -------------------------------------------


def canonical_dual_frobenius(dim_x: int) -> FrobeniusPackage:
    """The algebra ``X ⊗ X^∨`` whose structure maps are built from (co)evaluations.

    Product contracts the middle pair with ``ev_right``, the unit is
    ``coev_right``, the coproduct inserts ``coev_left`` in the middle and the
    counit is ``ev_left``, rescaled if needed so that counitality holds; the
    scale applied is stored in ``info["counit_scale"]``.
    """
    if dim_x < 1:
        raise ValueError("dim_x must be positive")
    X = Obj("X", dim_x)
    Xd = X.dual()
    idX, idXd = identity(X), identity(Xd)
    m = tensor(idX, ev_right(X), idXd)
    eta = coev_right(X)
    A = _checked(Algebra((X, Xd), m, eta))
    delta = tensor(idX, coev_left(X), idXd)
    eps = ev_left(X)
    counit = compose(tensor(eps, A.id), delta)
    scale = counit.matrix[0, 0]
    if counit != A.id * scale:
        raise AssertionError("counit law is not a scalar multiple of the identity")
    C = Coalgebra(A.carrier, delta, eps * (1 / scale))
    labels = [f"x{i}x{j}^" for i in range(dim_x) for j in range(dim_x)]
    return FrobeniusPackage(A, coalgebra=C, name=f"X{dim_x}*X{dim_x}",
                            info={"kind": "canonical_dual", "dim_x": dim_x, "counit_scale": 1 / scale,
                                  "basis_labels": labels})


# specs ----------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraSpec:
    """Names a generator and its parameters, e.g. ``AlgebraSpec("quantum_plane", {"q": 2})``."""

    kind: str
    params: dict = field(default_factory=dict, hash=False)


def build(spec: AlgebraSpec) -> FrobeniusPackage:
    p = spec.params
    if spec.kind == "matrix":
        return matrix_algebra(int(p["n"]), p.get("u"))
    if spec.kind == "group":
        if "cyclic" in p:
            return group_algebra(cyclic_table(int(p["cyclic"])), name=f"Z{p['cyclic']}")
        if "symmetric" in p:
            table, labels = symmetric_group_table(int(p["symmetric"]))
            return group_algebra(table, name=f"S{p['symmetric']}", labels=labels)
        return group_algebra(p["table"], name=p.get("name", "G"))
    if spec.kind == "quantum_plane":
        return quantum_plane(p["q"])
    if spec.kind == "canonical_dual":
        return canonical_dual_frobenius(int(p["dim"]))
    if spec.kind == "custom":
        from .algebra_file import load_package

        return load_package(p["path"])
    raise ValueError(f"unknown algebra kind {spec.kind!r}")
