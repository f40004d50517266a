"""Exact rational matrices.

Scalars are :class:`fractions.Fraction`. A :class:`Matrix` stores an integer
numerator array together with one common positive denominator, kept in lowest
terms, so equality is a plain array comparison. Products run through numpy's
int64 kernels whenever an a-priori bound rules out overflow and fall back to
Python integers (object arrays) otherwise.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import accumulate
from numbers import Rational
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Fraction",
    "Matrix",
    "SingularMatrixError",
    "SingularReport",
    "as_fraction",
    "det",
    "inverse",
    "kron",
    "mat_mul",
    "null_space",
    "rank",
    "rref",
    "solve",
    "solve_or_invert",
]

# |entry| bound under which int64 arithmetic is safe for one multiply-accumulate pass
_INT64_SAFE = 2**62
_FLOAT64_EXACT = 2**53


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction. Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.flat)
    return int(np.abs(a).max())


def _pack(a: np.ndarray) -> np.ndarray:
    """Canonical storage: int64 when every entry is small, object otherwise."""
    if a.dtype == object:
        if _max_abs(a) < _INT64_SAFE:
            return a.astype(np.int64)
        return a
    return a.astype(np.int64, copy=False)


def _obj(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    out = np.empty(a.shape, dtype=object)
    out.flat[:] = [int(v) for v in a.flat]
    return out


def _content_gcd(a: np.ndarray, start: int, chunk: int = 4096) -> int:
    """gcd of ``start`` and every entry of ``a``, stopping as soon as it hits 1."""
    g = start
    flat = a.ravel()
    for lo in range(0, flat.size, chunk):
        block = flat[lo:lo + chunk]
        if a.dtype == object:
            g = reduce(math.gcd, (int(v) for v in block), g)
        else:
            g = math.gcd(g, int(np.gcd.reduce(np.abs(block))))
        if g == 1:
            break
    return g


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("_num", "_den")

    def __init__(self, rows: Iterable[Iterable] = (), *, shape: tuple[int, int] | None = None):
        data = [[as_fraction(x) for x in row] for row in rows]
        if shape is None:
            n_rows = len(data)
            n_cols = len(data[0]) if data else 0
        else:
            n_rows, n_cols = shape
        if len(data) != n_rows or any(len(r) != n_cols for r in data):
            raise ValueError("ragged or mis-shaped matrix data")
        flat = [x for row in data for x in row]
        den = reduce(math.lcm, (x.denominator for x in flat), 1)
        num = np.empty((n_rows, n_cols), dtype=object)
        num.flat[:] = [x.numerator * (den // x.denominator) for x in flat]
        self._set(num, den)

    def _set(self, num: np.ndarray, den: int) -> None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        if not num.any():
            den = 1
        elif den > 1:
            g = _content_gcd(num, den)
            if g > 1:
                num = num // g
                den //= g
        num = _pack(num)
        num.flags.writeable = False
        self._num = num
        self._den = int(den)

    @classmethod
    def _from_parts(cls, num: np.ndarray, den: int = 1) -> "Matrix":
        m = cls.__new__(cls)
        m._set(np.asarray(num), den)
        return m

    # constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._from_parts(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._from_parts(np.eye(n, dtype=np.int64))

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "Matrix":
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)], shape=(rows, cols))

    @classmethod
    def column(cls, entries: Sequence) -> "Matrix":
        return cls([[x] for x in entries], shape=(len(entries), 1))

    @classmethod
    def row(cls, entries: Sequence) -> "Matrix":
        return cls([list(entries)], shape=(1, len(entries)))

    @classmethod
    def from_integers(cls, num, den: int = 1) -> "Matrix":
        """Build from an integer array and a common denominator."""
        arr = np.asarray(num)
        if arr.ndim != 2:
            raise ValueError("need a 2-d array")
        if arr.dtype != object and not np.issubdtype(arr.dtype, np.integer):
            raise TypeError("numerators must be integers")
        return cls._from_parts(arr, den)

    # views --------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._num.shape

    @property
    def rows(self) -> int:
        return self._num.shape[0]

    @property
    def cols(self) -> int:
        return self._num.shape[1]

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def numerators(self) -> np.ndarray:
        return self._num

    @property
    def entries(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(int(v), d) for v in self._num.flat)

    def tolist(self) -> list[list[Fraction]]:
        d = self._den
        return [[Fraction(int(v), d) for v in row] for row in self._num]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return Fraction(int(self._num[i, j]), self._den)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.tolist())
        return f"Matrix([{body}])"

    # comparisons --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._den == other._den
            and bool(np.array_equal(self._num, other._num))
        )

    def __hash__(self) -> int:
        return hash((self.shape, self._den, tuple(int(v) for v in self._num.flat)))

    def is_zero(self) -> bool:
        return not self._num.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.rows)

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self._num))

    # arithmetic ---------------------------------------------------------

    def _aligned(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        den = math.lcm(self._den, other._den)
        a = _scale(self._num, den // self._den)
        b = _scale(other._num, den // other._den)
        return a, b, den

    def __add__(self, other: "Matrix") -> "Matrix":
        a, b, den = self._aligned(other)
        return Matrix._from_parts(_add(a, b), den)

    def __sub__(self, other: "Matrix") -> "Matrix":
        a, b, den = self._aligned(other)
        return Matrix._from_parts(_add(a, _scale(b, -1)), den)

    def __neg__(self) -> "Matrix":
        return Matrix._from_parts(_scale(self._num, -1), self._den)

    def __mul__(self, c) -> "Matrix":
        c = as_fraction(c)
        return Matrix._from_parts(_scale(self._num, c.numerator), self._den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Matrix":
        c = as_fraction(c)
        if c == 0:
            raise ZeroDivisionError("division of a matrix by zero")
        return self * (1 / c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    @property
    def T(self) -> "Matrix":
        return Matrix._from_parts(self._num.T.copy(), self._den)

    def permute_rows(self, perm: Sequence[int]) -> "Matrix":
        """Row ``i`` of the result is row ``perm[i]`` of ``self``."""
        return Matrix._from_parts(self._num[list(perm), :], self._den)

    def permute_cols(self, perm: Sequence[int]) -> "Matrix":
        return Matrix._from_parts(self._num[:, list(perm)], self._den)


def _scale(a: np.ndarray, k: int) -> np.ndarray:
    if k == 1:
        return a
    if a.dtype != object and _max_abs(a) * abs(k) < _INT64_SAFE:
        return a * k
    return _obj(a) * k


def _add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and _max_abs(a) + _max_abs(b) < _INT64_SAFE:
        return a + b
    return _obj(a) + _obj(b)


def _int_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.dtype != object and b.dtype != object:
        bound = _max_abs(a) * _max_abs(b) * inner
        if bound < _FLOAT64_EXACT:
            # every partial sum is an integer below 2**53, so BLAS is exact
            return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        if bound < _INT64_SAFE:
            return a @ b
    if inner >= MODULAR_MIN_INNER:
        return _modular_matmul(a, b)
    return _obj(a) @ _obj(b)


# object products with at least this inner dimension go through residues
MODULAR_MIN_INNER = 8
_LIMB = 32


@lru_cache(maxsize=None)
def _primes(bits: int) -> tuple[int, ...]:
    """Primes just below ``2**bits``, largest first."""
    out, p = [], (1 << bits) - 1
    while len(out) < 256:
        if all(p % d for d in range(3, math.isqrt(p) + 1, 2)):
            out.append(p)
        p -= 2
    return tuple(out)


def _to_limbs(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Signs, base ``2**32`` magnitude limbs (least significant first) and max bit length."""
    if a.dtype != object:
        mag = np.abs(a.astype(np.int64))
        top = int(mag.max()) if mag.size else 0
        return a < 0, np.stack([mag & 0xFFFFFFFF, mag >> _LIMB], axis=-1), top.bit_length()
    flat = [int(v) for v in a.flat]
    top = max((abs(v).bit_length() for v in flat), default=0)
    nbytes = 4 * max(1, -(-top // _LIMB))
    raw = b"".join(abs(v).to_bytes(nbytes, "little") for v in flat)
    limbs = np.frombuffer(raw, dtype="<u4").reshape(a.shape + (nbytes // 4,)).astype(np.int64)
    signs = np.fromiter((v < 0 for v in flat), dtype=bool, count=len(flat)).reshape(a.shape)
    return signs, limbs, top


def _from_limbs(limbs: np.ndarray) -> np.ndarray:
    """Inverse of the magnitude part of :func:`_to_limbs` (limbs already carried)."""
    shape, k = limbs.shape[:-1], limbs.shape[-1]
    raw = np.ascontiguousarray(limbs.astype("<u4")).tobytes()
    out = np.empty(shape, dtype=object)
    out.flat[:] = [int.from_bytes(raw[i:i + 4 * k], "little") for i in range(0, len(raw), 4 * k)]
    return out


def _residues(signs: np.ndarray, limbs: np.ndarray, p: int) -> np.ndarray:
    if limbs.shape[-1] == 2 and not limbs[..., 1].any():
        r = limbs[..., 0] % p
        return np.where(signs, (p - r) % p, r).astype(np.float64)
    r = np.zeros(limbs.shape[:-1], dtype=np.int64)
    for j in reversed(range(limbs.shape[-1])):
        r = (r * (2**_LIMB % p) + limbs[..., j] % p) % p
    return np.where(signs, (p - r) % p, r).astype(np.float64)


def _modular_matmul(a: np.ndarray, b: np.ndarray, force: bool = False) -> np.ndarray:
    """Exact integer product via BLAS modulo several primes and Garner CRT."""
    inner = a.shape[1]
    sa, la, ta = _to_limbs(a)
    sb, lb, tb = _to_limbs(b)
    bound = 2 ** (ta + tb) * inner
    # (p-1)**2 * inner must stay below 2**53 so each modular product is exact
    bits = (53 - inner.bit_length()) // 2
    primes, modulus = [], 1
    for p in _primes(bits):
        if modulus > 2 * bound:
            break
        primes.append(p)
        modulus *= p
    else:
        return _obj(a) @ _obj(b)
    # rough per-entry costs in ns, measured: CRT work grows with the prime
    # count squared, schoolbook object arithmetic with the inner dimension
    k = len(primes)
    if not force and 25 * k * k + 200 * k > 170 * inner:
        return _obj(a) @ _obj(b)
    digits: list[np.ndarray] = []
    for i, p in enumerate(primes):
        r = np.fmod(_residues(sa, la, p) @ _residues(sb, lb, p), p).astype(np.int64)
        # mixed-radix digit: strip the earlier digits and divide by their primes
        for q, d in zip(primes[:i], digits):
            r = (r - d) % p * pow(q, -1, p) % p
        digits.append(r)
    # x = Σ digit_i · Π_{k<i} p_k, accumulated in limbs then carried
    n_limbs = -(-modulus.bit_length() // _LIMB) + 1
    acc = np.zeros(digits[0].shape + (n_limbs,), dtype=np.int64)
    radix = 1
    for p, d in zip(primes, digits):
        words = np.frombuffer(radix.to_bytes(4 * n_limbs, "little"), dtype="<u4").astype(np.int64)
        # each term is below 2**53, so a few hundred of them fit before carrying
        acc += d[..., None] * words
        radix *= p
    for j in range(n_limbs - 1):
        acc[..., j + 1] += acc[..., j] >> _LIMB
        acc[..., j] &= (1 << _LIMB) - 1
    x = _from_limbs(acc)
    half = modulus // 2
    return np.where(x > half, x - modulus, x)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product ``a @ b``."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    ka, kb = isinstance(a, Kron), isinstance(b, Kron)
    if ka and kb:
        return _kron_kron(a, b)
    if ka:
        return _kron_apply(a.factors, b)
    if kb:
        return _kron_apply(b.T.factors, a.T).T
    return Matrix._from_parts(_int_matmul(a._num, b._num), a._den * b._den)


# Kronecker products above this many entries are kept in factored form
LAZY_KRON_ENTRIES = 1 << 16


def _dense_kron(a: Matrix, b: Matrix) -> Matrix:
    x, y = a._num, b._num
    if x.dtype == object or y.dtype == object or _max_abs(x) * _max_abs(y) >= _INT64_SAFE:
        x, y = _obj(x), _obj(y)
    return Matrix._from_parts(np.kron(x, y), a._den * b._den)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; ``(a⊗b)[i*br + k, j*bc + l] = a[i, j] * b[k, l]``.

    Large results come back as a :class:`Kron`, which behaves like a Matrix but
    only materializes its entries when something needs them.
    """
    if isinstance(a, Kron) or isinstance(b, Kron) or a.rows * b.rows * a.cols * b.cols > LAZY_KRON_ENTRIES:
        return Kron(_factors_of(a) + _factors_of(b))
    return _dense_kron(a, b)


def _factors_of(a: Matrix) -> tuple[Matrix, ...]:
    return a.factors if isinstance(a, Kron) else (a,)


class Kron(Matrix):
    """Kronecker product ``f_1 ⊗ ... ⊗ f_k`` kept in factored form.

    Products with dense matrices contract one tensor axis per factor and skip
    identity factors, so the full product is never built. Any other use falls
    back to the materialized matrix, computed once and cached.
    """

    __slots__ = ("factors", "_shape", "_ident")

    def __init__(self, factors: Sequence[Matrix]):
        fs = tuple(f for g in factors for f in _factors_of(g))
        if not fs:
            raise ValueError("empty Kronecker product")
        self.factors = fs
        self._shape = (math.prod(f.rows for f in fs), math.prod(f.cols for f in fs))
        self._ident = tuple(f.rows == f.cols and f.is_identity() for f in fs)

    def __getattr__(self, name):
        # unset slots land here; fill them from the dense product
        if name in ("_num", "_den"):
            dense = reduce(_dense_kron, self.factors)
            self._set(dense._num, dense._den)
            return object.__getattribute__(self, name)
        raise AttributeError(name)

    def __reduce__(self):
        return (Kron, (self.factors,))

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    def is_zero(self) -> bool:
        return any(f.is_zero() for f in self.factors)

    def is_identity(self) -> bool:
        return all(self._ident)

    @property
    def T(self) -> "Kron":
        return Kron([f.T for f in self.factors])

    def __mul__(self, c) -> "Kron":
        return Kron([self.factors[0] * c, *self.factors[1:]])

    __rmul__ = __mul__

    def __neg__(self) -> "Kron":
        return self * -1


def _contract(f: np.ndarray, x: np.ndarray, axis: int) -> np.ndarray:
    """Apply the integer matrix ``f`` along ``axis`` of the integer tensor ``x``."""
    moved = np.moveaxis(x, axis, 0)
    flat = moved.reshape(moved.shape[0], -1)
    out = _int_matmul(f, flat).reshape((f.shape[0],) + moved.shape[1:])
    return np.moveaxis(out, 0, axis)


def _kron_apply(factors: Sequence[Matrix], b: Matrix) -> Matrix:
    """``(f_1 ⊗ ... ⊗ f_k) @ b`` for a dense ``b``."""
    x = b._num.reshape(tuple(f.cols for f in factors) + (b.cols,))
    den = b._den
    for axis, f in enumerate(factors):
        if f.rows == f.cols and f.is_identity():
            continue
        x = _contract(f._num, x, axis)
        den *= f._den
    rows = math.prod(f.rows for f in factors)
    return Matrix._from_parts(np.ascontiguousarray(x).reshape(rows, b.cols), den)


def _dense(a: Matrix) -> Matrix:
    return Matrix._from_parts(a._num, a._den) if isinstance(a, Kron) else a


# materialized column blocks are kept below this many entries
BLOCK_ENTRIES = 1 << 20


def _column_blocks(a: Matrix, limit: int | None = None) -> Iterator[Matrix]:
    """Dense column blocks of ``a``, left to right, each under ``limit`` entries when possible."""
    limit = BLOCK_ENTRIES if limit is None else limit
    if a.rows * a.cols <= limit or a.cols == 1:
        yield _dense(a)
        return
    head, *rest = _factors_of(a)
    if not rest:
        step = max(1, limit // max(head.rows, 1))
        for c in range(0, head.cols, step):
            yield Matrix._from_parts(head._num[:, c:c + step], head._den)
        return
    tail = Kron(rest)
    for c in range(head.cols):
        col = Matrix._from_parts(head._num[:, c:c + 1], head._den)
        for blk in _column_blocks(tail, max(1, limit // max(head.rows, 1))):
            yield _dense_kron(col, blk)


def _streamed_product(left: Kron, right: Kron) -> Matrix:
    """``left @ right`` with ``right`` materialized a few columns at a time."""
    parts = [_kron_apply(left.factors, blk) for blk in _column_blocks(right)]
    if len(parts) == 1:
        return parts[0]
    den = math.lcm(*(p._den for p in parts))
    return Matrix._from_parts(np.hstack([_scale(p._num, den // p._den) for p in parts]), den)


def _kron_kron(a: Kron, b: Kron) -> Matrix:
    """Product of two factored matrices.

    Factors are grouped so the column seams of ``a`` meet the row seams of
    ``b``; inside each group the cheaper side is materialized.
    """
    pa = list(accumulate((f.cols for f in a.factors), operator.mul, initial=1))
    pb = list(accumulate((f.rows for f in b.factors), operator.mul, initial=1))
    # the last index with a given prefix product also swallows 1-dim factors
    last_a = {v: i for i, v in enumerate(pa)}
    last_b = {v: i for i, v in enumerate(pb)}
    out: list[Matrix] = []
    ia = ib = 0
    for v in sorted(set(pa) & set(pb)):
        ja, jb = last_a[v], last_b[v]
        ga, gb = a.factors[ia:ja], b.factors[ib:jb]
        ia, ib = ja, jb
        if not ga and not gb:
            continue
        left = Kron(ga) if ga else Matrix.identity(1)
        right = Kron(gb) if gb else Matrix.identity(1)
        if not gb:
            out.append(_dense(left))
        elif not ga:
            out.append(_dense(right))
        elif left.rows * left.cols <= right.rows * right.cols:
            out.append(_streamed_product(right.T, left.T).T)
        else:
            out.append(_streamed_product(left, right))
    return reduce(kron, out)


# elimination ----------------------------------------------------------------


def rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan over Fractions).

    Pivots are chosen as the first nonzero entry in the column, so the output is
    a deterministic function of the input.
    """
    m = a.tolist()
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        row_r = m[r]
        for i in range(n_rows):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [x - f * y for x, y in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def null_space(a: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : a @ x = 0}``, one vector per free column."""
    red, pivots = rref(a)
    n = a.cols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -red[row][f]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class SingularReport:
    """Returned instead of an inverse when a square matrix is rank deficient."""

    rank: int
    size: int
    null_basis: tuple[tuple[Fraction, ...], ...]

    @property
    def defect(self) -> int:
        return self.size - self.rank


class SingularMatrixError(ValueError):
    def __init__(self, report: SingularReport):
        super().__init__(f"singular matrix: rank {report.rank} < {report.size}")
        self.report = report


def solve_or_invert(a: Matrix) -> Matrix | SingularReport:
    """Exact inverse of a square matrix, or a :class:`SingularReport`."""
    n, n2 = a.shape
    if n != n2:
        raise ValueError(f"square matrix required, got {a.shape}")
    aug = Matrix.from_integers(
        np.hstack([_obj(a._num), _obj(np.eye(n, dtype=np.int64)) * a._den]), a._den
    )
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return SingularReport(rank(a), n, tuple(null_space(a)))
    return Matrix([row[n:] for row in red], shape=(n, n))


def inverse(a: Matrix) -> Matrix:
    out = solve_or_invert(a)
    if isinstance(out, SingularReport):
        raise SingularMatrixError(out)
    return out


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution ``x`` of ``a @ x = b`` (free variables set to 0), or None."""
    if a.rows != b.rows:
        raise ValueError("row counts differ")
    n = a.cols
    aug = Matrix([ra + rb for ra, rb in zip(a.tolist(), b.tolist())], shape=(a.rows, n + b.cols))
    red, pivots = rref(aug)
    if any(p >= n for p in pivots):
        return None
    x = [[Fraction(0)] * b.cols for _ in range(n)]
    for row, p in enumerate(pivots):
        x[p] = red[row][n:]
    return Matrix(x, shape=(n, b.cols))


def det(a: Matrix) -> Fraction:
    """Determinant by fraction-free Bareiss elimination on the numerators."""
    n, n2 = a.shape
    if n != n2:
        raise ValueError("square matrix required")
    if n == 0:
        return Fraction(1)
    m = [[int(v) for v in row] for row in a._num]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], a._den**n)
