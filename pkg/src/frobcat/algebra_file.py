"""On-disk format for an algebra with optional Frobenius data.

A file is a JSON object::

    {
      "schema_version": 1,
      "name": "M2",
      "carrier_dim": n,
      "basis_labels": [n strings],
      "m":     m[i][j][k]      coefficient of e_k in e_i e_j
      "eta":   eta[k]          coefficient of e_k in the unit
      "delta": delta[i][j][k]  coefficient of e_j ⊗ e_k in Δ(e_i)   (optional)
      "eps":   eps[i]          ε(e_i)                               (optional, with delta)
      "kappa": kappa[i][j]     κ(e_i ⊗ e_j)                         (optional)
      "phi":   phi[i][j]       coefficient of e^j in φ(e_i)         (optional)
    }

Every scalar is a string ``"p/q"`` with ``q > 0`` in lowest terms; a bare
integer ``"p"`` is accepted on input. :func:`dumps` writes the canonical form,
and ``dumps(loads(text)) == text`` for every canonical ``text``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any

from .exact import Matrix
from .finvect import Mor, Obj
from .frobenius import FrobeniusPackage, pairing_from_phi
from .structures import Algebra, Coalgebra, Pairing

__all__ = [
    "SCHEMA_VERSION",
    "FileFormatError",
    "dump_package",
    "dumps",
    "format_rational",
    "load_package",
    "loads",
    "package_to_dict",
    "parse_rational",
]

SCHEMA_VERSION = 1
_RATIONAL = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_BLOCKS = ("delta", "eps", "kappa", "phi")


class FileFormatError(ValueError):
    pass


def parse_rational(s: Any) -> Fraction:
    if not isinstance(s, str):
        raise FileFormatError(f"scalars must be strings of the form 'p/q', got {s!r}")
    match = _RATIONAL.match(s.strip())
    if not match:
        raise FileFormatError(f"malformed rational {s!r}")
    p, q = int(match[1]), int(match[2]) if match[2] is not None else 1
    if q == 0:
        raise FileFormatError(f"zero denominator in {s!r}")
    x = Fraction(p, q)
    if x.denominator != q:
        raise FileFormatError(f"rational {s!r} is not in lowest terms")
    return x


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _tensor(data: Any, shape: tuple[int, ...], field: str) -> list:
    """Parse a nested list of rationals of the given shape."""
    if not shape:
        return parse_rational(data)  # type: ignore[return-value]
    if not isinstance(data, list) or len(data) != shape[0]:
        raise FileFormatError(f"field {field!r} must have shape {shape}")
    return [_tensor(x, shape[1:], field) for x in data]


def _emit(data: Any) -> Any:
    if isinstance(data, Fraction):
        return format_rational(data)
    return [_emit(x) for x in data]


# dict <-> package ------------------------------------------------------------


def package_to_dict(pkg: FrobeniusPackage, blocks: tuple[str, ...] | None = None) -> dict:
    """Serialize ``pkg``; ``blocks`` restricts which optional blocks are written."""
    A = pkg.algebra
    n = A.dim
    labels = pkg.info.get("basis_labels") or [f"e{i}" for i in range(n)]
    out: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "name": pkg.name,
        "carrier_dim": n,
        "basis_labels": list(labels),
        "m": _emit(A.structure_constants()),
        "eta": _emit(list(A.eta.matrix.entries)),
    }
    want = set(_BLOCKS if blocks is None else blocks)
    if pkg.coalgebra is not None and want & {"delta", "eps"}:
        D = pkg.coalgebra.delta.matrix
        out["delta"] = _emit([[[D[j * n + k, i] for k in range(n)] for j in range(n)] for i in range(n)])
        out["eps"] = _emit(list(pkg.coalgebra.eps.matrix.entries))
    if pkg.pairing is not None and "kappa" in want:
        out["kappa"] = _emit(pkg.pairing.gram().tolist())
    if pkg.phi is not None and "phi" in want:
        # φ(e_i)(e_j) = κ_φ(e_j, e_i); reading it off the pairing keeps the dual basis order explicit
        G = pairing_from_phi(A, pkg.phi).gram()
        out["phi"] = _emit([[G[j, i] for j in range(n)] for i in range(n)])
    return out


def package_from_dict(data: Any) -> FrobeniusPackage:
    if not isinstance(data, dict):
        raise FileFormatError("top level must be a JSON object")
    if data.get("schema_version") != SCHEMA_VERSION:
        raise FileFormatError(f"unsupported schema_version {data.get('schema_version')!r}")
    unknown = set(data) - {"schema_version", "name", "carrier_dim", "basis_labels", "m", "eta", *_BLOCKS}
    if unknown:
        raise FileFormatError(f"unknown fields {sorted(unknown)}")
    n = data.get("carrier_dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FileFormatError("carrier_dim must be a positive integer")
    labels = data.get("basis_labels")
    if not isinstance(labels, list) or len(labels) != n or not all(isinstance(x, str) for x in labels):
        raise FileFormatError("basis_labels must be a list of carrier_dim strings")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise FileFormatError("name must be a string")
    for required in ("m", "eta"):
        if required not in data:
            raise FileFormatError(f"missing field {required!r}")
    if ("delta" in data) != ("eps" in data):
        raise FileFormatError("delta and eps must be given together")

    X = Obj(name or "A", n)
    A = Algebra.from_structure_constants(X, _tensor(data["m"], (n, n, n), "m"), _tensor(data["eta"], (n,), "eta"))
    C = k = phi = None
    if "delta" in data:
        t = _tensor(data["delta"], (n, n, n), "delta")
        rows = [[t[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
        delta = Mor(X, (X, X), Matrix(rows, shape=(n * n, n)))
        eps = Mor(X, (), Matrix.row(_tensor(data["eps"], (n,), "eps")))
        C = Coalgebra(X, delta, eps)
    if "kappa" in data:
        k = Pairing.from_gram(X, _tensor(data["kappa"], (n, n), "kappa"))
    if "phi" in data:
        t = _tensor(data["phi"], (n, n), "phi")
        phi = Pairing.from_gram(X, [[t[i][j] for i in range(n)] for j in range(n)]).phi_l
    info = {"basis_labels": list(labels)}
    return FrobeniusPackage(A, coalgebra=C, pairing=k, phi=phi, name=name, info=info)


# text and files --------------------------------------------------------------


def dumps(pkg: FrobeniusPackage, blocks: tuple[str, ...] | None = None) -> str:
    return json.dumps(package_to_dict(pkg, blocks), indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def loads(text: str) -> FrobeniusPackage:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}") from exc
    return package_from_dict(data)


def load_package(path: str | Path) -> FrobeniusPackage:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text)


def dump_package(pkg: FrobeniusPackage, path: str | Path, blocks: tuple[str, ...] | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(pkg, blocks), encoding="utf-8")
    return path
