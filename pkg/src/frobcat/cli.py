"""Command-line interface: ``frobcat {generate,check,convert,nakayama}``.

Reports are JSON on stdout (or a text summary with ``--format text``). Exit
status is 0 on success, 1 when an axiom fails or the input is degenerate, and
2 for unreadable input or bad usage. Every nonzero exit carries a ``reason``.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .algebra_file import SCHEMA_VERSION, FileFormatError, dump_package, format_rational, load_package
from .exact import Matrix
from .finvect import compose, tensor
from .frobenius import (
    FrobeniusError,
    FrobeniusPackage,
    coalgebra_from_pairing,
    kappa_from_counit,
    pairing_from_phi,
)
from .nakayama import (
    ad,
    nakayama,
    random_unit,
    right_action,
    symmetrize,
)
from .structures import Check, DegeneratePairingError, Pairing
from .zoo import AlgebraSpec, CayleyTableError, build

DEFAULT_SEED = 20240101
OUT_DIR_ENV = "FROBCAT_OUT_DIR"
PRESENTATIONS = ("deltaeps", "kappa", "phi")


class UsageError(Exception):
    pass


class Failure(Exception):
    """Input parsed but violates a mathematical precondition (exit 1)."""

    def __init__(self, reason: str, extra: dict | None = None):
        super().__init__(reason)
        self.extra = extra or {}


# serialization helpers -------------------------------------------------------


def _matrix(m: Matrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.tolist()]


def _vector(v) -> list[str]:
    return [format_rational(Fraction(x)) for x in v]


def _check(c: Check) -> dict:
    return {
        "name": c.name,
        "passed": c.passed,
        "witness": None if c.difference is None else _matrix(c.difference),
    }


def _emit(report: dict, fmt: str, out: Optional[Path], text: Callable[[dict], str]) -> None:
    body = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(body, encoding="utf-8")
    if fmt == "json":
        sys.stdout.write(body)
    else:
        sys.stdout.write(text(report) + "\n")


def _summary(report: dict) -> str:
    lines = [f"{report['command']}: {'ok' if report['ok'] else 'FAILED'}"]
    if report.get("reason"):
        lines.append(f"  reason: {report['reason']}")
    for c in report.get("checks", []):
        lines.append(f"  {'ok ' if c['passed'] else 'BAD'} {c['name']}")
    for key in ("output", "is_identity", "is_algebra_morphism", "relation_holds", "inner"):
        if key in report:
            lines.append(f"  {key}: {report[key]}")
    return "\n".join(lines)


def _default_dir() -> Path:
    return Path(os.environ.get(OUT_DIR_ENV, "."))


# generate --------------------------------------------------------------------


def _parse_params(kind: str, params: Sequence[str]) -> dict:
    out: dict[str, Any] = {}
    for item in params:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"parameters must look like key=value, got {item!r}")
        out[key] = value
    try:
        if kind == "matrix":
            out["n"] = int(out["n"])
            if "u" in out:
                vals = [Fraction(x) for x in out["u"].split(",")]
                n = out["n"]
                if len(vals) != n * n:
                    raise UsageError(f"u needs {n * n} comma-separated entries")
                out["u"] = [vals[i * n:(i + 1) * n] for i in range(n)]
        elif kind == "group":
            if "table" in out:
                out["table"] = json.loads(out["table"])
        elif kind == "quantum_plane":
            out["q"] = Fraction(out["q"])
        elif kind == "canonical_dual":
            out["dim"] = int(out["dim"])
        else:
            raise UsageError(f"unknown kind {kind!r}")
    except KeyError as exc:
        raise UsageError(f"missing parameter {exc.args[0]!r} for kind {kind!r}") from None
    except (ValueError, ZeroDivisionError, json.JSONDecodeError) as exc:
        raise UsageError(f"bad parameter: {exc}") from None
    return out


def cmd_generate(args) -> dict:
    params = _parse_params(args.kind, args.params)
    try:
        pkg = build(AlgebraSpec(args.kind, params)).complete()
    except (CayleyTableError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out = Path(args.out) if args.out else _default_dir() / f"{_slug(pkg.name)}.json"
    dump_package(pkg, out)
    return {"name": pkg.name, "output": str(out), "carrier_dim": pkg.algebra.dim}


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() or c in "-_" else "_" for c in name) or "algebra"


# check -----------------------------------------------------------------------


def cmd_check(args) -> dict:
    pkg = load_package(args.path)
    report = pkg.validate()
    flags = pkg.flags() if report.passed else {}
    out: dict[str, Any] = {
        "name": pkg.name,
        "checks": [_check(c) for c in report.checks],
        "symmetric": flags.get("symmetric"),
    }
    if pkg.pairing is not None and not pkg.pairing.is_nondegenerate:
        try:
            pkg.pairing.phi_l_inv
        except DegeneratePairingError as exc:
            out["null_vector"] = _vector(exc.null_vector)
    if not report.passed:
        raise Failure("failed: " + ", ".join(c.name for c in report.failures), out)
    return out


# convert ---------------------------------------------------------------------


def _require_block(pkg: FrobeniusPackage, which: str) -> None:
    present = {
        "deltaeps": pkg.coalgebra is not None,
        "kappa": pkg.pairing is not None,
        "phi": pkg.phi is not None,
    }
    if not present[which]:
        raise UsageError(f"input has no {which} block")


def _degenerate(exc: DegeneratePairingError) -> Failure:
    return Failure(str(exc), {"null_vector": _vector(exc.null_vector)})


def _source_pairing(pkg: FrobeniusPackage, which: str) -> Pairing:
    A = pkg.algebra
    if which == "deltaeps":
        return kappa_from_counit(A, pkg.coalgebra)
    if which == "kappa":
        return pkg.pairing
    return pairing_from_phi(A, pkg.phi)


def cmd_convert(args) -> dict:
    pkg = load_package(args.path)
    _require_block(pkg, args.src)
    A = pkg.algebra
    try:
        k = _source_pairing(pkg, args.src)
        C = coalgebra_from_pairing(A, k)  # validates invariance and non-degeneracy
    except DegeneratePairingError as exc:
        raise _degenerate(exc) from None
    except FrobeniusError as exc:
        raise Failure(str(exc)) from None
    if args.src == "deltaeps":
        C = pkg.coalgebra
    target = {
        "deltaeps": FrobeniusPackage(A, coalgebra=C, name=pkg.name, info=pkg.info),
        "kappa": FrobeniusPackage(A, pairing=k, name=pkg.name, info=pkg.info),
        "phi": FrobeniusPackage(A, phi=k.phi_l, name=pkg.name, info=pkg.info),
    }[args.dst]
    blocks = {"deltaeps": ("delta", "eps"), "kappa": ("kappa",), "phi": ("phi",)}[args.dst]
    default = _default_dir() / f"{Path(args.path).stem}.{args.dst}.json"
    out = Path(args.out) if args.out else default
    dump_package(target, out, blocks)
    return {"name": pkg.name, "from": args.src, "to": args.dst, "output": str(out)}


# nakayama --------------------------------------------------------------------


def _any_pairing(pkg: FrobeniusPackage) -> Pairing:
    for which in ("kappa", "deltaeps", "phi"):
        try:
            _require_block(pkg, which)
        except UsageError:
            continue
        return _source_pairing(pkg, which)
    raise UsageError("input carries no Frobenius presentation")


def cmd_nakayama(args) -> dict:
    pkg = load_package(args.path)
    A = pkg.algebra
    try:
        k = _any_pairing(pkg)
        rep = nakayama(A, k)
    except DegeneratePairingError as exc:
        raise _degenerate(exc) from None
    except FrobeniusError as exc:
        raise Failure(str(exc)) from None
    search = rep.inner
    out: dict[str, Any] = {
        "name": pkg.name,
        "nakayama": _matrix(rep.naka.matrix),
        "is_identity": rep.is_identity,
        "is_algebra_morphism": rep.is_algebra_morphism,
        "relation_holds": rep.relation_holds,
        "inner": {
            "witness": None if rep.inner_witness is None else _vector(rep.inner_witness.element.coords),
            "certified_none": search.certified_none,
            "solution_space_dim": len(search.solution_space),
        },
        "seed": args.seed,
    }
    # seeded spot check: twisting κ on the right by a unit g changes ℧ to ℧∘ad_g
    rng = random.Random(args.seed)
    passed = 0
    for _ in range(args.samples):
        g = random_unit(A, rng)
        k2 = Pairing(k.carrier, compose(k.kappa, tensor(A.id, right_action(g.element))))
        if nakayama(A, k2, search_inner=False).naka == compose(rep.naka, ad(g)):
            passed += 1
    out["twist_samples"] = {"count": args.samples, "passed": passed}
    if args.symmetrize:
        k_sym = symmetrize(A, k)
        out["symmetrized_kappa"] = None if k_sym is None else _matrix(k_sym.gram())
    if not (rep.relation_holds and rep.is_algebra_morphism and passed == args.samples):
        raise Failure("Nakayama automorphism failed its consistency checks", out)
    return out


# entry point -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for randomized checks (default {DEFAULT_SEED})")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help=f"output path (default: under ${OUT_DIR_ENV} or the working directory)")

    parser = _Parser(prog="frobcat", description="Frobenius algebra toolkit over the rationals.")
    parser.add_argument("--version", action="version", version=f"frobcat {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", parents=[common], help="write a zoo algebra to a file")
    p.add_argument("kind", choices=("matrix", "group", "quantum_plane", "canonical_dual"))
    p.add_argument("params", nargs="*", help="key=value, e.g. n=2, cyclic=3, symmetric=3, q=1/2, dim=2")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", parents=[common], help="validate every block of a file")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("convert", parents=[common], help="change Frobenius presentation")
    p.add_argument("path")
    p.add_argument("--from", dest="src", choices=PRESENTATIONS, required=True)
    p.add_argument("--to", dest="dst", choices=PRESENTATIONS, required=True)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("nakayama", parents=[common], help="Nakayama automorphism and innerness")
    p.add_argument("path")
    p.add_argument("--symmetrize", action="store_true")
    p.add_argument("--samples", type=int, default=5, help="seeded unit twists to spot-check")
    p.set_defaults(func=cmd_nakayama)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    fmt = "json"
    command = None
    out_path: Optional[Path] = None
    try:
        args = build_parser().parse_args(argv)
        fmt, command = args.format, args.command
        if command in ("check", "nakayama") and args.out:
            out_path = Path(args.out)
        body = args.func(args)
        code, reason = 0, None
    except UsageError as exc:
        body, code, reason = {}, 2, str(exc)
    except FileFormatError as exc:
        body, code, reason = {}, 2, f"parse error: {exc}"
    except Failure as exc:
        body, code, reason = exc.extra, 1, str(exc)
    report = {"schema_version": SCHEMA_VERSION, "command": command, "ok": code == 0, "reason": reason, **body}
    _emit(report, fmt, out_path, _summary)
    if fmt == "json":
        # short human-readable line on a separate stream; stdout stays pure JSON
        status = "ok" if code == 0 else f"exit {code}: {reason}"
        print(f"frobcat {command or ''}: {status}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
