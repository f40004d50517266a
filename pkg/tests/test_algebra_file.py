import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobcat.algebra_file import (
    FileFormatError,
    dumps,
    format_rational,
    load_package,
    loads,
    parse_rational,
)

from frobcat.frobenius import pairing_from_phi

from suite import packages


@given(st.fractions(max_denominator=10**6))
def test_rational_round_trip(x):
    s = format_rational(x)
    assert "/" in s and parse_rational(s) == x


@pytest.mark.parametrize("bad", ["1/0", "2/4", "-3/6", "x", "1.5", "1/-2", "", 3, None])
def test_bad_rationals(bad):
    with pytest.raises(FileFormatError):
        parse_rational(bad)


def test_bare_integers_accepted():
    assert parse_rational("-7") == -7
    assert parse_rational(" 3/4 ") == Fraction(3, 4)


@pytest.mark.parametrize("name", sorted(packages()))
def test_package_round_trip(name):
    pkg = packages()[name]
    text = dumps(pkg)
    again = loads(text)
    assert dumps(again) == text
    assert again.validate().passed
    assert again.algebra.structure_constants() == pkg.algebra.structure_constants()
    assert again.pairing.gram() == pkg.pairing.gram()
    # φ is compared through its pairing: the dual basis order depends on the carrier word
    assert pairing_from_phi(again.algebra, again.phi).gram() == pairing_from_phi(pkg.algebra, pkg.phi).gram()
    assert again.coalgebra.delta.matrix == pkg.coalgebra.delta.matrix


def test_selected_blocks():
    pkg = packages()["M2"]
    data = json.loads(dumps(pkg, ("kappa",)))
    assert "kappa" in data and "delta" not in data and "phi" not in data
    assert loads(dumps(pkg, ("kappa",))).coalgebra is None


def _valid():
    return json.loads(dumps(packages()["Q[Z2]"]))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("m"),
        lambda d: d.update(schema_version=99),
        lambda d: d.update(carrier_dim=3),
        lambda d: d.update(carrier_dim=True),
        lambda d: d.update(basis_labels=["a"]),
        lambda d: d.update(extra=1),
        lambda d: d.pop("eps"),
        lambda d: d["m"][0].pop(),
        lambda d: d["kappa"][0].__setitem__(0, "1/0"),
        lambda d: d.update(name=5),
    ],
)
def test_malformed_files(mutate):
    data = _valid()
    mutate(data)
    with pytest.raises(FileFormatError):
        loads(json.dumps(data))


def test_unreadable(tmp_path):
    with pytest.raises(FileFormatError):
        load_package(tmp_path / "missing.json")
    (tmp_path / "junk.json").write_text("{not json")
    with pytest.raises(FileFormatError):
        load_package(tmp_path / "junk.json")
    (tmp_path / "list.json").write_text("[]")
    with pytest.raises(FileFormatError):
        load_package(tmp_path / "list.json")
