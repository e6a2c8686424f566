import json

import numpy as np
import pytest

from meyerbank.serialize import (
    FormatError,
    bank_from_dict,
    bank_to_dict,
    dumps,
    read_bank,
    read_coeffs,
    read_pyramid,
    read_signal,
    write_bank,
    write_coeffs,
    write_pyramid,
    write_signal,
)
from meyerbank.transform import CoefficientSet, multilevel


def test_bank_schema_and_order(banks, tmp_path):
    p = tmp_path / "b.json"
    write_bank(banks[3], p)
    d = json.loads(p.read_text())
    assert list(d) == ["factor", "provenance", "bands"]
    assert list(d["bands"][0]) == ["band", "offset", "re", "im", "tail_energy"]
    assert d["factor"] == 3 and d["provenance"] == "direct(3)"


def test_composite_records_ordering(banks):
    d = bank_to_dict(banks["6"])
    assert d["provenance"] == "composite(3,2)" and d["ordering"] == "k*M+l"
    assert banks["6"].composite_factors == (3, 2)
    assert banks["6"].band_label(4) == "11"


def test_bank_round_trip_is_exact(banks, tmp_path):
    p = tmp_path / "b.json"
    write_bank(banks[2], p)
    back = read_bank(p)
    assert back.provenance == "classical2"
    for a, b in zip(banks[2].filters, back.filters):
        assert a.offset == b.offset and np.array_equal(a.coeffs, b.coeffs)
        assert a.tail_energy == b.tail_energy


def test_seventeen_digits():
    text = dumps({"x": [0.1, 1 / 3]})
    assert "0.10000000000000001" in text and "0.33333333333333331" in text


def test_deterministic(banks):
    assert dumps(bank_to_dict(banks[3])) == dumps(bank_to_dict(banks[3]))


@pytest.mark.parametrize(
    "payload",
    [{}, {"factor": 2}, {"factor": 2, "bands": [{"band": 0, "offset": 0, "re": [1.0], "im": []}]}],
)
def test_malformed_bank(payload):
    with pytest.raises(FormatError):
        bank_from_dict(payload)


def test_invalid_json(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{nope")
    with pytest.raises(FormatError):
        read_bank(p)


def test_coeffs_round_trip(tmp_path):
    c = CoefficientSet(2, [np.array([1 + 2j, 3.0]), np.array([0.5j, -1.0])], 4)
    p = tmp_path / "c.json"
    write_coeffs(c, p)
    d = json.loads(p.read_text())
    assert list(d) == ["factor", "bands"] and d["bands"][0][0] == [1.0, 2.0]
    back = read_coeffs(p)
    assert back.length == 4 and all(np.array_equal(a, b) for a, b in zip(c.bands, back.bands))


def test_pyramid_round_trip(banks, tmp_path):
    p = multilevel(np.arange(27.0), banks[3], 2)
    path = tmp_path / "p.json"
    write_pyramid(p, path)
    back = read_pyramid(path)
    assert back.levels == 2 and np.array_equal(back.approximation, p.approximation)


def test_signal_csv(tmp_path):
    p = tmp_path / "s.csv"
    write_signal(np.array([1.0, -0.25]), p)
    assert p.read_text() == "1\n-0.25\n"
    write_signal(np.array([1.0, 2j]), p)
    assert p.read_text().splitlines()[1] == "0,2"
    assert np.array_equal(read_signal(p), np.array([1.0, 2j]))


def test_signal_csv_errors(tmp_path):
    p = tmp_path / "s.csv"
    p.write_text("1,2,3\n")
    with pytest.raises(FormatError):
        read_signal(p)
    p.write_text("\n")
    with pytest.raises(FormatError):
        read_signal(p)
