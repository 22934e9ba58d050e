"""Lossless CSV round trips."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as hyp

from wealthsim.errors import ParseError
from wealthsim.tableio import format_value, read_table, write_table


def test_format_value_cases():
    assert format_value(7) == "7"
    assert format_value(np.int64(-12)) == "-12"
    assert format_value(2**63 - 1) == "9223372036854775807"
    assert format_value(1.0) == "1.0"
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(1e300) == "1.0000000000000001e+300"
    assert float(format_value(1e300)) == 1e300
    assert format_value(float("nan")) == "nan"
    assert format_value(float("inf")) == "inf"
    assert format_value("rank_1") == "rank_1"


def test_round_trip_preserves_values_and_dtypes(tmp_path):
    path = tmp_path / "t.csv"
    t = np.arange(0, 150, 30, dtype=np.int64)
    w = np.array([1000.0, 999.99999999999989, 1e-300, 6.0064911319545377e-4,
                  123456789.12345679])
    names = np.array(["alpha", "beta_2", "gamma-3", "d", "e"], dtype=str)
    write_table(path, ["t", "w", "name"], [t, w, names],
                {"seed": "17", "units": "t=days"})
    meta, header, cols = read_table(path)
    assert meta == {"seed": "17", "units": "t=days"}
    assert header == ["t", "w", "name"]
    assert cols["t"].dtype == np.int64
    np.testing.assert_array_equal(cols["t"], t)
    assert cols["w"].dtype == np.float64
    np.testing.assert_array_equal(cols["w"], w)  # bitwise, not approx
    assert list(cols["name"]) == list(names)


def test_integral_floats_stay_floats(tmp_path):
    path = tmp_path / "t.csv"
    write_table(path, ["x"], [np.array([1.0, 2.0, 3.0])], {})
    _, _, cols = read_table(path)
    assert cols["x"].dtype == np.float64
    np.testing.assert_array_equal(cols["x"], [1.0, 2.0, 3.0])


def test_big_integers_survive(tmp_path):
    # 64-bit seeds exceed float64's mantissa; they must not go through float
    path = tmp_path / "t.csv"
    vals = np.array([2**62 + 1, -(2**61 + 7)], dtype=np.int64)
    write_table(path, ["seed"], [vals], {})
    _, _, cols = read_table(path)
    assert cols["seed"].dtype == np.int64
    np.testing.assert_array_equal(cols["seed"], vals)


@settings(max_examples=200, deadline=None)
@given(hyp.lists(hyp.floats(allow_nan=False, width=64), min_size=1, max_size=40))
def test_float_round_trip_is_bitwise(tmp_path_factory, xs):
    path = tmp_path_factory.getbasetemp() / "prop.csv"
    arr = np.array(xs, dtype=np.float64)
    write_table(path, ["x"], [arr], {})
    _, _, cols = read_table(path)
    np.testing.assert_array_equal(cols["x"], arr)


def test_write_validation(tmp_path):
    path = tmp_path / "t.csv"
    with pytest.raises(ValueError):
        write_table(path, ["a", "b"], [np.arange(3)], {})
    with pytest.raises(ValueError):
        write_table(path, ["a", "b"], [np.arange(3), np.arange(4)], {})
    with pytest.raises(ValueError):
        write_table(path, ["a"], [np.zeros((2, 2))], {})


def test_reader_reports_ragged_rows_with_line_numbers(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("# seed: 1\na,b\n1,2\n3\n4,5,6\n7,8\n", encoding="utf-8")
    with pytest.raises(ParseError) as ei:
        read_table(path)
    msgs = ei.value.problems
    assert len(msgs) == 2
    assert "line 4" in msgs[0] and "got 1" in msgs[0]
    assert "line 5" in msgs[1] and "got 3" in msgs[1]


def test_reader_requires_header(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("# only: metadata\n\n", encoding="utf-8")
    with pytest.raises(ParseError) as ei:
        read_table(path)
    assert any("no header" in p for p in ei.value.problems)


def test_blank_lines_and_late_comments_ignored(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("# k: v\n\nx,y\n1,2\n# trailing note\n3,4\n", encoding="utf-8")
    meta, header, cols = read_table(path)
    assert meta == {"k": "v"}
    np.testing.assert_array_equal(cols["x"], [1, 3])
    np.testing.assert_array_equal(cols["y"], [2, 4])


def test_empty_table_round_trip(tmp_path):
    path = tmp_path / "t.csv"
    write_table(path, ["a", "b"], [np.array([]), np.array([])], {"n": "0"})
    meta, header, cols = read_table(path)
    assert header == ["a", "b"]
    assert cols["a"].size == 0
