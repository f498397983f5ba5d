import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import cyc
from hurwitz_slopes.cli import run
from hurwitz_slopes.notation import (
    ParseError,
    format_rational,
    parse_cycle_type,
    parse_permutation,
    parse_profile,
    parse_tuple,
)
from hurwitz_slopes.perm import CycleType, Permutation
from fractions import Fraction

EX = ["--degree", "4", "--profile", "4|4|3,1|3,1"]
R1 = "(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)"


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_permutation_examples():
    assert parse_permutation("(1 2 3 4)", 4) == cyc((1, 2, 3, 4), d=4)
    assert parse_permutation("id", 5) == Permutation.identity(5)
    p = parse_permutation("(1 2)(3 4)", 6)
    assert p == cyc((1, 2), (3, 4), d=6) and p(5) == 5 and p(6) == 6
    assert parse_permutation("(1,2,3)", 3) == cyc((1, 2, 3), d=3)


@pytest.mark.parametrize(
    "text, pos",
    [("(1 2)(2 3)", 6), ("(1 5)", 3), ("(1 2", 4), ("(1 x)", 3), ("1 2", 0), ("()", 1), ("", 0)],
)
def test_parse_permutation_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_permutation(text, 4)
    assert exc.value.position == pos


def test_parse_cycle_type_and_profile():
    assert parse_cycle_type("3", 4) == CycleType((3, 1))
    assert parse_cycle_type("2^3", 6) == CycleType((2, 2, 2))
    with pytest.raises(ValueError):
        parse_cycle_type("5", 4)
    p = parse_profile("4|4|3|3,1", 4)
    assert str(p) == "4|4|3,1|3,1"
    with pytest.raises(ValueError):
        parse_profile("4|4|3", 4)


def test_parse_tuple():
    r = parse_tuple(R1, 4)
    assert str(r) == R1
    with pytest.raises(ValueError):
        parse_tuple("(1 2);(1 2);(1 2);id", 2)


def test_format_rational():
    assert format_rational(Fraction(46, 5)) == "46/5"
    assert format_rational(Fraction(12, 1)) == "12"
    assert format_rational(Fraction(-17, 12)) == "-17/12"


def test_slope_example():
    code, out, _ = _run("slope", *EX)
    assert code == 0
    assert '"slope":"46/5"' in out
    data = json.loads(out)
    for key in ("degree", "profile", "orbit_size", "delta", "delta_prime", "deg_lambda", "deg_delta", "slope", "warnings"):
        assert key in data
    assert [o["orbit_size"] for o in data["orbits"]] == [6, 2]


def test_cyclic_example():
    code, out, _ = _run("cyclic", "--d", "5", "--exponents", "1,4,1,4")
    assert code == 0
    assert '"slope":"17/2"' in out and '"lyapunov_sum":"12/5"' in out


def test_dejonquieres_example():
    code, out, _ = _run("dejonquieres", "--genus", "2", "--zeros", "1,3")
    assert code == 0 and json.loads(out)["count"] == 18
    code, out, _ = _run("dejonquieres", "--genus", "2", "--zeros", "1,3", "--output", "text")
    assert out.strip() == "18"


def test_enumerate_and_orbits():
    code, out, _ = _run("enumerate", *EX)
    assert code == 0 and json.loads(out)["count"] == 8
    code, out, _ = _run("orbits", *EX, "--seed", R1)
    data = json.loads(out)
    assert code == 0 and [o["size"] for o in data["orbits"]] == [6]


def test_degenerate():
    code, out, _ = _run("degenerate", "--degree", "4", "--tuple", R1, "--direction", "3")
    data = json.loads(out)
    assert code == 0
    assert data["delta"] == "3" and data["delta_prime"] == "4" and data["rational_tails"] == 1


def test_stratum_csv_columns():
    code, out, _ = _run("stratum", "--nu", "1,1,1,1", "--d-values", "10,12", "--output", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["d", "N", "delta", "slope", "sv_estimate", "orbit_count", "skipped_reason"]
    assert rows[1][0] == "10" and rows[1][-1]
    assert rows[2] == ["12", "39", "247", "19/2", "19/18", "13", ""]


def test_no_floats_in_json():
    _, out, _ = _run("slope", *EX)

    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    walk(json.loads(out))


@pytest.mark.parametrize(
    "argv",
    [
        ["slope", *EX],
        ["orbits", *EX, "--output", "text"],
        ["stratum", "--nu", "1,1,1,1", "--d-values", "12"],
        ["cyclic", "--d", "6", "--exponents", "1,1,2,2", "--output", "csv"],
    ],
)
def test_outputs_are_deterministic(argv):
    assert _run(*argv)[1] == _run(*argv)[1]


def test_parallel_gives_same_output():
    assert _run("slope", *EX)[1] == _run("slope", *EX, "--parallel", "2")[1]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["enumerate", "--degree", "4"], 2),
        (["slope", "--degree", "4", "--profile", "4|4|(3|3"], 2),
        (["degenerate", "--degree", "4", "--tuple", R1, "--direction", "5"], 2),
        (["nosuch"], 2),
        (["cyclic", "--d", "5", "--exponents", "1,2,1,2"], 1),
        (["dejonquieres", "--genus", "2", "--zeros", "1,1"], 1),
        (["degenerate", "--degree", "4", "--tuple", "(1 2);(1 2);(1 2);id", "--direction", "3"], 1),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = _run(*argv)
    assert got == code
    assert err


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "hurwitz_slopes", "dejonquieres", "--genus", "2", "--zeros", "4"],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0 and json.loads(p.stdout)["count"] == 32
