import json
import os
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symres import cli
from symres.errors import InputError
from symres.jsonio import (
    SchemaError,
    decode_coeff,
    decode_pair,
    decode_poly,
    decode_toeplitz,
    dumps,
    encode_coeff,
    encode_pair,
    encode_poly,
    encode_toeplitz,
    write_atomic,
)
from symres.poly import SymPoly
from symres.ring import Gaussian
from symres.selftest import corrupted_recurrence
from symres.ssr_oracle import subresultant_sequence_det
from symres.toeplitz import ToeplitzSpec

from conftest import pairs

ints = st.integers(-10**30, 10**30)
rats = st.fractions(max_denominator=10**6)
gauss = st.builds(Gaussian, ints, ints)
gaussrats = st.builds(Gaussian, rats, rats)


def roundtrip(obj):
    return json.loads(json.dumps(obj))


# ------------------------------------------------------------------- jsonio


@given(st.one_of(ints, rats, gauss, gaussrats))
def test_coeff_roundtrip(x):
    back = decode_coeff(roundtrip(encode_coeff(x)))
    assert back == x
    if isinstance(x, Fraction):
        assert isinstance(back, Fraction)


def test_coeff_encodings():
    assert encode_coeff(-12) == "-12"
    assert encode_coeff(Fraction(3, 4)) == {"num": "3", "den": "4"}
    assert encode_coeff(Gaussian(1, -2)) == {"re": "1", "im": "-2"}
    assert encode_coeff(3, "gauss") == {"re": "3", "im": "0"}
    assert decode_coeff(7) == 7


@pytest.mark.parametrize("bad, path", [
    (1.5, "$"), (True, "$"), ("x1", "$"),
    ({"num": "1"}, "$"), ({"num": "1", "den": "0"}, "$.den"),
    ({"re": "1"}, "$"), ({"re": "1", "im": [1]}, "$.im"),
])
def test_coeff_rejects(bad, path):
    with pytest.raises(SchemaError) as info:
        decode_coeff(bad)
    assert info.value.path == path


@given(pairs(6))
def test_pair_roundtrip(pair):
    A, B = pair
    A2, B2 = decode_pair(roundtrip(encode_pair(A, B)))
    assert (A2, B2) == (A, B)
    assert A2.formal_degree == A.formal_degree and B2.formal_degree == B.formal_degree


@given(pairs(5, gaussian=True))
def test_gaussian_pair_roundtrip(pair):
    assert decode_pair(roundtrip(encode_pair(*pair))) == pair


def test_poly_schema():
    P = decode_poly({"coeffs": ["1", "2", "0"], "formal_degree": 4})
    assert P.formal_degree == 4 and P.degree == 1
    assert decode_poly({"coeffs": ["1", "2"]}, ring="gauss")[1] == Gaussian(2, 0)
    with pytest.raises(SchemaError, match="formal_degree"):
        decode_poly({"coeffs": ["1", "2"], "formal_degree": 0})
    with pytest.raises(SchemaError, match=r"\$.coeffs\[1\]"):
        decode_poly({"coeffs": ["1", 2.0]})
    with pytest.raises(SchemaError, match="do not fit"):
        decode_poly({"coeffs": [{"re": "1", "im": "1"}]}, ring="int")
    with pytest.raises(SchemaError, match="unknown ring"):
        decode_poly({"coeffs": ["1"], "ring": "reals"})
    with pytest.raises(SchemaError):
        decode_pair({"A": {"coeffs": ["1"]}})


@given(st.integers(1, 6), st.data())
def test_toeplitz_roundtrip(d, data):
    diags = tuple(data.draw(st.one_of(ints, gauss)) for _ in range(2 * d - 1))
    T = ToeplitzSpec(d, diags)
    assert decode_toeplitz(roundtrip(encode_toeplitz(T))) == T


def test_toeplitz_schema():
    with pytest.raises(SchemaError, match="expected 3 entries"):
        decode_toeplitz({"d": 2, "diagonals": ["1", "2"]})
    with pytest.raises(SchemaError, match="hermitian"):
        decode_toeplitz({"d": 1, "diagonals": ["1"], "hermitian": "yes"})
    with pytest.raises(SchemaError):
        decode_toeplitz({"d": 2, "diagonals": ["1", "2", "3"], "hermitian": True})


def test_atomic_write_leaves_no_temporaries(tmp_path):
    target = tmp_path / "out.json"
    target.write_text("old")
    write_atomic(str(target), "new\n")
    assert target.read_text() == "new\n"
    assert os.listdir(tmp_path) == ["out.json"]


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [2]}) == '{\n  "a": [\n    2\n  ],\n  "b": 1\n}\n'


# ---------------------------------------------------------------------- cli


@pytest.fixture
def pair_file(tmp_path):
    def make(A, B):
        path = tmp_path / "pair.json"
        path.write_text(json.dumps(encode_pair(SymPoly(A), SymPoly(B))))
        return str(path)
    return make


@pytest.fixture
def toeplitz_file(tmp_path):
    def make(d, diags, hermitian=False):
        path = tmp_path / "t.json"
        path.write_text(json.dumps({"d": d, "diagonals": [str(c) for c in diags],
                                    "hermitian": hermitian}))
        return str(path)
    return make


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ssr_report(capsys, pair_file):
    path = pair_file([1, 2, 3, 4], [2, -1, 5, 1])
    code, out, _ = run_cli(capsys, "ssr", "--in", path)
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"version", "command", "ring", "result", "timing"}
    assert rep["ring"] == "int"
    last = rep["result"]["sequence"][-1]
    ref = subresultant_sequence_det(SymPoly([1, 2, 3, 4]), SymPoly([2, -1, 5, 1]))[-1]
    assert last["j"] == 3 and last["S_j"]["coeffs"] == [str(c) for c in ref.coeffs]


def test_ssr_matches_oracle_command(capsys, pair_file):
    path = pair_file([3, 0, 1, -2, 5], [1, 1, 0, 4, -1])
    _, fast, _ = run_cli(capsys, "ssr", "--in", path, "--no-timing")
    _, slow, _ = run_cli(capsys, "ssr-oracle", "--in", path, "--no-timing")
    got = {e["j"]: e["S_j"]["coeffs"] for e in json.loads(fast)["result"]["sequence"]}
    for e in json.loads(slow)["result"]:
        if e["j"] in got:
            assert got[e["j"]] == e["S_j"]["coeffs"]


def test_output_is_byte_stable(capsys, pair_file, tmp_path):
    path = pair_file([1, -2, 0, 3], [4, 1, 1, 2])
    outs = []
    for i in range(2):
        target = str(tmp_path / f"r{i}.json")
        assert run_cli(capsys, "fssr", "--in", path, "--emit", "matrix", "--no-timing",
                       "--out", target)[0] == 0
        outs.append(open(target, "rb").read())
    assert outs[0] == outs[1]
    assert "timing" not in json.loads(outs[0])


def test_fssr_constant_terms_agree_with_ssr(capsys, pair_file):
    path = pair_file([2, 1, -3, 0, 1, 1], [1, 0, 2, 2, -1, 3])
    _, out, _ = run_cli(capsys, "ssr", "--in", path, "--constant-terms-only")
    terms = {t["j"]: t["value"] for t in json.loads(out)["result"]["constant_terms"]}
    _, out, _ = run_cli(capsys, "ssr", "--in", path, "--full")
    seq = {e["j"]: e["S_j"]["coeffs"][0] for e in json.loads(out)["result"]["sequence"]}
    assert all(terms[j] == seq[j] for j in terms if j in seq)


def test_toeplitz_commands(capsys, toeplitz_file):
    path = toeplitz_file(2, [1, 2, 1], hermitian=True)
    code, out, _ = run_cli(capsys, "toeplitz", "sig", "--in", path)
    res = json.loads(out)["result"]
    assert code == 0 and res["signature"] == 2 and res["minors"] == ["2", "3"]
    code, out, _ = run_cli(capsys, "toeplitz", "minors", "--in", path)
    assert json.loads(out)["result"]["minors"] == ["2", "3"]
    path = toeplitz_file(2, [1, 0, 2])
    code, out, _ = run_cli(capsys, "toeplitz", "inv", "--in", path, "--dense")
    res = json.loads(out)["result"]
    assert code == 0 and res["branch"] == "**"
    assert res["dense"] == [["0", {"num": "1", "den": "2"}], ["1", "0"]] or \
        res["dense"] == [[{"num": "0", "den": "1"}, {"num": "1", "den": "2"}],
                         [{"num": "1", "den": "1"}, {"num": "0", "den": "1"}]]


def test_gaussian_ring_flag(capsys, toeplitz_file):
    path = toeplitz_file(2, [1, 0, 1], hermitian=True)
    code, out, _ = run_cli(capsys, "toeplitz", "sig", "--in", path, "--ring", "gauss")
    rep = json.loads(out)
    assert code == 0 and rep["ring"] == "gauss" and rep["result"]["signature"] == 0


def test_exit_codes(capsys, toeplitz_file, pair_file, tmp_path):
    assert run_cli(capsys, "toeplitz", "inv", "--in", toeplitz_file(2, [1, 1, 1]))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"A": {"coeffs": [1.5]}, "B": {"coeffs": ["1"]}}')
    code, _, err = run_cli(capsys, "ssr", "--in", str(bad))
    assert code == 3 and "$.A.coeffs[0]" in err
    assert run_cli(capsys, "ssr", "--in", str(tmp_path / "missing.json"))[0] == 3
    assert run_cli(capsys, "frobnicate")[0] == 3
    assert run_cli(capsys, "fssr", "--in", pair_file([1, 2], [1, 1]), "--r", "0")[0] == 3
    assert run_cli(capsys, "ssr", "--in", pair_file([0, 1, 1], [0, 2, 1]))[0] == 3


def test_exactness_violation_dumps_context(capsys, pair_file):
    path = pair_file([-8, 9, -7, 7, -7, 4, -3, 8], [4, 6, 3, 9, -2, -9, -9, -4])
    with corrupted_recurrence():
        code, out, err = run_cli(capsys, "ssr", "--in", path)
    assert code == 4 and out == ""
    dump = json.loads(err)
    assert dump["error"] == "ExactnessViolation" and dump["input"]["A"]["coeffs"][0] == "-8"


def test_selftest_command(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--size", "4")
    assert code == 0 and out.count("PASS") == 6
    code, out, _ = run_cli(capsys, "selftest", "--size", "0")
    assert code == 0 and "empty corpus" in out
    code, out, _ = run_cli(capsys, "selftest", "--size", "12", "--mutate")
    assert code == 1 and "FAIL" in out


def test_corpus_command_feeds_back(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "corpus", "pair", "--d", "4", "--count", "3", "--seed", "5")
    items = json.loads(out)["result"]
    assert code == 0 and len(items) == 3
    again = json.loads(run_cli(capsys, "corpus", "pair", "--d", "4", "--count", "3",
                               "--seed", "5")[1])["result"]
    assert again == items
    path = tmp_path / "p.json"
    path.write_text(json.dumps(items[0]))
    assert run_cli(capsys, "fssr", "--in", str(path))[0] == 0


def test_bench_command(capsys):
    code, out, _ = run_cli(capsys, "bench", "fssr", "--sizes", "8,16", "--seed", "1")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "d,fssr_seconds,quadratic_seconds"
    assert lines[-1].startswith("slope,")
    assert run_cli(capsys, "bench", "fssr", "--sizes", "0")[0] == 3


def test_input_error_is_value_error():
    assert issubclass(SchemaError, InputError) and issubclass(SchemaError, ValueError)
