from __future__ import annotations

import json
import subprocess
import sys

import pytest

from catwords import cli, schemas


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--avoid", "!=,>", "--length", "4")
    assert code == 0
    words = out.split()
    assert len(words) == 9 and "0110" in words


def test_enumerate_constant_class(capsys):
    code, out, _ = run(capsys, "enumerate", "--avoid", "<=,>=", "--length", "5")
    assert code == 0 and len(out.splitlines()) == 2


def test_enumerate_empty_word(capsys):
    code, out, _ = run(capsys, "enumerate", "--avoid", "=,>=", "--length", "0")
    assert code == 0 and out == "\n"


def test_enumerate_unicode_alias(capsys):
    _, plain, _ = run(capsys, "enumerate", "--avoid", "≠,>", "--length", "4")
    _, ascii_, _ = run(capsys, "enumerate", "--avoid", "!=,>", "--length", "4")
    assert plain == ascii_


@pytest.mark.parametrize("pair,to,expected", [
    (">,!=", "10", "1,2,5,13,34,90,242,660,1821,5073"),
    ("!=,<", "10", "1,2,4,8,17,37,82,185,423,978"),
    ("=,=", "1", "1"),
])
def test_count(capsys, pair, to, expected):
    code, out, _ = run(capsys, "count", "--avoid", pair, "--to", to)
    assert code == 0 and out.strip() == expected


def test_count_by_descents(capsys):
    code, out, _ = run(capsys, "count", "--avoid", ">=,<", "--to", "5", "--by-descents", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,k,count"
    assert lines[-3:] == ["5,0,5", "5,1,10", "5,2,1"]


def squash(text):
    return "".join(text.split())


@pytest.mark.parametrize("argv,expected", [
    (["--avoid", "!=,>", "--order", "6"], "+(8+y)x^4+(16+6y)x^5+(32+24y)x^6"),
    (["--avoid", ">=,!=", "--what", "descent-total", "--order", "9"], "x^3+3x^4+6x^5+10x^6+15x^7+21x^8+28x^9"),
    (["--avoid", "<=,>", "--order", "3"], "1+x+2x^2+4x^3"),
])
def test_series(capsys, argv, expected):
    code, out, _ = run(capsys, "series", *argv)
    assert code == 0
    assert squash(out).endswith(expected)


def test_series_both_reports_agreement(capsys):
    code, out, _ = run(capsys, "series", "--avoid", "=,>=", "--order", "10", "--method", "both")
    assert code == 0
    assert out.splitlines()[-1] == "closed form and fixed point agree to order 10"


def test_series_univariate_for_count_only_family(capsys):
    code, out, _ = run(capsys, "series", "--avoid", "=,=", "--what", "univariate", "--order", "4",
                       "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["method"] == "formula"


@pytest.mark.parametrize("argv", [
    ["series", "--avoid", "<=,>=", "--what", "bivariate"],
    ["series", "--avoid", ">=,>=", "--method", "fixpoint"],
    ["series", "--avoid", "=,=", "--what", "descent-total"],
])
def test_not_available_exit_code(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 4 and out == "" and "not available" in err


@pytest.mark.parametrize("argv", [
    ["enumerate", "--avoid", "x,<", "--length", "3"],
    ["count", "--avoid", "<", "--to", "3"],
    ["series", "--avoid", "<,<", "--order", "65"],
    ["bijection", "--name", "phi_geq_geq", "--apply", "0,2"],
    ["bijection", "--name", "phi_geq_geq", "--apply", "000"],
    ["bijection", "--name", "nope", "--apply", "0"],
    ["dyck", "--path", "UDD"],
])
def test_bad_input_exit_code(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_cap_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("CATALAN_AVOID_CAP", "6")
    code, out, err = run(capsys, "count", "--avoid", "=,=", "--to", "7")
    assert code == 3 and out == ""
    code, out, _ = run(capsys, "count", "--avoid", "=,=", "--to", "7", "--unsafe-cap")
    assert code == 0


def test_bijection_apply(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "rewrite_eqne", "--apply", "0,1,0,1,2,3,2,3,4,1,2,3,0,0")
    assert code == 0 and out.strip() == "0,0,1,0,1,2,3,2,3,4,1,2,3,0"
    code, out, _ = run(capsys, "bijection", "--name", "phi_geq_geq", "--apply", "0")
    assert code == 0 and out.strip() == "0"


def test_bijection_verify(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "phi_geq_geq", "--verify", "--to", "9")
    assert code == 0 and out.splitlines()[-1] == "phi_geq_geq: all checks pass for n <= 9"


def test_bijection_verify_strict_fails(capsys):
    code, out, _ = run(capsys, "bijection", "--name", "phi_geq_geq", "--verify", "--to", "5", "--strict")
    assert code == 1 and "totality" in out


def test_dyck(capsys):
    assert run(capsys, "dyck", "--word", "0121")[1].strip() == "UUUDDUDD"
    assert run(capsys, "dyck", "--path", "UUDUDD")[1].strip() == "011"
    code, out, _ = run(capsys, "dyck", "--avoid-factor", "DUDU", "--to", "10")
    assert out.strip() == "1,1,2,4,10,26,72,206,606,1820,5558"


def test_conformance_small(capsys):
    code, out, _ = run(capsys, "conformance", "--to", "3", "--order", "6")
    assert code == 0
    assert out.startswith("# Conformance report")
    assert "F_{n+1} (Fibonacci number)" in out


@pytest.mark.parametrize("argv,schema", [
    (["enumerate", "--avoid", "!=,>", "--length", "4"], "words"),
    (["count", "--avoid", ">,!=", "--to", "6"], "counts"),
    (["count", "--avoid", ">,!=", "--to", "6", "--by-descents"], "distribution"),
    (["series", "--avoid", "!=,!=", "--order", "8", "--method", "both"], "series"),
    (["bijection", "--name", "psi_geq_gt", "--verify", "--to", "6"], "verification"),
    (["bijection", "--name", "psi_geq_gt", "--apply", "0123"], "mapped"),
    (["dyck", "--word", "0101"], "dyck"),
    (["dyck", "--avoid-factor", "UDU", "--to", "5"], "dyck"),
    (["families"], "registry"),
    (["conformance", "--to", "3", "--order", "6"], "conformance"),
])
def test_json_outputs_validate(capsys, argv, schema):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    schemas.validate(json.loads(out), schema)


@pytest.mark.parametrize("fmt", ["plain", "json", "csv", "md"])
def test_output_is_deterministic(capsys, fmt):
    argv = ["count", "--avoid", "!=,!=", "--to", "7", "--by-descents", "--format", fmt]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "series.txt"
    code, out, _ = run(capsys, "series", "--avoid", "<=,>", "--order", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert squash(target.read_text()) == "1+x+2x^2+4x^3"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "catwords.cli", "count", "--avoid", "<,>=", "--to", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1,2,3,4,5"
