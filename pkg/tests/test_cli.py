import json

import pytest

from betafin.cli import main, parse_element, parse_poly
from betafin.field import make_field


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_poly_symbolic():
    f = parse_poly("x^3-4x^2+4x-2")
    assert f.coeffs == (2, -4, 4)
    assert parse_poly("x^3-x^2-x-1").coeffs == (1, 1, 1)
    assert parse_poly("x^3-x-1").coeffs == (1, 1, 0)
    assert parse_poly("x^2-3x+1").coeffs == (-1, 3)


def test_parse_poly_comma_form():
    # low-to-high coefficients of the monic polynomial itself
    f = parse_poly("-2,4,-4,1")
    assert f.coeffs == (2, -4, 4)
    with pytest.raises(ValueError):
        parse_poly("-2,4,-4,2")


def test_parse_element_forms():
    f = make_field((2, -4, 4))
    assert parse_element(f, "1") == f.one()
    assert parse_element(f, "1/2,3") == f.from_coords(("1/2", 3, 0))
    # digit-word literal with exponent: beta^2 * nu(1 0 (1))
    x = parse_element(f, "2: 1 0 (1)")
    from betafin.expansion import nu
    from betafin.words import parse_word

    assert x == f.beta_power(2) * nu(f, parse_word("1 0 (1)"))


def test_expand_command(capsys):
    code, out, _ = run(capsys, "expand", "--poly", "x^3-4x^2+4x-2", "--x", "1")
    assert code == 0
    assert "L(x)          1" in out
    assert "digits        1" in out
    assert "finite        True" in out

    code, out, _ = run(capsys, "expand", "--poly", "x^3-x^2-x-1", "--x", "1")
    assert code == 0
    assert "d_beta(1)     1 1 1" in out


def test_expand_family_example(capsys):
    # the nonfinite element of the t=2 family member, given by coordinates
    t = 2
    f = parse_poly("x^3-4x^2+4x-2")
    bi = f.beta_inverse()
    x = (
        f.from_rational(2 * t - 2) + (2 * t - 2) * bi + (t - 1) * bi**2
        + (t - 1) * bi**4 + (t - 1) * bi**5 + (t - 1) * bi**6
    )
    coords = ",".join(str(c) for c in x.coords)
    code, out, _ = run(
        capsys, "expand", "--poly", "x^3-4x^2+4x-2", "--x-coords=" + coords,
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["L"] == 2
    assert data["word"] == "1 0 0 0 0 0 2 0 (1)"
    assert data["finite"] is False
    assert data["admissible"] is True
    assert data["reconstruction_ok"] is True


def test_srs_commands(capsys):
    code, out, _ = run(capsys, "srs", "qset", "--poly", "x^3-5x^2+5x-3")
    assert code == 0 and out.startswith("#Q = 43")

    code, out, _ = run(capsys, "srs", "pset", "--poly", "x^3-4x^2+4x-2", "--format", "json")
    assert code == 0 and json.loads(out) == {"p_set": [[1, 1]]}

    code, out, _ = run(capsys, "srs", "fcheck", "--poly", "x^3-4x^2+4x-2", "--vec", "1,1")
    assert code == 0 and "not in F_beta (cycle)" in out
    code, out, _ = run(capsys, "srs", "fcheck", "--poly", "x^3-4x^2+4x-2", "--vec", "0,1")
    assert code == 0 and "in F_beta" in out

    code, out, _ = run(capsys, "srs", "graph", "--poly", "x^3-4x^2+4x-2", "--format", "dot")
    assert code == 0 and out.startswith("digraph srs {")
    assert '"1,1" -> "1,1";' in out

    code, out, _ = run(capsys, "srs", "graph", "--poly", "x^3-4x^2+4x-2", "--format", "json")
    data = json.loads(out)
    assert len(data["nodes"]) == 27


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "--poly", "x^3-6x^2+6x-3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["F1"] == "proven" and data["PF"] == "refuted"

    code, out, _ = run(capsys, "classify", "--poly", "x^3-x^2-x-1")
    assert code == 0 and "F      proven" in out

    code, out, _ = run(capsys, "classify", "--poly", "x^3-3x^2-x+1", "--format", "json")
    assert json.loads(out)["F1"] == "refuted"


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify-family", "--t-min", "2", "--t-max", "3")
    assert code == 0
    assert "t=2: PASS" in out and "t=3: PASS" in out

    code, out, _ = run(
        capsys, "verify-family", "--t-min", "2", "--t-max", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data[0]["pass"] is True
    assert data[0]["checks"]["Q is the 27-vector set"] is True


def test_verify_family_rejects_t1(capsys):
    code, _, err = run(capsys, "verify-family", "--t-min", "1", "--t-max", "3")
    assert code == 2
    assert "t-min" in err


def test_error_exit_codes(capsys):
    code, _, err = run(capsys, "classify", "--poly", "x^2-3x+2")
    assert code == 1 and "Reducible" in err
    code, _, err = run(capsys, "expand", "--poly", "x^3-4x^2+4x-2")
    assert code == 2


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"poly": "x^3-x^2-x-1", "format": "json"}))
    code, out, _ = run(capsys, "--config", str(cfg), "classify")
    assert code == 0
    assert json.loads(out)["F"] == "proven"
    # explicit flags win over the config file
    code, out, _ = run(capsys, "--config", str(cfg), "classify", "--poly", "x^3-4x^2+4x-2")
    assert json.loads(out)["PF"] == "refuted"


def test_expand_determinism(capsys):
    args = ("expand", "--poly", "x^3-4x^2+4x-2", "--x", "3", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
