import json

import pytest

from galspec.catalog import catalog, format_report, lookup, reproduce
from galspec.cli import main
from galspec.poly import parse_bipoly, parse_unipoly


def test_catalog_entries():
    names = [e.name for e in catalog()]
    assert names == ["s5-p5", "psl2f7-p7", "psl2f7-lsy", "psl2f11-p11", "a6-seed"]
    s5 = lookup("s5-p5")
    assert str(s5.bipoly) == "Y^5 - Y^4 - T" and s5.target_p == 5
    a6 = lookup("a6-seed")
    assert a6.unipoly == parse_unipoly("Y^4 + 5*Y^2 + 4") and a6.bipoly is None
    assert lookup("nonexistent") is None
    for e in catalog():
        assert (e.bipoly is None) != (e.unipoly is None)
        assert e.non_pgl2c and e.non_pgl2c_reason


@pytest.mark.parametrize("entry", [e for e in catalog() if e.bipoly is not None], ids=lambda e: e.name)
def test_catalog_roundtrip(entry):
    assert parse_bipoly(str(entry.bipoly)) == entry.bipoly


def test_reproduce_all_match():
    checks = reproduce("all")
    assert all(c.match for c in checks)
    assert all(c.sign in (1, None) for c in checks)
    assert {c.entry for c in checks} == {e.name for e in catalog()}
    with pytest.raises(KeyError):
        reproduce("nope")


def test_reproduce_a6():
    by_label = {c.label: c for c in reproduce("a6-seed")}
    assert by_label["disc(f)"].computed == "5184"
    assert by_label["disc(f) is a square"].computed == "True"
    assert by_label["real roots of f"].computed == "0"


def test_report_is_stable():
    assert format_report(reproduce("all")) == format_report(reproduce("all"))


@pytest.fixture
def s5file(tmp_path):
    f = tmp_path / "s5.poly"
    f.write_text("# the quintic family\nY^5 - Y^4 - T\n")
    return str(f)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_disc_reduce_branch(capsys, s5file):
    assert run(capsys, "disc", s5file)[:2] == (0, "3125*T^4 + 256*T^3\n")
    assert run(capsys, "reduce", s5file, "-p", "2")[1] == "Y^5 + Y^4 + T\n"
    code, out, _ = run(capsys, "branch", s5file, "-p", "5")
    assert code == 0
    assert "branch_bound\t3" in out and "excluded_residues\t0,inf" in out


def test_cli_meets_search_imaginary(capsys, s5file):
    assert run(capsys, "meets", s5file, "-p", "5", "-t", "1")[1] == "false\n"
    assert run(capsys, "meets", s5file, "-p", "5", "-t", "inf")[1] == "true\n"
    assert run(capsys, "search-t0", s5file, "-p", "5")[1] == "1\n"
    assert run(capsys, "imaginary", s5file, "-t", "1")[1] == "0\n"


def test_cli_sturm(capsys, tmp_path):
    f = tmp_path / "u.poly"
    f.write_text("(Y^2 + 1)*(Y^2 + 4)")
    assert run(capsys, "sturm", str(f))[:2] == (0, "0\n")


def test_cli_galois_id(capsys, s5file):
    code, out, _ = run(capsys, "galois-id", s5file, "-t", "2", "--rigorous", "--primes", "500")
    assert code == 0 and out.startswith("rigorous\tS5")
    code, out, _ = run(capsys, "galois-id", s5file, "-t", "1", "--rigorous", "--primes", "500")
    assert code == 1 and "inconclusive" in out
    code, out, _ = run(capsys, "galois-id", s5file, "-t", "3", "--primes", "3000")
    assert code == 0 and "matched\tS5" in out


def test_cli_certify_and_reproduce(capsys, tmp_path):
    out_file = tmp_path / "s5-p5.cert"
    assert run(capsys, "certify", "s5-p5", "-o", str(out_file))[0] == 0
    assert json.loads(out_file.read_text())["verdict"] is True
    code, out, _ = run(capsys, "reproduce", "all")
    assert code == 0 and "MISMATCH" not in out


def test_cli_errors(capsys, tmp_path):
    assert run(capsys, "reproduce", "nope")[0] == 2
    assert run(capsys, "certify", "nope")[0] == 2
    assert run(capsys, "disc", str(tmp_path / "missing.poly"))[0] == 2
    bad = tmp_path / "bad.poly"
    bad.write_text("Y^2 +")
    assert run(capsys, "disc", str(bad))[0] == 2
    assert run(capsys, "certify", "a6-seed")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["meets"])
    assert exc.value.code == 2
