import json

import pytest

from vknot.catalog import (
    CatalogError,
    builtin_catalog,
    find_entry,
    loads_catalog,
    verify_entry,
)
from vknot.cli import main


def test_builtin_catalog_loads():
    entries = builtin_catalog()
    names = [e.name for e in entries]
    for expected in ("unknot", "trefoil", "figure-eight", "virtual-trefoil", "4.90", "6.87548"):
        assert expected in names
    assert find_entry("trefoil").expect("det") == 3
    assert find_entry("missing") is None


def test_golden_values_rederive():
    for entry in builtin_catalog():
        problems = verify_entry(entry)
        assert problems == [], problems


def test_mismatch_reports_provenance():
    entries = loads_catalog("fake\tO1+U2+O3+U1+O2+U3+\tdet=4,source=made-up\n")
    problems = verify_entry(entries[0])
    assert len(problems) == 1
    assert "made-up" in problems[0] and "det" in problems[0]


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("x\tO1+U1+\tdet=1,unknown=3\n", "unknown field"),
        ("x\tO1+U1+\tdet=yes\n", "integer"),
        ("x\tO1+U1-\tdet=1\n", "bad code"),
        ("x\tO1+U1+\tdet=1\nx\tO1+U1+\tdet=1\n", "duplicate"),
        ("justaname\n", "expected name"),
        ("x\tO1+U1+\tcolorable_p2=maybe\n", "true/false"),
    ],
)
def test_catalog_errors_carry_line_numbers(text, fragment):
    with pytest.raises(CatalogError) as err:
        loads_catalog(text)
    assert "line" in str(err.value)
    assert fragment in str(err.value)


def test_external_catalog_file(tmp_path):
    path = tmp_path / "mine.txt"
    path.write_text("myknot\tO1+U2+O3+U1+O2+U3+\tdet=3,source=local\n")
    assert main(["invariants", "myknot", "--catalog", str(path)]) == 0


def test_cli_invariants_trefoil(capsys):
    assert main(["invariants", "trefoil"]) == 0
    out = capsys.readouterr().out
    assert "determinant: 3" in out
    assert "v2 mod 2: 1" in out
    assert "+-3 mod 8 (consistent)" in out


def test_cli_refuses_determinant_of_noncolorable(capsys):
    assert main(["invariants", "O1+O2+U1+U2+", "-p", "2"]) == 2
    out = capsys.readouterr().out
    assert "mod 2 numberable: no" in out
    assert "determinant refused" in out


def test_cli_parse_error_exit_code(capsys):
    assert main(["invariants", "O1+X"]) == 1
    assert "parse error" in capsys.readouterr().err


def test_cli_unknown_check(capsys):
    assert main(["verify", "bogus"]) == 2
    assert "unknown check" in capsys.readouterr().err


def test_cli_json_is_stable(capsys):
    assert main(["invariants", "6.87548", "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["invariants", "6.87548", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["determinant"] == 1
    assert data["c2"] == -2
    assert data["mod8_class"] == "+-1 mod 8"
    assert data["mod8_consistent"] is True


def test_cli_verify_json(capsys):
    assert main(["verify", "cor-det", "--max-chords", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data[0]["check"] == "cor-det"
    assert data[0]["failures"] == 0


def test_cli_enumerate(capsys):
    assert main(["enumerate", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert main(["enumerate", "2", "--colorable", "2", "--limit", "3"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_cli_conway_export(capsys):
    assert main(["conway", "--degree", "2", "--variant", "ascending"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "1\tascending\tU1;O1" in lines
    assert "2\tascending\tU1O2O1U2" in lines
