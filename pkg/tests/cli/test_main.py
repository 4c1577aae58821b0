import hashlib
import json
import pathlib
import typing

import pytest

from quasitoric.cli import main
from quasitoric.fixtures import fixture_text


@pytest.fixture
def fixture_file(tmp_path: pathlib.Path) -> typing.Callable[[str], str]:
    def write(name: str) -> str:
        path = tmp_path / f"{name}.json"
        path.write_text(fixture_text(name), encoding="utf-8")
        return str(path)

    return write


def run(capsys: pytest.CaptureFixture, *argv: str) -> typing.Tuple[int, typing.Dict[str, typing.Any]]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_validate_accepts_projective_plane(capsys, fixture_file) -> None:
    path = fixture_file("projective_plane")
    code, report = run(capsys, "validate", "--input", path)
    assert code == 0
    assert report["command"] == ["validate", "--input", path]
    assert report["input_digest"] == hashlib.sha256(fixture_text("projective_plane").encode("utf-8")).hexdigest()
    assert report["results"] == {"ok": True, "problems": []}


def test_validate_rejects_incomplete_fan(capsys, fixture_file) -> None:
    code, report = run(capsys, "validate", "--input", fixture_file("missing_cone"))
    assert code == 2
    assert not report["results"]["ok"]
    assert any("not complete" in p for p in report["results"]["problems"])


def test_validate_rejects_dependent_functionals(capsys, fixture_file) -> None:
    code, report = run(capsys, "validate", "--input", fixture_file("dependent_lambda"))
    assert code == 2
    assert "functionals dependent on face {1,3}" in report["results"]["problems"]


def test_volpoly(capsys, fixture_file) -> None:
    code, report = run(capsys, "volpoly", "--input", fixture_file("projective_plane"))
    assert code == 0
    assert report["results"]["polynomial"] == {
        "h1^2": "1/2",
        "h1h2": "1",
        "h1h3": "1",
        "h2^2": "1/2",
        "h2h3": "1",
        "h3^2": "1/2",
    }
    assert report["results"]["translation_problems"] == []


def test_chain_uses_document_support_or_flag(capsys, fixture_file) -> None:
    path = fixture_file("projective_plane")
    code, report = run(capsys, "chain", "--input", path)
    assert code == 0
    assert report["results"]["chain_volume"] == "1/2"
    assert report["results"]["polynomial_value"] == "1/2"
    assert [r["weight"] for r in report["results"]["regions"]] == [1]

    code, report = run(capsys, "chain", "--input", path, "--h", "1,1,1")
    assert code == 0
    assert report["results"]["h"] == ["1", "1", "1"]
    assert report["results"]["chain_volume"] == "9/2"


def test_chain_rejects_wrong_support_length(capsys, fixture_file) -> None:
    code, report = run(capsys, "chain", "--input", fixture_file("projective_plane"), "--h", "1,1")
    assert code == 1
    assert report["results"]["error"] == "InputParseError"


def test_integrate(capsys, fixture_file) -> None:
    code, report = run(capsys, "integrate", "--input", fixture_file("projective_plane"), "--q", "x1 + x2")
    assert code == 0
    assert report["results"]["integral"] == "-1/3"
    assert report["results"]["boundary_integral"] == "-1/3"


def test_integrate_needs_a_polynomial(capsys, fixture_file) -> None:
    code, _ = run(capsys, "integrate", "--input", fixture_file("projective_plane"))
    assert code == 1


@pytest.mark.parametrize(
    "name, expected",
    [("projective_plane", [1, 1, 1]), ("quadrant", [1, 2, 1]), ("hirzebruch", [1, 2, 1])],
)
def test_betti(capsys, fixture_file, name: str, expected: typing.List[int]) -> None:
    code, report = run(capsys, "betti", "--input", fixture_file(name))
    assert code == 0
    assert report["results"]["macaulay"] == expected
    assert report["results"]["stanley_reisner"] == expected
    assert report["results"]["cells"] == expected
    assert report["results"]["agree"] is True


def test_cohomology(capsys, fixture_file) -> None:
    code, report = run(capsys, "cohomology", "--input", fixture_file("quadrant"))
    assert code == 0
    assert report["results"]["betti"] == [1, 2, 1]
    assert report["results"]["pairing_ok"] is True
    assert report["results"]["top_products"]["{1,3}"] == "0"


@pytest.mark.parametrize("name, spheres", [("generic_lines", 1), ("concurrent_lines", 0)])
def test_homotopy(capsys, fixture_file, name: str, spheres: int) -> None:
    code, report = run(capsys, "homotopy", "--input", fixture_file(name))
    assert code == 0
    assert report["results"]["union"]["sphere_count"] == spheres
    assert len(report["results"]["regions"]) == 6 + spheres


def test_homotopy_of_a_pair_arrangement(capsys, fixture_file) -> None:
    code, report = run(capsys, "homotopy", "--input", fixture_file("projective_plane"), "--h", "0,0,1")
    assert code == 0
    assert report["results"]["union"]["sphere_count"] == 1


def test_nerve(capsys, fixture_file) -> None:
    code, report = run(capsys, "nerve", "--input", fixture_file("generic_lines"))
    assert code == 0
    assert report["results"]["facets"] == ["{1,2}", "{1,3}", "{2,3}"]
    assert report["results"]["f_vector"] == [1, 3, 3]

    code, report = run(capsys, "nerve", "--input", fixture_file("concurrent_lines"))
    assert report["results"]["facets"] == ["{1,2,3}"]


def test_dominates(capsys, fixture_file) -> None:
    generic = fixture_file("generic_lines")
    code, report = run(capsys, "dominates", "--input", generic, "--other", generic)
    assert code == 0
    assert report["results"] == {"dominates": True, "dominated_by": True, "isomorphic": True}

    code, report = run(capsys, "dominates", "--input", generic, "--other", fixture_file("concurrent_lines"))
    assert code == 0
    assert report["results"]["isomorphic"] is False


def test_dominates_needs_other(capsys, fixture_file) -> None:
    code, report = run(capsys, "dominates", "--input", fixture_file("generic_lines"))
    assert code == 1
    assert report["results"]["message"] == "dominates needs --other"


def test_cells(capsys, fixture_file) -> None:
    code, report = run(capsys, "cells", "--input", fixture_file("octahedral"), "--seed", "3")
    assert code == 0
    assert report["results"]["cell_vector"] == [1, 3, 3, 1]


def test_bkkcheck(capsys, fixture_file) -> None:
    code, report = run(
        capsys, "bkkcheck", "--input", fixture_file("projective_plane"), "--samples", "10", "--seed", "7"
    )
    assert code == 0
    assert report["results"]["volume_routes"]["ok"] is True
    assert report["results"]["volume_routes"]["samples"] == 10
    assert report["results"]["intersection_mismatches"] == []
    assert report["results"]["n_factorial"] == 2


def test_compact_output_is_one_line(capsys, fixture_file) -> None:
    assert main(["volpoly", "--input", fixture_file("quadrant"), "--compact"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 1
    assert json.loads(out)["results"]["text"] == "h1*h2 + h1*h4 + h2*h3 + h3*h4"


def test_missing_input_file(capsys, tmp_path: pathlib.Path) -> None:
    code, report = run(capsys, "volpoly", "--input", str(tmp_path / "absent.json"))
    assert code == 1
    assert report["input_digest"] is None
    assert report["results"]["error"] == "InputParseError"


def test_malformed_document(capsys, tmp_path: pathlib.Path) -> None:
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    code, report = run(capsys, "volpoly", "--input", str(path))
    assert code == 1
    assert report["input_digest"] is not None


def test_fan_command_on_an_arrangement(capsys, fixture_file) -> None:
    code, report = run(capsys, "volpoly", "--input", fixture_file("generic_lines"))
    assert code == 1
    assert report["results"]["message"] == "volpoly needs a fan document"


def test_usage_errors_exit_with_one(capsys) -> None:
    assert main(["no-such-command"]) == 1
    assert main(["volpoly"]) == 1
    capsys.readouterr()


def test_help_exits_with_zero(capsys) -> None:
    assert main(["--help"]) == 0
    assert "volpoly" in capsys.readouterr().out


@pytest.mark.parametrize("command", ["validate", "volpoly", "betti", "cells"])
@pytest.mark.parametrize("dim", [0, -1])
def test_non_positive_dimension_is_a_parse_error(capsys, tmp_path: pathlib.Path, command: str, dim: int) -> None:
    path = tmp_path / "flat.json"
    path.write_text(json.dumps({"dim": dim, "rays": [], "cones": []}), encoding="utf-8")
    code, report = run(capsys, command, "--input", str(path))
    assert code == 1
    assert report["results"]["error"] == "InputParseError"


def test_arrangement_with_non_positive_dimension(capsys, tmp_path: pathlib.Path) -> None:
    path = tmp_path / "lines.json"
    path.write_text(json.dumps({"dim": 0, "hyperplanes": []}), encoding="utf-8")
    code, _ = run(capsys, "nerve", "--input", str(path))
    assert code == 1


def test_hyperplane_normal_of_wrong_length(capsys, tmp_path: pathlib.Path) -> None:
    path = tmp_path / "lines.json"
    document = {"dim": 2, "hyperplanes": [{"normal": [1, 0], "offset": "0"}, {"normal": [1, 1, 1], "offset": "1"}]}
    path.write_text(json.dumps(document), encoding="utf-8")
    code, report = run(capsys, "nerve", "--input", str(path))
    assert code == 1
    assert report["results"]["error"] == "InputParseError"
    assert report["results"]["message"] == "Malformed hyperplanes"
    assert report["results"]["details"] == "Arrangement members must share the ambient dimension"
