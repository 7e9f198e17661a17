import json

import pytest

from tropwall.cli import run
from tropwall.polyhedra import Fan, Polytope
from tropwall.tropical import tropicalize
from tropwall.polycore import Ideal

QUADRIC = "x^2+x*y+x*z+z^2"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_trop_toy_json(capsys):
    code, out, _ = call(capsys, "trop", "-i", "x+x*y+y")
    assert code == 0
    d = json.loads(out)
    assert d["f_vector"] == [1, 3]
    F = Fan.from_json(d)
    assert sorted(F.rays()) == [(-1, 0), (0, -1), (1, 1)]
    direct = tropicalize(Ideal.from_text("x+x*y+y", ("x", "y"))).fan
    assert set(F.maximal_cones()) == set(direct.maximal_cones())


def test_input_from_file(capsys, tmp_path):
    f = tmp_path / "q.txt"
    f.write_text(QUADRIC + "\n")
    code, out, _ = call(capsys, "gb", "-i", str(f), "--order", "lex")
    assert code == 0 and "x^2" in out


@pytest.mark.parametrize("argv, code", [
    (["gb", "-i", "0"], 2),
    (["gb", "-i", "x^^2"], 2),
    (["gb"], 2),
    (["nosuchcommand"], 2),
    (["trop", "-i", QUADRIC, "--budget", "1"], 3),
    (["initial", "-i", "x+y", "-w=1,2,3"], 1),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = call(capsys, *argv)
    assert got == code
    assert err


def test_wallcross_reports_non_adjacent_cones(capsys):
    code, _, err = call(capsys, "wallcross", "-i", QUADRIC, "--cone1", "0", "--cone2", "0")
    assert code == 1 and "coincide" in err


def test_cache_hit_is_byte_identical(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TROPWALL_CACHE", str(tmp_path / "cache"))
    _, first, _ = call(capsys, "trop", "-i", QUADRIC)
    (entry,) = list((tmp_path / "cache").iterdir())
    entry.write_text(entry.read_text())  # untouched content, new mtime
    _, second, _ = call(capsys, "trop", "-i", QUADRIC)
    assert first == second == entry.read_text()
    # a hit really is served from the cache
    entry.write_text("sentinel\n")
    _, third, _ = call(capsys, "trop", "-i", QUADRIC)
    assert third == "sentinel\n"
    _, fresh, _ = call(capsys, "trop", "-i", QUADRIC, "--no-cache")
    assert fresh == first


def test_cache_key_depends_on_input(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TROPWALL_CACHE", str(tmp_path))
    call(capsys, "parse", "-i", "x+y")
    call(capsys, "parse", "-i", "x-y")
    assert len(list(tmp_path.iterdir())) == 2


def test_quadric_plot_in_canonical_basis(capsys, tmp_path):
    plot = tmp_path / "plot.json"
    code, _, _ = call(capsys, "trop", "-i", QUADRIC, "--plot", str(plot), "--plot-basis", "canonical")
    assert code == 0
    d = json.loads(plot.read_text())
    assert d["basis"] == [[0, 1, 0], [0, 0, 1]]
    assert sorted(map(tuple, d["rays"])) == [(-2, -1), (0, 1), (1, 0)]


def test_orthogonal_plot_basis_is_orthogonal_to_lineality(capsys, tmp_path):
    plot = tmp_path / "plot.json"
    call(capsys, "trop", "-i", QUADRIC, "--plot", str(plot))
    d = json.loads(plot.read_text())
    assert d["dim"] == 2
    assert all(sum(float(a) for a in v) == 0 for v in d["basis"])


def test_nok_body_and_plot(capsys, tmp_path):
    plot = tmp_path / "body.json"
    code, out, _ = call(capsys, "nok", "-M", "[[1,1,1],[2,0,1]]", "-i", QUADRIC, "--plot", str(plot))
    assert code == 0
    d = json.loads(out)
    assert Polytope.from_json(d).vertices == [(1, 0), (1, 2)]
    assert d["semigroup_generated_by_columns"] is True
    p = json.loads(plot.read_text())
    assert p["dim"] == 1 and p["vertices"] == [[0], [2]]
    assert p["cone_rays"] == [[1, 2], [1, 0], [1, 1]]


def test_grassmann_commands(capsys):
    _, out, _ = call(capsys, "grassmann", "-k", "2", "-n", "5")
    assert len(out.splitlines()) == 5
    _, out, _ = call(capsys, "grassmann", "coords", "-M", "[[4,3,2,1],[1,2,3,4]]")
    assert json.loads(out)["coordinates"] == {"12": 5, "13": 10, "14": 15, "23": 5, "24": 10, "34": 5}


def test_toric_and_ehrhart(capsys):
    _, out, _ = call(capsys, "toric", "-A", "[[1,1,1,1],[0,1,2,3]]", "--hilbert-bound", "3")
    d = json.loads(out)
    assert len(d["generators"]) == 3
    assert [r[1] for r in d["hilbert_ehrhart"]] == [1, 4, 7, 10]
    _, out, _ = call(capsys, "ehrhart", "-P", "[[0,0],[2,0],[0,2]]")
    d = json.loads(out)
    assert d["normalized_volume"] == 4


def test_wallcross_and_reembed(capsys):
    code, out, _ = call(capsys, "wallcross", "-i", "p12*p34-p13*p24+p14*p23", "--cone1", "0", "--cone2", "1")
    assert code == 0 and json.loads(out)["kappa"] == "1"
    code, out, _ = call(capsys, "reembed", "-i", "x+x*y+y", "--cone=-1,0", "--adjacent", "1,1")
    assert code == 0
    d = json.loads(out)
    assert d["variable_map"] == {"y1": "y + 1"}
    assert [c["prime"] for c in d["cones"]] == ["prime", "prime"]


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = call(capsys, "parse", "-i", "x+y", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["ring"] == ["x", "y"]


def test_verify_quick(capsys):
    code, out, _ = call(capsys, "verify", "--quick")
    assert code == 0
    assert out.splitlines()[-1] == "8/8 checks passed"
