import json

import pytest
from click.testing import CliRunner

from sheaf_homology import __version__
from sheaf_homology.commands import cli

from .conftest import GOLDEN, load


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args: str):
        return runner.invoke(cli, list(args))

    return invoke


SPACES = ["point", "s0", "s1", "s2", "sierpinski", "random7", "s1xs1"]
NOT_MANIFOLDS = {"sierpinski", "random7"}


def manifold_cases():
    return [
        pytest.param(
            space,
            1 if space in NOT_MANIFOLDS else 0,
            marks=[pytest.mark.slow] if space == "s1xs1" else [],
        )
        for space in SPACES
    ]


@pytest.mark.parametrize("space", SPACES)
@pytest.mark.parametrize("command", ["homology", "cohomology"])
def test_corpus_golden_text(run, command, space):
    result = run(command, space)
    assert result.exit_code == 0, result.output
    assert result.stdout == (GOLDEN / f"{command}_{space}.txt").read_text()


@pytest.mark.parametrize("space", SPACES)
@pytest.mark.parametrize("command", ["homology", "cohomology"])
def test_corpus_golden_json(run, command, space):
    result = run("--json", command, space)
    assert result.exit_code == 0, result.output
    assert result.stdout == (GOLDEN / f"{command}_{space}.json").read_text()


def test_twisted_golden(run):
    result = run("cohomology", "s1", "--sheaf", "twisted_s1")
    assert result.exit_code == 0, result.output
    assert result.stdout == (GOLDEN / "cohomology_twisted_s1.txt").read_text()


@pytest.mark.parametrize("space, code", manifold_cases())
def test_manifold_golden_text(run, space, code):
    result = run("manifold-check", space)
    assert result.exit_code == code, result.output
    assert result.stdout == (GOLDEN / f"manifold_{space}.txt").read_text()


@pytest.mark.parametrize("space, code", manifold_cases())
def test_manifold_golden_json(run, space, code):
    result = run("--json", "manifold-check", space)
    assert result.exit_code == code, result.output
    data = json.loads(result.stdout)
    # orientation signs depend on the chain bases; the golden files leave them out
    orientation = data.pop("orientation")
    if data["manifold"]:
        _, p, _ = load(space)
        assert sorted(orientation) == sorted(f"{x}->{y}" for x, y in p.sorted_covers)
        assert set(orientation.values()) <= {1, -1}
    else:
        assert orientation is None
    assert data == json.loads((GOLDEN / f"manifold_{space}.json").read_text())


def test_bar_method_agrees(run):
    assert run("homology", "s1", "--method", "bar").stdout == run("homology", "s1").stdout


def test_max_deg_from_project_config(run, tmp_path):
    (tmp_path / "pyproject.toml").write_text("[tool.sheaf_homology]\nmax-deg = 1\n")
    assert run("homology", "s2").stdout == "H_0 = Z\nH_1 = 0\n"
    assert run("homology", "s2", "--max-deg", "2").stdout.splitlines()[-1] == "H_2 = Z"


def test_manifold_check_passes_on_circle(run):
    result = run("manifold-check", "s1")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "homological 1-manifold, orientable"


@pytest.mark.parametrize(
    "args, code",
    [
        (["pv-check", "s1"], 0),
        (["pv-check", "sierpinski"], 1),
        (["mv", "s1", "--u", "a,c,d", "--v", "b,c,d"], 0),
        (["homology", "no_such_space"], 2),
        (["mv", "s1", "--u", "a", "--v", "b,c,d"], 2),
        (["mv", "s1", "--u", "a,x", "--v", "b,c,d"], 2),
        (["uct", "s1", "--coeff", "Q"], 2),
        (["manifold-check", "s2", "--max-deg", "1"], 2),
        (["manifold-check", "s2", "--max-deg", "2"], 0),
        (["--config", "missing.toml", "homology", "s1"], 2),
    ],
)
def test_exit_codes(run, args, code):
    result = run(*args)
    assert result.exit_code == code, result.output


def test_bad_space_file(run, tmp_path):
    (tmp_path / "bad.json").write_text('{"elements": ["a"], "covers": [["a", "b"]]}')
    result = run("homology", "bad.json")
    assert result.exit_code == 2
    assert "bad.json" in result.output


def test_json_output_is_deterministic(run):
    first = run("--json", "homology", "s1", "--sheaf", "twisted_s1")
    second = run("--json", "homology", "s1", "--sheaf", "twisted_s1")
    assert first.stdout == second.stdout
    data = json.loads(first.stdout)
    assert data["command"] == "homology"
    assert [g["text"] for g in data["groups"]] == ["Z/2", "0", "0"]
    assert data["groups"][0] == {"rank": 0, "torsion": [2], "text": "Z/2"}


def test_json_manifold_report(run):
    data = json.loads(run("--json", "manifold-check", "s1").stdout)
    assert data["manifold"] is True
    assert data["dimension"] == 1


def test_kunneth_command(run):
    result = run("kunneth", "sierpinski", "s1")
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[:3] == ["H_0 = Z", "H_1 = Z", "H_2 = 0"]
    assert lines[-1].endswith(": PASS")


def test_verify_command(run):
    result = run("verify", "random7", "--sheaf", "random7_sheaf", "--max-deg", "1")
    assert result.exit_code == 0, result.output
    assert "FAIL" not in result.stdout


def test_dualizing_command(run):
    result = run("dualizing", "sierpinski")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "D(a): H^0 = Z, H^-1 = 0"


def test_corpus(run):
    names = run("corpus").stdout.split()
    assert "s1.json" in names
    assert "random7_sheaf.json" in names


def test_serialize(run, tmp_path):
    result = run("serialize", "s1")
    data = json.loads(result.stdout)
    assert data["covers"][0] == ["a", "c"]

    target = tmp_path / "twisted.json"
    run("serialize", "s1", "--sheaf", "twisted_s1", "-o", str(target))
    again = run("cohomology", "s1", "--sheaf", str(target))
    assert again.stdout == (GOLDEN / "cohomology_twisted_s1.txt").read_text()


def test_init_config(run, tmp_path):
    first = run("init-config", str(tmp_path))
    assert first.exit_code == 0
    assert "[tool.sheaf_homology]" in (tmp_path / "pyproject.toml").read_text()
    second = run("init-config", str(tmp_path))
    assert second.exit_code == 2
    assert "already has" in second.output


def test_version(run):
    result = run("--version")
    assert result.exit_code == 0
    assert __version__ in result.output
