import pytest

from sheaf_homology.duality import (
    dualizing_complex,
    global_pv_consequence,
    homological_manifold_check,
    pv_check,
    restriction_comparison,
)
from sheaf_homology.errors import InputError
from sheaf_homology.poset import point, suspension

from .conftest import load


def stalks(d, x):
    return [str(g) for g in d.stalk_cohomology(x)]


def test_point():
    p = point()
    d = dualizing_complex(p)
    assert stalks(d, "*") == ["Z"]
    report = homological_manifold_check(p)
    assert report.verdict
    assert report.dimension == 0
    assert str(report).endswith("homological 0-manifold, orientable")


def test_sierpinski_dualizing_complex_is_a_skyscraper(sierpinski):
    d = dualizing_complex(sierpinski)
    assert stalks(d, "a") == ["Z", "0"]
    assert stalks(d, "b") == ["0", "0"]


def test_sierpinski_is_not_a_manifold(sierpinski):
    report = homological_manifold_check(sierpinski)
    assert not report.verdict
    assert report.return_code == 1
    assert report.witnesses == ["stalk at b vanishes"]
    assert str(report).splitlines()[-1] == "not a homological manifold (stalk at b vanishes)"


def test_sierpinski_is_not_pv(sierpinski):
    report = pv_check(sierpinski, 1)
    assert not report.passed
    assert "not a PV-space" in report.notes
    assert any("U_b" in w.message for w in report.witnesses)


@pytest.mark.parametrize("space, dimension", [("s0", 0), ("s1", 1), ("s2", 2)])
def test_spheres_are_orientable_manifolds(space, dimension):
    _, p, _ = load(space)
    report = homological_manifold_check(p, workers=2)
    assert report.verdict, report.witnesses
    assert report.dimension == dimension
    assert report.orientable
    assert report.orientation.is_locally_constant()
    assert report.to_json()["manifold"] is True


@pytest.mark.slow
def test_torus_is_a_manifold():
    _, p, _ = load("s1xs1")
    report = homological_manifold_check(p)
    assert report.verdict
    assert report.dimension == 2


def test_circle_stalks(s1):
    d = dualizing_complex(s1)
    for x in s1.elements:
        assert stalks(d, x) == ["0", "Z"]
    assert [str(g) for g in d.global_cohomology()] == ["Z", "Z"]


@pytest.mark.parametrize("space", ["point", "s1", "s2"])
def test_pv_spaces(space):
    _, p, _ = load(space)
    report = pv_check(p, 2, workers=2)
    assert report.passed, str(report)
    assert "PV-space" in report.notes
    assert global_pv_consequence(p, 2).passed


def test_truncated_dualizing_complex_keeps_low_degrees(s2):
    full = dualizing_complex(s2)
    short = dualizing_complex(s2, max_deg=0)
    assert short.depth == 1
    for x in s2.elements:
        assert stalks(short, x)[0] == stalks(full, x)[0]


def test_restriction_comparison_lists_every_point(s1):
    report = restriction_comparison(s1, s1.minimal_open("a"))
    assert [n.split(":")[0] for n in report.notes] == ["a", "c", "d"]
    assert len(report.columns) == 6


@pytest.mark.slow
def test_three_sphere_by_suspension(s2):
    report = homological_manifold_check(suspension(s2), workers=2)
    assert report.verdict
    assert report.dimension == 3
    assert report.orientable


def test_manifold_check_rejects_a_degree_bound_below_the_height(s2):
    with pytest.raises(InputError, match="below the height 2"):
        homological_manifold_check(s2, max_deg=1)
    with pytest.raises(InputError, match="depth 1"):
        homological_manifold_check(s2, d=dualizing_complex(s2, max_deg=0))


def test_manifold_check_with_the_degree_bound_at_the_height(s2):
    report = homological_manifold_check(s2, max_deg=2)
    assert report.verdict
    assert report.dimension == 2
