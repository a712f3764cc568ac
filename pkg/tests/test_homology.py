import pytest

from sheaf_homology.homology import (
    bar_homology,
    cohomology,
    derived_tensor_homology,
    homology,
    homology_with_coefficients,
    homotopy_check,
    is_cohomologically_trivial,
    is_l_acyclic,
    local_homology,
    pushforward,
    standard_resolution,
)
from sheaf_homology.poset import MonotoneMap, point
from sheaf_homology.sheaf import constant_sheaf, skyscraper
from sheaf_homology.zlinalg import FgAbGroup

from .conftest import load

Z = FgAbGroup.free(1)


def rendered(groups):
    return [str(g) for g in groups]


@pytest.mark.parametrize(
    "space, expected",
    [
        ("point", ["Z", "0", "0"]),
        ("s0", ["Z^2", "0", "0"]),
        ("sierpinski", ["Z", "0", "0"]),
        ("s1", ["Z", "Z", "0"]),
        ("s2", ["Z", "0", "Z"]),
    ],
)
def test_spheres(space, expected):
    _, _, f = load(space)
    assert rendered(homology(f, 2)) == expected
    assert rendered(bar_homology(f, 2)) == expected
    assert rendered(cohomology(f, 2)) == expected


@pytest.mark.slow
def test_torus():
    _, _, f = load("s1xs1")
    assert rendered(homology(f, 2)) == ["Z", "Z^2", "Z"]


def test_twisted_circle(twisted):
    assert rendered(homology(twisted, 2)) == ["Z/2", "0", "0"]
    assert rendered(cohomology(twisted, 2)) == ["0", "Z/2", "0"]


def test_resolution_and_bar_agree_on_bundled_sheaf(random7):
    bar = bar_homology(random7, 2)
    for minimal in (True, False):
        found = homology(random7, 2, minimal=minimal)
        assert all(a.is_isomorphic(b) for a, b in zip(bar, found))


@pytest.mark.slow
@pytest.mark.parametrize("torsion", [False, True])
@pytest.mark.parametrize("seed", range(100))
def test_resolution_and_bar_agree_on_random_sheaves(seed, torsion, make_random):
    _, f = make_random(seed, torsion)
    bar = bar_homology(f, 2)
    assert rendered(homology(f, 2)) == rendered(bar)
    assert rendered(homology(f, 2, minimal=False)) == rendered(bar)


def test_standard_resolution_is_valid(random7):
    for minimal in (True, False):
        res = standard_resolution(random7, 3, minimal=minimal)
        assert res.validate().ok
    minimal = standard_resolution(random7, 3, minimal=True)
    full = standard_resolution(random7, 3, minimal=False)
    assert len(minimal.anchors[0]) <= len(full.anchors[0])


def test_homology_with_coefficients(s1):
    z = constant_sheaf(s1, Z)
    assert rendered(homology_with_coefficients(z, FgAbGroup.cyclic(2), 2)) == [
        "Z/2",
        "Z/2",
        "0",
    ]


def test_derived_tensor_with_constant_sheaf(twisted):
    z = constant_sheaf(twisted.base, Z)
    assert rendered(derived_tensor_homology(z, twisted, 1)) == rendered(homology(twisted, 1))


def test_local_homology_at_a_closed_point(s1):
    z = constant_sheaf(s1, Z)
    assert rendered(local_homology(s1, {"a"}, z, 2)) == ["0", "Z", "0"]


def test_homology_of_a_skyscraper(s1):
    # the stalk at a restricts to zero at d, so cosections vanish
    sky = skyscraper(s1, "c", FgAbGroup.cyclic(3))
    assert rendered(homology(sky, 2)) == ["0", "Z/3", "0"]


def test_pushforward_to_a_point(s1):
    pt = point()
    collapse = MonotoneMap.constant(s1, pt, "*")
    maps = pushforward(collapse, constant_sheaf(pt, Z), 1)
    assert maps[0].is_isomorphism()
    assert maps[1].source.is_isomorphic(Z)
    assert maps[1].target.is_zero()


def test_pushforward_along_identity(s1):
    maps = pushforward(MonotoneMap.identity(s1), constant_sheaf(s1, Z), 1)
    assert all(m.is_isomorphism() for m in maps)


def test_comparable_maps_are_homotopic(s1, sierpinski):
    f = MonotoneMap.build(sierpinski, s1, {"a": "a", "b": "c"})
    g = MonotoneMap.constant(sierpinski, s1, "c")
    assert homotopy_check(f, g, Z, 1).passed


def test_cohomologically_trivial_spaces(s1, sierpinski):
    assert is_cohomologically_trivial(sierpinski)
    assert is_cohomologically_trivial(point())
    assert not is_cohomologically_trivial(s1)


def test_l_acyclic_opens(s1):
    assert is_l_acyclic(s1, s1.minimal_open("a"))
    assert is_l_acyclic(s1, {"c", "d"})
    assert not is_l_acyclic(s1, s1.elements)


@pytest.mark.parametrize("space", ["point", "s0", "sierpinski", "s1", "s2", "random7"])
def test_acyclic_spaces_are_cohomologically_trivial(space):
    _, p, z = load(space)
    acyclic = rendered(homology(z, p.height)) == ["Z"] + ["0"] * p.height
    assert acyclic == is_cohomologically_trivial(p)


def test_minimal_opens_are_cohomologically_trivial(s2):
    for x in s2.elements:
        assert is_cohomologically_trivial(s2.subposet(s2.minimal_open(x)))
