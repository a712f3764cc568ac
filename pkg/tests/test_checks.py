import random

import pytest

from sheaf_homology.errors import InputError, PosetError
from sheaf_homology.homology import (
    duality_sequence_check,
    excision_check,
    kunneth,
    kunneth_homology,
    local_homology_sequence_check,
    local_mv_check,
    long_exact_sequence_check,
    mv_closed_check,
    mv_open_check,
    universal_coefficients,
    verify,
)
from sheaf_homology.sheaf import SheafMorphism, constant_sheaf
from sheaf_homology.zlinalg import FgAbGroup, IntMatrix

from .conftest import load, random_poset, random_sheaf

Z = FgAbGroup.free(1)


def passed(report):
    assert report.passed, str(report)
    return True


def test_open_mayer_vietoris(s1, s2):
    assert passed(mv_open_check(s1, {"a", "c", "d"}, {"b", "c", "d"}, constant_sheaf(s1, Z), 2))
    u, v = s2.minimal_open("a"), s2.minimal_open("b")
    assert passed(mv_open_check(s2, u, v, constant_sheaf(s2, Z), 2))


def test_open_mayer_vietoris_columns(s1):
    report = mv_open_check(s1, {"a", "c", "d"}, {"b", "c", "d"}, constant_sheaf(s1, Z), 1)
    assert report.columns["H(U∩V)"] == ["Z^2", "0"]
    assert report.columns["H(X)"] == ["Z", "Z"]


def test_open_mayer_vietoris_with_twisted_coefficients(twisted, s1):
    assert passed(mv_open_check(s1, {"a", "c", "d"}, {"b", "c", "d"}, twisted, 2))


def test_mayer_vietoris_needs_a_cover(s1):
    with pytest.raises(PosetError, match="do not cover"):
        mv_open_check(s1, {"c"}, {"d"}, constant_sheaf(s1, Z), 1)
    with pytest.raises(PosetError, match="not open"):
        mv_open_check(s1, {"a"}, {"b", "c", "d"}, constant_sheaf(s1, Z), 1)


def test_closed_mayer_vietoris(s1, twisted):
    y, z = {"a", "b", "c"}, {"a", "b", "d"}
    assert passed(mv_closed_check(s1, y, z, constant_sheaf(s1, Z), 2))
    assert passed(mv_closed_check(s1, y, z, twisted, 2))


def test_local_mayer_vietoris(s1, random7):
    assert passed(local_mv_check(s1, {"a", "b", "c"}, {"a", "b", "d"}, constant_sheaf(s1, Z), 2))
    p = random7.base
    assert passed(local_mv_check(p, p.closure("p5"), p.closure("p6"), random7, 2))


def test_excision(s1, random7):
    assert passed(excision_check(s1, {"a", "c", "d"}, {"a"}, constant_sheaf(s1, Z), 2))
    p = random7.base
    u = p.minimal_open("p1") | p.minimal_open("p3")
    assert passed(excision_check(p, u, {"p1"}, random7, 2))
    with pytest.raises(PosetError, match="not contained"):
        excision_check(s1, {"c", "d"}, {"a"}, constant_sheaf(s1, Z), 1)


def test_long_exact_sequence_of_multiplication(s1):
    z = constant_sheaf(s1, Z)
    z2 = constant_sheaf(s1, FgAbGroup.cyclic(2))
    double = SheafMorphism(z, z, {x: IntMatrix.from_rows([[2]]) for x in s1.elements})
    reduce = SheafMorphism(z, z2, {x: IntMatrix.from_rows([[1]]) for x in s1.elements})
    assert passed(long_exact_sequence_check(double, reduce, 2))


def test_long_exact_sequence_rejects_non_exact_input(s1):
    z = constant_sheaf(s1, Z)
    ident = SheafMorphism(z, z, {x: IntMatrix.identity(1) for x in s1.elements})
    report = long_exact_sequence_check(ident, ident, 1)
    assert not report.passed
    assert "not exact" in report.witnesses[0].message


def test_local_homology_sequence(random7):
    p = random7.base
    for x in p.elements:
        assert passed(local_homology_sequence_check(p, p.closure(x), random7, 2))


@pytest.mark.parametrize("coefficient", [FgAbGroup.cyclic(2), FgAbGroup.cyclic(4), Z])
def test_universal_coefficients(coefficient, twisted, random7):
    assert passed(universal_coefficients(twisted, coefficient, 2))
    assert passed(universal_coefficients(random7, coefficient, 2))


def test_universal_coefficients_columns(s1):
    report = universal_coefficients(constant_sheaf(s1, Z), FgAbGroup.cyclic(2), 1)
    assert report.columns["H (x) G + Tor(H, G)"] == ["Z/2", "Z/2"]


def test_duality_sequence(twisted, random7):
    report = duality_sequence_check(twisted, 2)
    assert passed(report)
    assert report.columns["H^(X, F^v)"] == ["0", "Z/2", "0"]
    assert passed(duality_sequence_check(random7, 2))


def test_kunneth_stalkwise(s1, sierpinski):
    report = kunneth(sierpinski, constant_sheaf(sierpinski, Z), s1, constant_sheaf(s1, Z), 2)
    assert passed(report)
    assert report.columns["H(X1 x X2)"] == ["Z", "Z", "0"]
    assert any("stalkwise" in n for n in report.notes)


def test_kunneth_resolved_with_torsion_on_both_sides(s1, sierpinski):
    f1 = constant_sheaf(s1, FgAbGroup.cyclic(2))
    f2 = constant_sheaf(sierpinski, FgAbGroup.cyclic(2))
    report = kunneth(s1, f1, sierpinski, f2, 2)
    assert passed(report)
    assert report.columns["H(X1 x X2)"] == ["Z/2", "Z/2 + Z/2", "Z/2"]
    assert any("resolved" in n for n in report.notes)


def test_kunneth_routes_agree_on_free_stalks(s1, sierpinski, twisted):
    z1, z2 = constant_sheaf(sierpinski, Z), constant_sheaf(s1, Z)
    for f1, f2 in [(z1, z2), (z1, twisted)]:
        p1, p2 = f1.base, f2.base
        stalkwise = kunneth_homology(p1, f1, p2, f2, 2, route="stalkwise")
        resolved = kunneth_homology(p1, f1, p2, f2, 2, route="resolved")
        assert [str(g) for g in stalkwise] == [str(g) for g in resolved]
    assert str(resolved[0]) == "Z/2"
    with pytest.raises(InputError, match="unknown"):
        kunneth_homology(p1, f1, p2, f2, 2, route="flat")


@pytest.mark.slow
def test_kunneth_torus(s1):
    z = constant_sheaf(s1, Z)
    groups = kunneth_homology(s1, z, s1, z, 2)
    assert [str(g) for g in groups] == ["Z", "Z^2", "Z"]
    assert passed(kunneth(s1, z, s1, z, 2))
    z2 = constant_sheaf(s1, FgAbGroup.cyclic(2))
    groups = kunneth_homology(s1, z2, s1, z2, 2)
    assert [str(g) for g in groups] == ["Z/2", "Z/2 + Z/2", "Z/2"]


def test_verify_suite(random7):
    reports = verify(random7.base, random7, 2)
    assert len(reports) == 4 + len(random7.base)
    for report in reports:
        assert passed(report)


@pytest.mark.slow
@pytest.mark.parametrize("torsion", [False, True])
@pytest.mark.parametrize("seed", range(6))
def test_verify_suite_on_random_sheaves(seed, torsion, make_random):
    p, f = make_random(seed, torsion)
    for report in verify(p, f, 2, workers=2):
        assert passed(report)


def test_bundled_sheaf_reads_the_right_space():
    name, p, f = load("random7", "random7_sheaf")
    assert name == "random7"
    assert f.base == p


def union(sets):
    out = set()
    for s in sets:
        out |= set(s)
    return out


@pytest.mark.slow
@pytest.mark.parametrize("torsion", [False, True])
@pytest.mark.parametrize("seed", range(25))
def test_random_covers_and_excision(seed, torsion, make_random):
    p, f = make_random(seed, torsion)
    rng = random.Random(seed)
    elements = list(p.elements)

    picked = rng.sample(elements, rng.randint(1, len(elements)))
    u = union(p.minimal_open(x) for x in picked)
    rest = [x for x in elements if x not in u] or [rng.choice(elements)]
    v = union(p.minimal_open(x) for x in rest)
    assert passed(mv_open_check(p, u, v, f, 2))

    y = union(p.closure(x) for x in picked)
    z = union(p.closure(x) for x in elements if x not in y) or p.closure(rng.choice(elements))
    assert passed(mv_closed_check(p, y, z, f, 2))

    closed = p.closure(rng.choice(elements))
    extra = rng.sample(elements, rng.randint(0, 2))
    around = union(p.minimal_open(x) for x in [*closed, *extra])
    assert passed(excision_check(p, around, closed, f, 2))


@pytest.mark.slow
@pytest.mark.parametrize("torsion", [False, True])
@pytest.mark.parametrize("seed", range(10))
def test_kunneth_on_random_pairs(seed, torsion):
    rng = random.Random(seed)
    p1, p2 = random_poset(rng, rng.randint(2, 5)), random_poset(rng, rng.randint(2, 5))
    f1, f2 = random_sheaf(rng, p1, torsion), random_sheaf(rng, p2, torsion)
    assert passed(kunneth(p1, f1, p2, f2, 1))
