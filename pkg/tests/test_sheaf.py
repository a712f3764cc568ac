import random

import pytest

from sheaf_homology.errors import SheafError
from sheaf_homology.homology import cohomology, homology
from sheaf_homology.poset import FinitePoset
from sheaf_homology.sheaf import (
    CosheafMorphism,
    Sheaf,
    SheafMorphism,
    closed_restriction,
    constant_cosheaf,
    constant_sheaf,
    cos,
    cosheaf_direct_sum,
    cosheaf_extension_by_zero,
    cosheaf_morphism_group,
    direct_sum,
    extension_by_zero,
    free_sheaf,
    generated_subsheaf,
    morphism_group,
    sections,
    shf,
    skyscraper,
    tensor,
    zero_sheaf,
)
from sheaf_homology.zlinalg import FgAbGroup, IntMatrix

from .conftest import random_sheaf

Z = FgAbGroup.free(1)
Z2 = FgAbGroup.cyclic(2)


def one(v):
    return IntMatrix.from_rows([[v]])


def test_missing_map_between_nonzero_stalks(s1):
    stalks = {x: Z for x in s1.elements}
    with pytest.raises(SheafError, match=r"maps\[a->c\] is missing"):
        Sheaf(s1, stalks, {("a", "d"): one(1), ("b", "c"): one(1), ("b", "d"): one(1)})


def test_missing_map_into_zero_stalk_is_zero(s1):
    stalks = {"a": Z, "b": Z, "c": Z, "d": FgAbGroup.zero()}
    maps = {("a", "c"): one(1), ("b", "c"): one(1)}
    f = Sheaf(s1, stalks, maps)
    assert f.cover_matrix("a", "d").rows == 0
    assert set(maps) == {("a", "c"), ("b", "c")}


def test_wrong_shape(s1):
    stalks = {x: Z for x in s1.elements}
    maps = {c: one(1) for c in s1.covers}
    maps[("a", "c")] = IntMatrix.from_rows([[1, 0]])
    with pytest.raises(SheafError, match="has shape 1x2, expected 1x1"):
        Sheaf(s1, stalks, maps)


def test_map_must_respect_relations(s1):
    stalks = {"a": Z2, "b": Z, "c": Z, "d": Z}
    maps = {c: one(1) for c in s1.covers}
    with pytest.raises(SheafError, match="does not respect relation"):
        Sheaf(s1, stalks, maps)


def test_functoriality_is_checked(s2):
    maps = {c: one(1) for c in s2.covers}
    maps[("c", "e")] = one(-1)
    with pytest.raises(SheafError, match="functoriality fails from [ab] to e"):
        Sheaf(s2, {x: Z for x in s2.elements}, maps)


def test_twisted_circle_sections(twisted, s1):
    assert sections(twisted, s1.elements).is_zero()
    assert sections(twisted, s1.minimal_open("a")).is_isomorphic(Z)
    assert twisted.is_locally_constant()
    assert [str(g) for g in cohomology(twisted, 1)] == ["0", "Z/2"]


def test_skyscraper_and_extension_by_zero(s1):
    sky = skyscraper(s1, "c", Z)
    assert [x for x in s1.elements if not sky.stalk(x).is_zero()] == ["a", "b", "c"]
    ext = extension_by_zero(s1, {"c", "d"}, constant_sheaf(s1, Z))
    assert ext.stalk("a").is_zero()
    assert ext.stalk("c").is_isomorphic(Z)
    # nothing glues c to d
    assert str(homology(ext, 0)[0]) == "Z^2"


def test_closed_restriction_stalks(s1):
    fy = closed_restriction(s1, {"a"}, constant_sheaf(s1, Z))
    assert fy.stalk("a").is_isomorphic(Z)
    assert all(fy.stalk(x).is_zero() for x in "bcd")


def test_free_sheaf_stalks(s1):
    f = free_sheaf(s1, ["a", "b", "c"])
    assert [f.stalk(x).rank for x in s1.elements] == [1, 1, 3, 2]


def test_tensor_and_direct_sum(twisted):
    square = tensor(twisted, twisted)
    assert square.is_locally_constant()
    assert [str(g) for g in cohomology(square, 1)] == ["Z", "Z"]
    both = direct_sum(twisted, constant_sheaf(twisted.base, Z))
    assert str(both.stalk("a")) == "Z^2"


def test_morphism_kernel_and_cokernel(s1):
    z = constant_sheaf(s1, Z)
    double = SheafMorphism(z, z, {x: one(2) for x in s1.elements})
    kernel, _ = double.kernel()
    quotient, _ = double.cokernel()
    assert kernel.is_zero()
    assert all(quotient.stalk(x).is_isomorphic(Z2) for x in s1.elements)


def test_generated_subsheaf(s1):
    z = constant_sheaf(s1, Z)
    sub, inclusion = generated_subsheaf(z, [("a", (1,))])
    assert [sub.stalk(x).rank for x in s1.elements] == [1, 0, 1, 1]
    assert inclusion.component("c").is_injective()


def test_morphism_group_of_constant_sheaf(s1):
    s0 = FinitePoset.build(["a", "b"], [])
    assert morphism_group(constant_sheaf(s1, Z), constant_sheaf(s1, Z)).is_isomorphic(Z)
    assert morphism_group(constant_sheaf(s0, Z), constant_sheaf(s0, Z2)).is_isomorphic(
        FgAbGroup.from_invariants(0, [2, 2])
    )


# cosheaves


def test_cos_of_constant_is_constant(s1):
    q = cos(constant_sheaf(s1, Z))
    assert all(q.value(x).is_isomorphic(Z) for x in s1.elements)
    assert q.is_locally_constant()
    assert cos(zero_sheaf(s1)).is_zero()


def test_shf_of_constant_cosheaf_is_constant(s1):
    f = shf(constant_cosheaf(s1, Z))
    assert all(f.stalk(x).is_isomorphic(Z) for x in s1.elements)
    assert f.is_locally_constant()


def test_shf_cos_round_trip_keeps_the_monodromy(twisted):
    back = shf(cos(twisted))
    assert back.is_locally_constant()
    assert [str(g) for g in cohomology(back, 1)] == ["0", "Z/2"]


def test_cos_commutes_with_extension_by_zero(s1):
    u = s1.minimal_open("a")
    z = constant_sheaf(s1, Z)
    left = cos(extension_by_zero(s1, u, z))
    right = cosheaf_extension_by_zero(s1, u, cos(z.restrict(u)))
    for x in s1.elements:
        assert left.value(x).is_isomorphic(right.value(x))
    # U_b meets U_a in the two points c and d
    assert str(left.value("b")) == "Z^2"


def test_cos_is_additive(twisted):
    z = constant_sheaf(twisted.base, Z)
    q = cos(direct_sum(twisted, z))
    summed = cosheaf_direct_sum(cos(twisted), cos(z))
    for x in twisted.elements:
        expected = summed.value(x)
        assert q.value(x).is_isomorphic(expected)


@pytest.mark.parametrize("torsion", [False, True])
@pytest.mark.parametrize("seed", range(4))
def test_cos_shf_adjunction(seed, torsion, make_random):
    p, f = make_random(seed, torsion)
    q = cos(random_sheaf(random.Random(seed + 100), p, torsion))
    assert cosheaf_morphism_group(cos(f), q).is_isomorphic(morphism_group(f, shf(q)))


def test_cos_shf_adjunction_on_a_skyscraper(s1):
    f = skyscraper(s1, "c", Z)
    q = constant_cosheaf(s1, Z)
    assert cosheaf_morphism_group(cos(f), q).is_zero()
    assert morphism_group(f, shf(q)).is_zero()
    sky_q = cos(f)
    assert cosheaf_morphism_group(cos(f), sky_q).is_isomorphic(
        morphism_group(f, shf(sky_q))
    )


def test_cosheaf_morphism_components(s1):
    q = constant_cosheaf(s1, Z)
    ident = {x: one(1) for x in s1.elements}
    assert CosheafMorphism(q, q, ident).component("a").is_isomorphism()
    del ident["a"]
    with pytest.raises(SheafError, match="component at a is missing"):
        CosheafMorphism(q, q, ident)
    with pytest.raises(SheafError, match="component at a: "):
        CosheafMorphism(q, q, {**ident, "a": IntMatrix.from_rows([[1, 0]])})


def test_missing_component_out_of_a_zero_value_is_zero(s1):
    zero = constant_cosheaf(s1, FgAbGroup.zero())
    q = constant_cosheaf(s1, Z)
    m = CosheafMorphism(zero, q, {})
    assert m.component("a").matrix.cols == 0


@pytest.mark.parametrize("seed", range(20))
def test_random_sheaf_stalks(seed, make_random):
    _, f = make_random(seed)
    assert all(f.stalk(x).is_finite() and f.stalk(x).order() <= 16 for x in f.elements)
    _, f = make_random(seed, torsion=False)
    assert f.has_free_stalks()


@pytest.mark.parametrize("torsion", [False, True])
def test_random_sheaves_compose_through_middle_points(torsion, make_random):
    composites = 0
    for seed in range(40):
        p, f = make_random(seed, torsion)
        for x, y in p.covers:
            for z in [b for a, b in p.covers if a == y]:
                composites += not f.restriction(x, z).is_zero()
    assert composites > 0
