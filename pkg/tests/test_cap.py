import random

import pytest

from sheaf_homology.errors import ComplexError
from sheaf_homology.homology import (
    bar_complex,
    cap_chain,
    cap_naturality_check,
    cap_product,
    cap_sign,
    cobar_complex,
)
from sheaf_homology.poset import MonotoneMap, point
from sheaf_homology.sheaf import constant_sheaf, tensor
from sheaf_homology.zlinalg import FgAbGroup

Z = FgAbGroup.free(1)


def test_circle_pairing_is_unimodular(s1):
    z = constant_sheaf(s1, Z)
    pairing = cap_product(z, z, 1, 1)
    assert str(pairing.homology) == "Z"
    assert str(pairing.cohomology) == "Z"
    assert str(pairing.target) == "Z"
    assert [abs(v) for v in pairing((1,), (1,))] == [1]
    assert not pairing.is_zero()


def test_capping_with_the_unit(s2):
    z = constant_sheaf(s2, Z)
    pairing = cap_product(z, z, 2, 0)
    assert [abs(v) for v in pairing((1,), (1,))] == [1]


def test_pairing_with_torsion(twisted):
    # H_1 of the twisted circle vanishes, so there is nothing to pair
    assert cap_product(twisted, twisted, 1, 0).is_zero()


def test_degrees_are_checked(s1):
    z = constant_sheaf(s1, Z)
    with pytest.raises(ComplexError, match="p >= q >= 0"):
        cap_product(z, z, 0, 1)


@pytest.mark.parametrize("space, p, q", [("s1", 1, 0), ("s2", 2, 0), ("s2", 2, 1)])
def test_boundary_formula(space, p, q, request):
    base = request.getfixturevalue(space)
    rng = random.Random(p * 10 + q)
    f = constant_sheaf(base, Z)
    chains, cochains = bar_complex(f), cobar_complex(f)
    target = bar_complex(tensor(f, f))

    def cap(pp, qq, c, phi):
        return cap_chain(chains, cochains, target, pp, qq, c, phi)

    sign = -1 if (p - q - 1) % 2 else 1
    for _ in range(34):
        c = [rng.randint(-3, 3) for _ in range(chains.complex.group(p).ngens)]
        phi = [rng.randint(-3, 3) for _ in range(cochains.complex.group(-q).ngens)]
        lhs = target.complex.boundary(p - q).matrix.apply(cap(p, q, c, phi))
        dc = chains.complex.boundary(p).matrix.apply(c)
        dphi = cochains.complex.boundary(-q).matrix.apply(phi)
        first = cap(p - 1, q, dc, phi) if p - 1 >= q else [0] * len(lhs)
        second = cap(p, q + 1, c, dphi)
        assert list(lhs) == [a + sign * b for a, b in zip(first, second)]


def test_sign_convention():
    assert cap_sign(1, 1) == -1
    assert cap_sign(2, 1) == 1
    assert cap_sign(3, 3) == -1


def test_projection_formula(s1, sierpinski):
    z = constant_sheaf(s1, Z)
    assert cap_naturality_check(MonotoneMap.identity(s1), z, z, 1, 1).passed
    inclusion = MonotoneMap.build(sierpinski, s1, {"a": "a", "b": "c"})
    assert cap_naturality_check(inclusion, z, z, 1, 0).passed
    pt = point()
    zp = constant_sheaf(pt, Z)
    assert cap_naturality_check(MonotoneMap.constant(s1, pt, "*"), zp, zp, 1, 0).passed
