import pytest

from sheaf_homology.errors import PosetError
from sheaf_homology.poset import (
    FinitePoset,
    MonotoneMap,
    parse_subset,
    point,
    product,
    projections,
    suspension,
)

from .conftest import load


def test_non_hasse_edge_is_rejected():
    with pytest.raises(PosetError, match=r"non-Hasse edge \(a, c\)"):
        FinitePoset.build(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


def test_cycle_is_rejected():
    with pytest.raises(PosetError, match="cycle"):
        FinitePoset.build(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(PosetError, match="self-cover"):
        FinitePoset.build(["a"], [("a", "a")])


def test_unknown_and_duplicate_elements():
    with pytest.raises(PosetError, match="unknown element 'z'"):
        FinitePoset.build(["a"], [("a", "z")])
    with pytest.raises(PosetError, match="duplicate element 'a'"):
        FinitePoset.build(["a", "a"], [])


def test_opens_and_closures(s1):
    assert s1.minimal_open("a") == {"a", "c", "d"}
    assert s1.closure("c") == {"a", "b", "c"}
    assert s1.is_open({"c", "d"})
    assert not s1.is_open({"a"})
    assert s1.is_closed({"a"})
    with pytest.raises(PosetError, match=r"\{a\} is not open"):
        s1.check_open({"a"})
    assert len(list(s1.open_sets())) == 7


def test_connected_opens_of_a_minimal_open(s1):
    opens = s1.connected_opens(s1.minimal_open("a"))
    assert opens == [frozenset({"c"}), frozenset({"d"}), frozenset({"a", "c", "d"})]


def test_chains_and_height(s1, s2):
    assert s1.height == 1
    assert s2.height == 2
    assert s1.strict_chains(s1.elements, 1) == [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    chains = s2.all_chains(s2.elements)
    assert sorted(chains) == [0, 1, 2]
    assert len(chains[2]) == 8
    assert point().height == 0


def test_subposet_recomputes_covers(s2):
    sub = s2.subposet({"a", "e"})
    assert sub.covers == frozenset({("a", "e")})


def test_product_matches_bundled_torus(s1):
    _, torus, _ = load("s1xs1")
    pq = product(s1, s1)
    assert len(pq) == 16
    assert set(pq.elements) == set(torus.elements)
    assert pq.covers == torus.covers
    pq.validate()


def test_projections_are_monotone(s1, sierpinski):
    first, second = projections(s1, sierpinski)
    assert first.validate().ok and second.validate().ok
    assert first("(c,b)") == "c"
    assert second("(c,b)") == "b"


def test_monotone_maps(s1, sierpinski):
    with pytest.raises(PosetError, match="not monotone"):
        MonotoneMap.build(sierpinski, s1, {"a": "c", "b": "a"})
    f = MonotoneMap.build(sierpinski, s1, {"a": "a", "b": "c"})
    g = MonotoneMap.constant(sierpinski, s1, "c")
    assert f.is_below(g)
    assert not g.is_below(f)
    assert f.preimage({"c", "d"}) == {"b"}
    assert MonotoneMap.identity(s1).compose(f).table == f.table


def test_parse_subset(s1):
    assert parse_subset(s1, "a, c") == {"a", "c"}
    assert parse_subset(s1, "") == frozenset()
    with pytest.raises(PosetError, match="unknown element"):
        parse_subset(s1, "a,q")


def test_suspension_raises_the_sphere_dimension(s1, s2):
    _, s0, _ = load("s0")
    assert suspension(s0).is_isomorphic(s1)
    assert suspension(s1).is_isomorphic(s2)
    with pytest.raises(PosetError, match="already an element"):
        suspension(s1, poles=("a", "z"))


def test_product_rejects_colliding_pair_names():
    p = FinitePoset.build(["a", "a,b"], [])
    q = FinitePoset.build(["c", "b,c"], [])
    with pytest.raises(PosetError, match=r"both '\(a,b,c\)'"):
        product(p, q)
