import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringcones.errors import InvalidSpec, ParseError, SizeExceeded
from ringcones.ring import (
    FiniteRing,
    find_isomorphism,
    green_L,
    green_R,
    matrix_ring,
    opposite_ring,
    parse_ring_spec,
    principal_left_ideal_set,
    verify_ring_axioms,
    zmod,
)

from .conftest import CORPUS, ring


def test_zmod_tables():
    r = parse_ring_spec("zmod:6")
    assert r.order == 6
    assert r.zero == 0 and r.one == 1
    for a, b in itertools.product(range(6), repeat=2):
        assert r.add(a, b) == (a + b) % 6
        assert r.mul(a, b) == (a * b) % 6


def test_product_is_z6():
    # brute-force isomorphism oracle, independent of the product constructor
    p = parse_ring_spec("prod:zmod:2,zmod:3")
    assert p.order == 6
    iso = find_isomorphism(p, zmod(6))
    assert iso is not None
    for a, b in itertools.product(range(6), repeat=2):
        assert iso[p.add(a, b)] == (iso[a] + iso[b]) % 6
        assert iso[p.mul(a, b)] == (iso[a] * iso[b]) % 6


def test_klein_product_is_not_z4():
    assert find_isomorphism(parse_ring_spec("prod:zmod:2,zmod:2"), zmod(4)) is None


def test_matrix_ring_order_and_ordering():
    m = parse_ring_spec("mat:2:zmod:2")
    assert m.order == 16
    assert m.zero == 0
    # row-major lexicographic: the identity [[1,0],[0,1]] is (1,0,0,1) -> 0b1001
    assert m.one == 9
    assert m.names[9] == "[1,0;0,1]"


def test_product_ordering_lexicographic():
    p = parse_ring_spec("prod:zmod:2,zmod:3")
    assert p.names == ("(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,2)")
    assert p.one == 4


def test_nested_product():
    r = parse_ring_spec("prod:prod:zmod:2,zmod:2,zmod:3")
    assert r.order == 12
    assert verify_ring_axioms(r).passed


@pytest.mark.parametrize("text", ["", "zmod", "zmod:", "zmod:x", "zmod:6,", "prod:zmod:2", "mat:2:zmod", "ring:3", "mat:2:z:2"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ring_spec(text)


@pytest.mark.parametrize("text", ["zmod:0", "mat:2:zmod:4", "mat:0:zmod:2", "mat:1:zmod:1"])
def test_invalid_specs(text):
    with pytest.raises(InvalidSpec):
        parse_ring_spec(text)


def test_size_cap():
    with pytest.raises(SizeExceeded):
        parse_ring_spec("mat:3:zmod:2")
    with pytest.raises(SizeExceeded):
        zmod(257)


def test_trivial_ring():
    r = parse_ring_spec("zmod:1")
    assert r.order == 1 and r.zero == r.one == 0
    assert verify_ring_axioms(r).passed


@pytest.mark.parametrize("spec", CORPUS + ["zmod:1", "mat:2:zmod:3", "prod:zmod:3,zmod:5"])
def test_corpus_satisfies_axioms(spec):
    report = verify_ring_axioms(ring(spec))
    assert report.passed, report.render()


def test_mutated_table_fails_with_witness():
    r = zmod(6)
    mul = [list(row) for row in r.mul_table]
    mul[2][3], mul[2][4] = mul[2][4], mul[2][3]
    bad = FiniteRing(r.add_table, mul, 0, 1)
    report = verify_ring_axioms(bad)
    assert not report.passed
    failing = {c.claim: c.witness for c in report.failures()}
    assert "ring.distrib.left" in failing
    w = failing["ring.distrib.left"]
    # replay the witness directly against the tables
    x, y, z = w["x"], w["y"], w["z"]
    assert bad.mul(x, bad.add(y, z)) != bad.add(bad.mul(x, y), bad.mul(x, z))


def test_missing_unit_is_reported():
    r = zmod(4)
    bad = FiniteRing(r.add_table, r.mul_table, 0, 2)
    assert [c.claim for c in verify_ring_axioms(bad).failures()] == ["ring.mul.one"]


def test_opposite_commutative_is_identical():
    r = zmod(6)
    assert opposite_ring(r) == r


def test_opposite_matrix_ring():
    m = matrix_ring(2, 2)
    op = opposite_ring(m)
    assert op != m
    assert verify_ring_axioms(op).passed
    for a, b in itertools.product(m.elements, repeat=2):
        assert op.mul(a, b) == m.mul(b, a)
    assert opposite_ring(op) == m
    assert opposite_ring(op).label == m.label


def test_principal_left_ideals():
    r = zmod(6)
    assert principal_left_ideal_set(r, 2) == {0, 2, 4}
    assert principal_left_ideal_set(r, 0) == {0}
    assert principal_left_ideal_set(r, 1) == set(range(6))


def test_green_examples():
    r = zmod(6)
    assert green_L(r, 2, 4)
    assert green_L(r, 3, 3)
    assert not green_L(r, 2, 3)


@pytest.mark.parametrize("spec", CORPUS)
def test_ideal_membership(spec):
    r = ring(spec)
    for a in r.elements:
        assert a in r.left_ideal(a) and r.zero in r.left_ideal(a)


@pytest.mark.parametrize("spec", CORPUS)
@pytest.mark.parametrize("rel", [green_L, green_R])
def test_green_are_equivalences(spec, rel):
    r = ring(spec)
    els = list(r.elements)
    for a in els:
        assert rel(r, a, a)
    for a, b in itertools.product(els, repeat=2):
        assert rel(r, a, b) == rel(r, b, a)
    for a, b, c in itertools.product(els, repeat=3):
        if rel(r, a, b) and rel(r, b, c):
            assert rel(r, a, c)


@pytest.mark.parametrize("spec", CORPUS)
def test_opposite_swaps_green(spec):
    r = ring(spec)
    op = opposite_ring(r)
    for a, b in itertools.product(r.elements, repeat=2):
        assert green_L(op, a, b) == green_R(r, a, b)


def test_dump_roundtrip():
    m = matrix_ring(2, 2)
    again = FiniteRing.from_dict(m.to_dict())
    assert again == m
    assert m.dump_text().splitlines()[0] == "ring mat:2:zmod:2 order=16 zero=0 one=9"


def test_regularity():
    assert zmod(6).is_von_neumann_regular()
    assert not zmod(4).is_von_neumann_regular()
    assert matrix_ring(2, 2).is_von_neumann_regular()


# strategy yields (spec, order) pairs so the expected order is known up front
spec_strategy = st.recursive(
    st.integers(1, 12).map(lambda n: (f"zmod:{n}", n)),
    lambda inner: st.tuples(inner, inner).map(lambda p: (f"prod:{p[0][0]},{p[1][0]}", p[0][1] * p[1][1])),
    max_leaves=3,
).filter(lambda pair: pair[1] <= 48)


@settings(max_examples=40, deadline=None)
@given(spec_strategy)
def test_generated_specs_are_rings(pair):
    spec, order = pair
    r = parse_ring_spec(spec)
    assert r.order == order
    assert r.label == spec
    assert verify_ring_axioms(r).passed


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_translations_are_additive(spec, data):
    r = ring(spec)
    x, y, s = (data.draw(st.integers(0, r.order - 1)) for _ in range(3))
    assert r.mul(r.add(x, y), s) == r.add(r.mul(x, s), r.mul(y, s))
