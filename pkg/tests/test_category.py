import itertools

import pytest

from ringcones.category import (
    add_morphisms,
    build_category,
    canonical_factorization,
    compose,
    identity,
    image,
    inclusion,
    is_inclusion,
    negate_morphism,
    translation,
    zero_morphism,
)
from ringcones.errors import (
    CriterionMismatch,
    NoNormalFactorization,
    NotAMorphism,
    NotASubobject,
    NotComposable,
    ShapeMismatch,
    SizeExceeded,
)
from ringcones.lattice import subobject_lattice
from ringcones.ring import zmod

from .conftest import CORPUS, category, ring


def test_z6_objects():
    cat = category("zmod:6")
    assert [o.elements for o in cat.objects] == [(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]
    assert [cat.label(o) for o in cat.objects] == ["R0", "R3", "R2", "R1"]
    assert cat.top.generator == 1 and cat.bottom.generator == 0


def test_generator_is_smallest():
    cat = category("zmod:6")
    assert cat.object_of(4) == cat.object_of(2)
    assert cat.object_of(4).generator == 2
    assert cat.object_of(5).generator == 1


@pytest.mark.parametrize(
    "spec,family",
    [
        # independent oracle: {r*a} / {a*r} computed from the matrix entries directly
        ("mat:2:zmod:2", [(0,), (0, 1, 4, 5), (0, 2, 8, 10), (0, 3, 12, 15), tuple(range(16))]),
        ("zmod:12", [(0,), (0, 6), (0, 4, 8), (0, 3, 6, 9), (0, 2, 4, 6, 8, 10), tuple(range(12))]),
    ],
)
def test_left_ideal_families(spec, family):
    assert [o.elements for o in category(spec).objects] == family


def test_matrix_right_ideals_differ():
    right = category("mat:2:zmod:2", "right")
    assert [o.elements for o in right.objects] == [(0,), (0, 1, 2, 3), (0, 4, 8, 12), (0, 5, 10, 15), tuple(range(16))]
    assert right.label(right.objects[1]) == "1R"
    assert {o.elements for o in right.objects} != {o.elements for o in category("mat:2:zmod:2").objects}


def test_hom_sizes_z6():
    cat = category("zmod:6")
    # |Hom(Ra, Rb)| = number of distinct maps x -> xs landing in Rb
    expected = [[1, 1, 1, 1], [1, 2, 1, 2], [1, 1, 3, 3], [1, 2, 3, 6]]
    assert [[len(cat.hom(a, b)) for b in cat.objects] for a in cat.objects] == expected
    assert cat.morphism_count == sum(map(sum, expected))


def test_make_morphism_example():
    cat = category("zmod:6")
    r2, r3 = cat.object_of(2), cat.object_of(3)
    f = cat.make_morphism(r2, 3, r3)
    assert dict(zip(r2.elements, f.graph)) == {0: 0, 2: 0, 4: 0}
    assert f == zero_morphism(r2, r3)
    with pytest.raises(NotAMorphism):
        cat.make_morphism(r2, 1, r3)


def test_graph_equality_ignores_witness():
    cat = category("zmod:6")
    r2 = cat.object_of(2)
    # 4x = x for every x in {0,2,4}
    assert translation(r2, 4, r2) == identity(r2)
    assert translation(r2, 4, r2).canonical_witness == 1


def test_compose_example():
    cat = category("zmod:6")
    r1, r2, r3 = cat.object_of(1), cat.object_of(2), cat.object_of(3)
    f = cat.make_morphism(r1, 2, r2)
    g = cat.make_morphism(r2, 3, r3)
    h = compose(f, g)
    assert (h.dom, h.cod) == (r1, r3)
    assert h == zero_morphism(r1, r3)
    with pytest.raises(NotComposable):
        compose(g, f)


def test_add_example():
    cat = category("zmod:6")
    r2 = cat.object_of(2)
    f = cat.make_morphism(r2, 1, r2)
    assert add_morphisms(f, f) == cat.make_morphism(r2, 2, r2)
    assert add_morphisms(f, negate_morphism(f)) == zero_morphism(r2, r2)
    with pytest.raises(ShapeMismatch):
        add_morphisms(f, zero_morphism(r2, cat.top))


def test_inclusion():
    cat = category("zmod:6")
    r2, r3 = cat.object_of(2), cat.object_of(3)
    j = inclusion(r2, cat.top)
    assert is_inclusion(j) and j.graph == r2.elements
    with pytest.raises(NotASubobject):
        inclusion(r2, r3)


@pytest.mark.parametrize(
    "spec,sub,expected",
    [
        ("zmod:6", 2, [4]),  # x -> 4x fixes {0,2,4}
        ("zmod:6", 3, [3]),
        ("zmod:4", 2, []),  # 2Z4 is not a direct summand
    ],
)
def test_retractions(spec, sub, expected):
    cat = category(spec)
    found = cat.find_retractions(cat.top, cat.object_of(sub))
    assert [e.canonical_witness for e in found] == expected
    for e in found:
        assert compose(inclusion(e.cod, e.dom), e) == identity(e.cod)


def test_predicates_z6():
    cat = category("zmod:6")
    r1, r2 = cat.top, cat.object_of(2)
    onto = cat.make_morphism(r1, 2, r2)
    assert cat.is_epi(onto) and not cat.is_mono(onto)
    j = inclusion(r2, r1)
    assert cat.is_split_mono(j) and not cat.is_epi(j)
    assert cat.is_iso(identity(r2))
    assert cat.is_iso(cat.make_morphism(r2, 5, r2))


def test_z4_split_mono_criterion_mismatch():
    cat = category("zmod:4")
    f = cat.make_morphism(cat.object_of(2), 1, cat.top)
    an = cat.analyse(f)
    # 2 R 2, yet the inclusion 2Z4 -> Z4 has no left inverse
    assert an.green_split_mono and not an.split_mono
    assert cat.is_mono(f)
    with pytest.raises(CriterionMismatch) as exc:
        cat.is_split_mono(f)
    assert exc.value.morphism == "rho(2,1,1)"
    assert cat.is_split_mono(f, strict=False) is False


@pytest.mark.parametrize("spec", CORPUS)
def test_epi_is_surjective(spec):
    cat = category(spec)
    for f in cat.morphisms():
        assert cat.analyse(f).epi == f.is_surjective


@pytest.mark.parametrize("spec", CORPUS)
def test_canonical_factorization(spec):
    cat = category(spec)
    for f in cat.morphisms():
        q, j = canonical_factorization(f)
        assert compose(q, j) == f
        assert q.is_surjective and is_inclusion(j)
        assert image(f).element_set == f.range_set


@pytest.mark.parametrize("spec", ["zmod:6", "mat:2:zmod:2"])
def test_unique_epi_inclusion_factorization(spec):
    cat = category(spec)
    for f in cat.morphisms():
        assert len(cat.epi_inclusion_factorizations(f)) == 1


def test_normal_factorization():
    cat = category("zmod:6")
    for f in cat.morphisms():
        e, u, j = cat.normal_factorization(f)
        assert compose(compose(e, u), j) == f
        assert cat.is_iso(u) and is_inclusion(j)
        assert compose(inclusion(e.cod, e.dom), e) == identity(e.cod)


def test_normal_factorization_missing_in_z4():
    cat = category("zmod:4")
    with pytest.raises(NoNormalFactorization):
        cat.normal_factorization(cat.make_morphism(cat.top, 2, cat.top))


def test_join_meet():
    cat = category("zmod:6")
    r2, r3 = cat.object_of(2), cat.object_of(3)
    assert cat.join(r2, r3) == cat.top
    assert cat.meet(r2, r3) == cat.bottom


@pytest.mark.parametrize("spec", CORPUS)
def test_join_is_sum_on_corpus(spec):
    # every corpus ring is a principal left ideal ring, so Ra + Rb is an object
    cat = category(spec)
    r = ring(spec)
    lat = subobject_lattice(cat)
    assert lat.join_is_sum and lat.join_sum_witness is None
    for a, b in itertools.product(cat.objects, repeat=2):
        total = {r.add(x, y) for x in a.elements for y in b.elements}
        assert cat.join(a, b).element_set == total


@pytest.mark.parametrize(
    "spec,complemented",
    [("zmod:2", True), ("zmod:4", False), ("zmod:6", True), ("zmod:12", False), ("prod:zmod:2,zmod:2", True), ("mat:2:zmod:2", True)],
)
def test_relative_complementation(spec, complemented):
    lat = subobject_lattice(category(spec))
    assert lat.is_lattice
    assert lat.is_relatively_complemented == complemented
    assert (lat.complement_witness is None) == complemented


def test_z4_complement_witness():
    w = subobject_lattice(category("zmod:4")).complement_witness
    assert (w["lower"], w["upper"], w["element"]) == ("R0", "R1", "R2")


def test_caps():
    with pytest.raises(SizeExceeded):
        build_category(zmod(12), max_objects=3)
    with pytest.raises(SizeExceeded):
        build_category(zmod(12), max_morphisms=10)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("RINGCONES_MAX_OBJECTS", "2")
    with pytest.raises(SizeExceeded):
        build_category(zmod(6))


def test_right_category_of_commutative_ring():
    left, right = category("zmod:6"), category("zmod:6", "right")
    assert [o.elements for o in left.objects] == [o.elements for o in right.objects]
    assert left.morphism_count == right.morphism_count


@pytest.mark.parametrize("spec", CORPUS)
def test_hom_sets_exhaustive(spec):
    # every map x -> xs with as in Rb appears exactly once in Hom(Ra, Rb)
    cat = category(spec)
    r = ring(spec)
    for a, b in itertools.product(cat.objects, repeat=2):
        graphs = {tuple(r.mul(x, s) for x in a.elements) for s in r.elements if r.mul(a.generator, s) in b}
        assert {f.graph for f in cat.hom(a, b)} == graphs
        assert len(cat.hom(a, b)) == len(graphs)
