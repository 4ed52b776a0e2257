"""The category of principal left ideals of a finite ring.

Objects are the distinct sets ``Ra``; a morphism ``Ra -> Rb`` is a right
translation ``x -> xs`` with ``as`` in ``Rb``.  Morphisms are compared by their
graphs, so two witnesses ``s, t`` with ``as = at`` give the same arrow.
Composition is written left to right: ``compose(f, g)`` applies ``f`` first.

The right ideal category is built as the left ideal category of the opposite
ring; only display labels change.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import (
    CriterionMismatch,
    NoJoin,
    NoNormalFactorization,
    NotAMorphism,
    NotASubobject,
    NotComposable,
    ShapeMismatch,
    SizeExceeded,
)
from .ring import FiniteRing, green_L, green_R, opposite_ring

DEFAULT_MAX_OBJECTS = 64
DEFAULT_MAX_MORPHISMS = 20_000


def default_caps() -> tuple[int, int]:
    """Object/morphism caps, overridable through the environment."""
    return (
        int(os.environ.get("RINGCONES_MAX_OBJECTS", DEFAULT_MAX_OBJECTS)),
        int(os.environ.get("RINGCONES_MAX_MORPHISMS", DEFAULT_MAX_MORPHISMS)),
    )


@dataclass(frozen=True, eq=False)
class IdealObject:
    generator: int
    elements: tuple[int, ...]
    ring: FiniteRing = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, IdealObject) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other: IdealObject) -> bool:
        return self.element_set <= other.element_set

    def __lt__(self, other: IdealObject) -> bool:
        return self.element_set < other.element_set

    def __contains__(self, x: int) -> bool:
        return x in self.index

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def index(self) -> dict[int, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def label(self, side: str = "left") -> str:
        return f"R{self.generator}" if side == "left" else f"{self.generator}R"


def ideal_object(ring: FiniteRing, x: int) -> IdealObject:
    """The object ``Rx`` with its canonical (smallest) generator."""
    return IdealObject(ring.left_generator(x), tuple(sorted(ring.left_ideal(x))), ring)


@dataclass(frozen=True, eq=False)
class Translation:
    dom: IdealObject
    cod: IdealObject
    witness: int
    graph: tuple[int, ...]

    @cached_property
    def _key(self):
        return (self.dom.elements, self.cod.elements, self.graph)

    def __eq__(self, other):
        return isinstance(other, Translation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __call__(self, x: int) -> int:
        return self.graph[self.dom.index[x]]

    @property
    def ring(self) -> FiniteRing:
        return self.dom.ring

    @property
    def value(self) -> int:
        """Image of the domain generator, ``a*s``; it determines the whole graph."""
        return self(self.dom.generator)

    @cached_property
    def canonical_witness(self) -> int:
        r, a, v = self.ring, self.dom.generator, self.value
        return next(s for s in r.elements if r.mul(a, s) == v)

    @cached_property
    def range_set(self) -> frozenset[int]:
        return frozenset(self.graph)

    @property
    def is_surjective(self) -> bool:
        return self.range_set == self.cod.element_set

    def label(self) -> str:
        return f"rho({self.dom.generator},{self.canonical_witness},{self.cod.generator})"

    def __repr__(self):
        return f"Translation<{self.label()}>"


def translation(dom: IdealObject, s: int, cod: IdealObject) -> Translation:
    r = dom.ring
    if r.mul(dom.generator, s) not in cod:
        raise NotAMorphism(f"{dom.generator}*{s} is not in R{cod.generator}")
    return Translation(dom, cod, s, tuple(r.mul(x, s) for x in dom.elements))


def compose(f: Translation, g: Translation) -> Translation:
    """``f`` then ``g``: the translation by ``s*t``."""
    if f.cod != g.dom:
        raise NotComposable(f"cod {f.label()} != dom {g.label()}")
    return Translation(f.dom, g.cod, f.ring.mul(f.witness, g.witness), tuple(g(y) for y in f.graph))


def add_morphisms(f: Translation, g: Translation) -> Translation:
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatch(f"cannot add {f.label()} and {g.label()}")
    r = f.ring
    return Translation(f.dom, f.cod, r.add(f.witness, g.witness), tuple(r.add(u, v) for u, v in zip(f.graph, g.graph)))


def negate_morphism(f: Translation) -> Translation:
    r = f.ring
    return Translation(f.dom, f.cod, r.neg(f.witness), tuple(r.neg(u) for u in f.graph))


def zero_morphism(a: IdealObject, b: IdealObject) -> Translation:
    r = a.ring
    return Translation(a, b, r.zero, (r.zero,) * len(a))


def identity(a: IdealObject) -> Translation:
    return Translation(a, a, a.ring.one, a.elements)


def inclusion(a: IdealObject, b: IdealObject) -> Translation:
    if not a <= b:
        raise NotASubobject(f"R{a.generator} is not contained in R{b.generator}")
    return Translation(a, b, a.ring.one, a.elements)


def is_inclusion(f: Translation) -> bool:
    return f.dom <= f.cod and f.graph == f.dom.elements


def image(f: Translation) -> IdealObject:
    obj = ideal_object(f.ring, f.value)
    assert obj.element_set == f.range_set, "range of a translation is always R(as)"
    return obj


def canonical_factorization(f: Translation) -> tuple[Translation, Translation]:
    """``f = epi . incl`` through the image ``R(as)``."""
    img = image(f)
    return Translation(f.dom, img, f.witness, f.graph), inclusion(img, f.cod)


@dataclass(frozen=True)
class MorphismAnalysis:
    surjective: bool
    epi: bool
    mono: bool
    split_mono: bool
    iso: bool
    green_epi: bool
    green_split_mono: bool
    green_iso: bool

    def mismatches(self) -> list[str]:
        out = []
        if self.surjective != self.epi:
            out.append("epi-surjective")
        if self.green_epi != self.epi:
            out.append("epi")
        if self.green_split_mono != self.split_mono:
            out.append("split_mono")
        if self.green_iso != self.iso:
            out.append("iso")
        return out


class Category:
    """A materialized ``L(R)`` (or ``R(R)`` when ``side == "right"``).

    ``ring`` is the ring whose *left* ideals are the objects, i.e. the
    opposite ring for the right-hand category.
    """

    def __init__(self, ring: FiniteRing, side: str, objects, homs, source_ring: FiniteRing | None = None):
        self.ring = ring
        self.side = side
        self.source_ring = source_ring or ring
        self.objects: tuple[IdealObject, ...] = tuple(objects)
        self._index = {obj: i for i, obj in enumerate(self.objects)}
        self._homs: dict[tuple[int, int], tuple[Translation, ...]] = homs
        self._analysis: dict[Translation, MorphismAnalysis] = {}
        self._joins: dict[tuple[int, int], IdealObject | None] = {}
        self._meets: dict[tuple[int, int], IdealObject | None] = {}

    def __repr__(self):
        return f"Category({self.side}, {self.source_ring.label}, {len(self.objects)} objects)"

    # -- structure --------------------------------------------------------

    def index(self, obj: IdealObject) -> int:
        return self._index[obj]

    @property
    def top(self) -> IdealObject:
        return self.objects[-1]

    @property
    def bottom(self) -> IdealObject:
        return self.objects[0]

    def object_of(self, x: int) -> IdealObject:
        return self.objects[self._index[ideal_object(self.ring, x)]]

    def hom(self, a: IdealObject, b: IdealObject) -> tuple[Translation, ...]:
        return self._homs[self._index[a], self._index[b]]

    def morphisms(self) -> Iterator[Translation]:
        n = len(self.objects)
        for i in range(n):
            for j in range(n):
                yield from self._homs[i, j]

    @property
    def morphism_count(self) -> int:
        return sum(len(h) for h in self._homs.values())

    def label(self, obj: IdealObject) -> str:
        return obj.label(self.side)

    @cached_property
    def subobject_pairs(self) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
        """``(i, j, positions)`` for every strict containment ``objects[i] < objects[j]``.

        ``positions`` locates each element of the smaller object inside the
        larger one, so restricting a graph is a tuple lookup.
        """
        out = []
        for j, big in enumerate(self.objects):
            for i, small in enumerate(self.objects):
                if small < big:
                    out.append((i, j, tuple(big.index[x] for x in small.elements)))
        return tuple(out)

    # -- morphism constructors --------------------------------------------

    def make_morphism(self, a: IdealObject, s: int, b: IdealObject) -> Translation:
        f = translation(a, s, b)
        for g in self.hom(a, b):
            if g == f:
                return g
        raise AssertionError("translation missing from its hom-set")

    def identity(self, a: IdealObject) -> Translation:
        return identity(a)

    def inclusion(self, a: IdealObject, b: IdealObject) -> Translation:
        return inclusion(a, b)

    def zero_morphism(self, a: IdealObject, b: IdealObject) -> Translation:
        return zero_morphism(a, b)

    def find_retractions(self, b: IdealObject, a: IdealObject) -> list[Translation]:
        """All ``e: b -> a`` with ``inclusion(a, b) . e = 1_a``, by witness index."""
        j = inclusion(a, b)
        one = identity(a)
        return [e for e in self.hom(b, a) if compose(j, e) == one]

    def canonical_retraction(self, b: IdealObject, a: IdealObject) -> Translation | None:
        found = self.find_retractions(b, a)
        return found[0] if found else None

    # -- predicates -------------------------------------------------------

    def analyse(self, f: Translation) -> MorphismAnalysis:
        """Cancellation-based and Green-based answers for one morphism."""
        cached = self._analysis.get(f)
        if cached is not None:
            return cached
        a, b = f.dom, f.cod
        epi = True
        mono = True
        for c in self.objects:
            out = self.hom(b, c)
            if len({compose(f, g).graph for g in out}) != len(out):
                epi = False
            into = self.hom(c, a)
            if len({compose(g, f).graph for g in into}) != len(into):
                mono = False
        one_a, one_b = identity(a), identity(b)
        back = self.hom(b, a)
        split = any(compose(f, g) == one_a for g in back)
        iso = any(compose(f, g) == one_a and compose(g, f) == one_b for g in back)
        r, x = self.ring, f.value
        g_epi = green_L(r, x, b.generator)
        g_split = green_R(r, a.generator, x)
        result = MorphismAnalysis(f.is_surjective, epi, mono, split, iso, g_epi, g_split, g_split and g_epi)
        self._analysis[f] = result
        return result

    def is_epi(self, f: Translation, strict: bool = True) -> bool:
        an = self.analyse(f)
        if strict and an.surjective != an.epi:
            raise CriterionMismatch("epi (surjectivity)", f.label(), an.epi, an.surjective)
        if strict and an.green_epi != an.epi:
            raise CriterionMismatch("epi", f.label(), an.epi, an.green_epi)
        return an.epi

    def is_mono(self, f: Translation) -> bool:
        return self.analyse(f).mono

    def is_split_mono(self, f: Translation, strict: bool = True) -> bool:
        an = self.analyse(f)
        if strict and an.green_split_mono != an.split_mono:
            raise CriterionMismatch("split mono", f.label(), an.split_mono, an.green_split_mono)
        return an.split_mono

    def is_iso(self, f: Translation, strict: bool = True) -> bool:
        an = self.analyse(f)
        if strict and an.green_iso != an.iso:
            raise CriterionMismatch("iso", f.label(), an.iso, an.green_iso)
        return an.iso

    # -- factorizations ---------------------------------------------------

    def canonical_factorization(self, f: Translation) -> tuple[Translation, Translation]:
        return canonical_factorization(f)

    def image(self, f: Translation) -> IdealObject:
        return image(f)

    def epi_inclusion_factorizations(self, f: Translation) -> list[tuple[Translation, Translation]]:
        """Every ``(q, j)`` with ``q`` epi (by cancellation), ``j`` an inclusion and ``q . j = f``."""
        out = []
        for x in self.objects:
            if not x <= f.cod:
                continue
            j = inclusion(x, f.cod)
            for q in self.hom(f.dom, x):
                if compose(q, j) == f and self.analyse(q).epi:
                    out.append((q, j))
        return out

    def normal_factorization(self, f: Translation) -> tuple[Translation, Translation, Translation]:
        """First ``(e, u, j)`` with ``e`` a retraction, ``u`` an iso, ``j`` an inclusion.

        A retraction is onto and an isomorphism is bijective, so the middle
        objects must have the size of ``image(f)`` and the last one must be
        ``image(f)`` itself; other candidates are skipped.
        """
        img = image(f)
        y = self.objects[self._index[img]]
        j = inclusion(y, f.cod)
        for x in self.objects:
            if len(x) != len(y) or not x <= f.dom:
                continue
            for e in self.find_retractions(f.dom, x):
                for u in self.hom(x, y):
                    if self.analyse(u).iso and compose(compose(e, u), j) == f:
                        return e, u, j
        raise NoNormalFactorization(f.label())

    # -- lattice ----------------------------------------------------------

    def _bound(self, a: IdealObject, b: IdealObject, upper: bool) -> IdealObject | None:
        if upper:
            cands = [c for c in self.objects if a <= c and b <= c]
            best = [c for c in cands if all(c <= d for d in cands)]
        else:
            cands = [c for c in self.objects if c <= a and c <= b]
            best = [c for c in cands if all(d <= c for d in cands)]
        return best[0] if best else None

    def join(self, a: IdealObject, b: IdealObject) -> IdealObject:
        """Least principal ideal containing both (not literally ``Ra + Rb``)."""
        key = (self._index[a], self._index[b])
        if key not in self._joins:
            self._joins[key] = self._bound(a, b, upper=True)
        found = self._joins[key]
        if found is None:
            raise NoJoin(f"{self.label(a)} v {self.label(b)} does not exist")
        return found

    def meet(self, a: IdealObject, b: IdealObject) -> IdealObject:
        key = (self._index[a], self._index[b])
        if key not in self._meets:
            self._meets[key] = self._bound(a, b, upper=False)
        found = self._meets[key]
        if found is None:
            raise NoJoin(f"{self.label(a)} ^ {self.label(b)} does not exist")
        return found


def build_left_ideal_category(
    ring: FiniteRing,
    max_objects: int | None = None,
    max_morphisms: int | None = None,
    *,
    side: str = "left",
    source_ring: FiniteRing | None = None,
) -> Category:
    default_objects, default_morphisms = default_caps()
    max_objects = default_objects if max_objects is None else max_objects
    max_morphisms = default_morphisms if max_morphisms is None else max_morphisms

    distinct = {ideal_object(ring, a) for a in ring.elements}
    if len(distinct) > max_objects:
        raise SizeExceeded(f"{len(distinct)} objects exceeds cap {max_objects}")
    objects = sorted(distinct, key=lambda o: (len(o), o.elements))

    homs: dict[tuple[int, int], tuple[Translation, ...]] = {}
    total = 0
    for i, a in enumerate(objects):
        for j, b in enumerate(objects):
            seen: dict[tuple[int, ...], Translation] = {}
            for s in ring.elements:
                if ring.mul(a.generator, s) in b:
                    graph = tuple(ring.mul(x, s) for x in a.elements)
                    seen.setdefault(graph, Translation(a, b, s, graph))
            homs[i, j] = tuple(seen.values())
            total += len(seen)
            if total > max_morphisms:
                raise SizeExceeded(f"more than {max_morphisms} morphisms")
    return Category(ring, side, objects, homs, source_ring)


def build_right_ideal_category(
    ring: FiniteRing, max_objects: int | None = None, max_morphisms: int | None = None
) -> Category:
    return build_left_ideal_category(
        opposite_ring(ring), max_objects, max_morphisms, side="right", source_ring=ring
    )


def build_category(ring: FiniteRing, side: str = "left", **caps) -> Category:
    if side == "left":
        return build_left_ideal_category(ring, **caps)
    if side == "right":
        return build_right_ideal_category(ring, **caps)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
