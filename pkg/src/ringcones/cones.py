"""Cones over an ideal category and the ring of proper cones.

A cone assigns to every object ``c`` a morphism ``c -> vertex`` such that
restricting the component at ``c`` to a subobject ``c'`` gives the component
at ``c'``.  Since the ring is unital, the component at the top object ``R``
determines the whole cone; components are still stored in full so that the
compatibility condition can be checked directly.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property

from .category import (
    Category,
    IdealObject,
    Translation,
    add_morphisms,
    canonical_factorization,
    compose,
    image,
    inclusion,
    negate_morphism,
    zero_morphism,
)
from .errors import DomainMismatch, NoRetraction, NotProper, NoUniqueMax, RRViolation, SizeExceeded
from .report import VerificationReport
from .ring import FiniteRing, table_axiom_checks

DEFAULT_MAX_CONES = 20_000


class NotACone(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Cone:
    category: Category = field(repr=False)
    vertex: IdealObject
    components: tuple[Translation, ...]

    def __post_init__(self):
        cat = self.category
        if len(self.components) != len(cat.objects):
            raise NotACone("one component per object is required")
        for obj, comp in zip(cat.objects, self.components):
            if comp.dom != obj or comp.cod != self.vertex:
                raise NotACone(f"component {comp.label()} is not a morphism {cat.label(obj)} -> {cat.label(self.vertex)}")
        for i, j, positions in cat.subobject_pairs:
            big = self.components[j].graph
            if tuple(big[p] for p in positions) != self.components[i].graph:
                raise NotACone(f"components at {cat.label(cat.objects[i])} and {cat.label(cat.objects[j])} disagree")

    @cached_property
    def _key(self):
        return (self.vertex.elements, tuple(c.graph for c in self.components))

    def __eq__(self, other):
        return isinstance(other, Cone) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __call__(self, obj: IdealObject) -> Translation:
        return self.components[self.category.index(obj)]

    @property
    def top(self) -> Translation:
        return self.components[-1]

    @property
    def sort_key(self):
        return (self.vertex.generator, self.top.graph)

    def __repr__(self):
        return f"Cone<{cone_id(self)}>"


def cone_id(cone: Cone) -> str:
    return f"cone({cone.vertex.generator};{cone.top.canonical_witness})"


@dataclass(frozen=True)
class MSet:
    cone: Cone
    objects: tuple[IdealObject, ...]

    def __bool__(self):
        return bool(self.objects)


def cone_from_top(cat: Category, top: Translation) -> Cone:
    comps = tuple(compose(inclusion(c, cat.top), top) for c in cat.objects)
    return Cone(cat, top.cod, comps)


def m_set(cone: Cone) -> MSet:
    cat = cone.category
    return MSet(cone, tuple(c for c, f in zip(cat.objects, cone.components) if cat.is_epi(f)))


def is_proper(cone: Cone) -> bool:
    return bool(m_set(cone))


def is_normal(cone: Cone) -> bool:
    cat = cone.category
    return any(cat.is_iso(f, strict=False) for f in cone.components)


def default_cone_cap() -> int:
    return int(os.environ.get("RINGCONES_MAX_CONES", DEFAULT_MAX_CONES))


def enumerate_cones(cat: Category, max_cones: int | None = None) -> list[Cone]:
    """All cones, one per morphism out of the top object."""
    cap = default_cone_cap() if max_cones is None else max_cones
    cones = []
    for d in cat.objects:
        for top in cat.hom(cat.top, d):
            cones.append(cone_from_top(cat, top))
            if len(cones) > cap:
                raise SizeExceeded(f"more than {cap} cones")
    cones.sort(key=lambda c: c.sort_key)
    return cones


def enumerate_proper_cones(cat: Category, max_cones: int | None = None) -> list[Cone]:
    return [c for c in enumerate_cones(cat, max_cones) if is_proper(c)]


def enumerate_cones_bruteforce(cat: Category, max_assignments: int = 2_000_000) -> list[Cone]:
    """Search over every assignment of one morphism per object.

    Independent of :func:`enumerate_cones`: nothing assumes the top component
    determines the rest.  Compatibility is tested by literal composition with
    inclusions.  Objects are sorted by size, so subobjects are assigned first.
    """
    objs = cat.objects
    below = [[i for i in range(k) if objs[i] < objs[k]] for k in range(len(objs))]
    found = []
    for d in objs:
        options = [cat.hom(c, d) for c in objs]
        space = 1
        for o in options:
            space *= len(o)
        if space > max_assignments:
            raise SizeExceeded(f"{space} assignments for vertex {cat.label(d)}")
        chosen: list[Translation] = []

        def extend(k: int) -> None:
            if k == len(objs):
                found.append(Cone(cat, d, tuple(chosen)))
                return
            for g in options[k]:
                if all(compose(inclusion(objs[i], objs[k]), g) == chosen[i] for i in below[k]):
                    chosen.append(g)
                    extend(k + 1)
                    chosen.pop()

        extend(0)
    found.sort(key=lambda c: c.sort_key)
    return found


def principal_cone(cat: Category, d: IdealObject) -> Cone:
    """Right translation by the canonical generator of ``d`` on every object."""
    return Cone(cat, d, tuple(cat.make_morphism(c, d.generator, d) for c in cat.objects))


def zero_cone(cat: Category) -> Cone:
    zero = cat.bottom
    return Cone(cat, zero, tuple(zero_morphism(c, zero) for c in cat.objects))


def negate(cone: Cone) -> Cone:
    return Cone(cone.category, cone.vertex, tuple(negate_morphism(f) for f in cone.components))


def star(cone: Cone, f: Translation) -> Cone:
    """Post-compose every component with the epi part of ``f``."""
    if f.dom != cone.vertex:
        raise DomainMismatch(f"{f.label()} does not start at the vertex of {cone_id(cone)}")
    epi, _ = canonical_factorization(f)
    cat = cone.category
    vertex = cat.objects[cat.index(epi.cod)]
    return Cone(cat, vertex, tuple(compose(g, epi) for g in cone.components))


def multiply(gamma: Cone, eta: Cone) -> Cone:
    if gamma.category is not eta.category:
        raise DomainMismatch("cones live in different categories")
    return star(gamma, eta(gamma.vertex))


def max_image(cone: Cone) -> IdealObject:
    images = {image(f) for f in cone.components}
    greatest = [d for d in images if all(e <= d for e in images)]
    if len(greatest) != 1:
        maximal = sorted(d.generator for d in images if not any(d < e for e in images))
        raise NoUniqueMax(f"{cone_id(cone)}: maximal images generated by {maximal}")
    cat = cone.category
    return cat.objects[cat.index(greatest[0])]


def star_reduce(cone: Cone, retraction: Translation | None = None) -> Cone:
    """Push the cone onto its largest image along a retraction.

    The canonical retraction (smallest witness) is used unless one is given.
    """
    cat = cone.category
    d0 = max_image(cone)
    if retraction is None:
        retraction = cat.canonical_retraction(cone.vertex, d0)
        if retraction is None:
            raise NoRetraction(f"inclusion {cat.label(d0)} -> {cat.label(cone.vertex)} does not split")
    elif retraction.dom != cone.vertex or retraction.cod != d0 or compose(inclusion(d0, cone.vertex), retraction).graph != d0.elements:
        raise NoRetraction(f"{retraction.label()} is not a retraction onto {cat.label(d0)}")
    return Cone(cat, d0, tuple(compose(f, retraction) for f in cone.components))


def star_reductions(cone: Cone) -> list[Cone]:
    """The reduction under every available retraction, in witness order."""
    cat = cone.category
    d0 = max_image(cone)
    return [star_reduce(cone, e) for e in cat.find_retractions(cone.vertex, d0)]


def direct_sum(gamma: Cone, delta: Cone) -> Cone:
    cat = gamma.category
    c, d = gamma.vertex, delta.vertex
    top = cat.join(c, d)
    jc, jd = inclusion(c, top), inclusion(d, top)
    comps = tuple(add_morphisms(compose(g, jc), compose(h, jd)) for g, h in zip(gamma.components, delta.components))
    return Cone(cat, top, comps)


def add(gamma: Cone, delta: Cone) -> Cone:
    for cone in (gamma, delta):
        if not is_proper(cone):
            raise NotProper(f"{cone_id(cone)} is not proper")
    return star_reduce(direct_sum(gamma, delta))


@dataclass
class ConeRing:
    category: Category = field(repr=False)
    elements: list[Cone]
    add_table: list[list[int]]
    mul_table: list[list[int]]
    neg_table: list[int]
    zero: int
    one: int | None
    report: VerificationReport

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def ok(self) -> bool:
        return self.report.passed

    def index(self, cone: Cone) -> int:
        return self.elements.index(cone)

    def to_finite_ring(self) -> FiniteRing:
        if self.one is None:
            raise ValueError("the ring of proper cones has no multiplicative identity")
        if not self.ok:
            raise ValueError("the ring of proper cones failed its axiom checks")
        label = f"PL({self.category.source_ring.label})"
        names = tuple(cone_id(c) for c in self.elements)
        return FiniteRing(self.add_table, self.mul_table, self.zero, self.one, label, names)


def build_cone_ring(cat: Category, max_cones: int | None = None) -> ConeRing:
    """Tables of ``+`` and ``*`` over all proper cones, with a full axiom sweep.

    Raises :class:`RRViolation` when the category fails the RR checks.
    """
    from .lattice import check_rr_conditions

    rr = check_rr_conditions(cat)
    if not rr.passed:
        raise RRViolation(rr)
    elements = enumerate_proper_cones(cat, max_cones)
    n = len(elements)
    if n > 256:
        raise SizeExceeded(f"{n} proper cones exceeds the ring table cap")
    index = {c: i for i, c in enumerate(elements)}
    report = VerificationReport(f"cone-ring[{cat.source_ring.label}/{cat.side}]")

    closure = {"add": None, "mul": None, "neg": None}
    add_t = [[-1] * n for _ in range(n)]
    mul_t = [[-1] * n for _ in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        s = index.get(add(elements[i], elements[j]))
        p = index.get(multiply(elements[i], elements[j]))
        if s is None and closure["add"] is None:
            closure["add"] = {"x": i, "y": j}
        if p is None and closure["mul"] is None:
            closure["mul"] = {"x": i, "y": j}
        add_t[i][j] = -1 if s is None else s
        mul_t[i][j] = -1 if p is None else p
    neg_t = []
    for i, c in enumerate(elements):
        k = index.get(negate(c))
        if k is None and closure["neg"] is None:
            closure["neg"] = {"x": i}
        neg_t.append(-1 if k is None else k)
    zero = index.get(zero_cone(cat), -1)

    report.add("cones.closed.add", "sum of proper cones is a proper cone", closure["add"])
    report.add("cones.closed.mul", "product of proper cones is a proper cone", closure["mul"])
    report.add("cones.closed.neg", "negative of a proper cone is a proper cone", closure["neg"])
    report.add("cones.zero", "the zero cone is proper", None if zero >= 0 else {"zero_cone": "missing"})
    one = None
    if not report.failures():
        table_axiom_checks(report, add_t, mul_t, zero, None, prefix="cones")
        report.add(
            "cones.neg.table",
            "negating every component gives the additive inverse",
            next(({"x": i} for i in range(n) if add_t[i][neg_t[i]] != zero), None),
        )
        one = next(
            (e for e in range(n) if all(mul_t[e][x] == x == mul_t[x][e] for x in range(n))),
            None,
        )
        report.info("cones.unit", "multiplicative identity among proper cones", {"index": one, "cone": None if one is None else cone_id(elements[one])})
    return ConeRing(cat, elements, add_t, mul_t, neg_t, zero, one, report)
