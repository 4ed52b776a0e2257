"""Exhaustive check suites over a finite ideal category.

Every suite returns a :class:`VerificationReport`; a failing check carries
the first counterexample in canonical enumeration order (objects by size,
morphisms by witness, cones by vertex generator then top component).
"""
from __future__ import annotations

import itertools
import time
from typing import Callable, Iterable

from .category import (
    Category,
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
from .cones import (
    NotACone,
    add,
    build_cone_ring,
    cone_id,
    direct_sum,
    enumerate_cones,
    enumerate_cones_bruteforce,
    is_normal,
    is_proper,
    m_set,
    max_image,
    multiply,
    negate,
    principal_cone,
    star,
    star_reduce,
    star_reductions,
    zero_cone,
)
from .errors import NoJoin, NoNormalFactorization, NoRetraction, NoUniqueMax, RRViolation, SkippedNotNormal
from .lattice import check_rr_conditions
from .report import VerificationReport
from .ring import FiniteRing, verify_ring_axioms

SUITES = ("category", "preadditive", "proper", "normal", "tc", "green", "cones", "ring")


def _first(items: Iterable, bad: Callable):
    """Witness from the first item for which ``bad`` returns a non-None value."""
    for item in items:
        w = bad(item)
        if w is not None:
            return w
    return None


def _name(cat: Category, suite: str) -> str:
    return f"{suite}[{cat.source_ring.label}/{cat.side}]"


def _timed(fn):
    def wrapper(cat, *args, **kwargs):
        start = time.perf_counter()
        report = fn(cat, *args, **kwargs)
        report.wall_time = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _composable_pairs(cat: Category):
    for a, b, c in itertools.product(cat.objects, repeat=3):
        for f in cat.hom(a, b):
            for g in cat.hom(b, c):
                yield f, g


# -- category with subobjects ----------------------------------------------


def _subobject_checks(report: VerificationReport, cat: Category, prefix: str) -> None:
    objs = cat.objects
    incl = [f for f in cat.morphisms() if is_inclusion(f)]

    def preorder_bad(pair):
        a, b = pair
        found = [f for f in cat.hom(a, b) if is_inclusion(f)]
        if len(found) != (1 if a <= b else 0):
            return {"from": cat.label(a), "to": cat.label(b), "inclusions": len(found)}
        if a <= b and b <= a and a != b:
            return {"from": cat.label(a), "to": cat.label(b), "reason": "non-identity isomorphic inclusion"}
        return None

    report.add(
        f"{prefix}.preorder",
        "inclusions form a strict preorder on all objects (one per containment, identities included)",
        _first(itertools.product(objs, repeat=2), preorder_bad),
    )
    report.add(
        f"{prefix}.closed",
        "composites of inclusions are inclusions",
        _first(
            ((f, g) for f in incl for g in incl if f.cod == g.dom),
            lambda p: None if is_inclusion(compose(*p)) else {"f": p[0].label(), "g": p[1].label()},
        ),
    )
    report.add(
        f"{prefix}.mono",
        "every inclusion is a monomorphism",
        _first(incl, lambda f: None if cat.is_mono(f) else {"inclusion": f.label()}),
    )

    def factor_bad(pair):
        j1, j2 = pair
        for h in cat.hom(j1.dom, j2.dom):
            if compose(h, j2) == j1 and not is_inclusion(h):
                return {"j1": j1.label(), "j2": j2.label(), "h": h.label()}
        return None

    report.add(
        f"{prefix}.factor",
        "if j1 = h.j2 with j1, j2 inclusions then h is an inclusion",
        _first(((j1, j2) for j1 in incl for j2 in incl if j1.cod == j2.cod), factor_bad),
    )


def _inclusions_split(report: VerificationReport, cat: Category, claim: str) -> None:
    def bad(pair):
        a, b = pair
        if a <= b and not cat.find_retractions(b, a):
            return {"sub": cat.label(a), "object": cat.label(b)}
        return None

    report.add(claim, "every inclusion has a retraction", _first(itertools.product(cat.objects, repeat=2), bad))


@_timed
def verify_category(cat: Category) -> VerificationReport:
    """Category axioms and the subobject structure of the ideal category."""
    report = VerificationReport(_name(cat, "category"))
    ring = cat.ring

    def object_bad(obj):
        if obj.element_set != ring.left_ideal(obj.generator):
            return {"object": cat.label(obj), "reason": "elements differ from R*generator"}
        if obj.generator != min(g for g in ring.elements if ring.left_ideal(g) == obj.element_set):
            return {"object": cat.label(obj), "reason": "generator not minimal"}
        return None

    distinct = {ring.left_ideal(a) for a in ring.elements}
    report.add(
        "cat.objects",
        "objects are exactly the distinct principal left ideals, with minimal generators",
        _first(cat.objects, object_bad)
        or (None if len(distinct) == len(cat.objects) else {"expected": len(distinct), "got": len(cat.objects)}),
    )

    def hom_bad(pair):
        a, b = pair
        expected = {
            tuple(ring.mul(x, s) for x in a.elements) for s in ring.elements if ring.mul(a.generator, s) in b
        }
        got = [f.graph for f in cat.hom(a, b)]
        if len(set(got)) != len(got) or set(got) != expected:
            return {"from": cat.label(a), "to": cat.label(b), "expected": len(expected), "got": len(got)}
        return None

    report.add(
        "cat.hom",
        "each hom-set is the deduplicated set of right translations x -> xs with as in Rb",
        _first(itertools.product(cat.objects, repeat=2), hom_bad),
    )

    def translation_bad(f):
        if not all(y in f.cod for y in f.graph):
            return {"morphism": f.label(), "reason": "leaves codomain"}
        for i, x in enumerate(f.dom.elements):
            if f.graph[i] != ring.mul(x, f.witness):
                return {"morphism": f.label(), "reason": "graph is not x -> x*s", "x": x}
        for x, y in itertools.product(f.dom.elements, repeat=2):
            if f(ring.add(x, y)) != ring.add(f(x), f(y)):
                return {"morphism": f.label(), "reason": "not additive", "x": x, "y": y}
        return None

    report.add("cat.translations", "every morphism is an additive map into its codomain", _first(cat.morphisms(), translation_bad))

    def identity_bad(f):
        if compose(identity(f.dom), f) != f or compose(f, identity(f.cod)) != f:
            return {"morphism": f.label()}
        return None

    ident_missing = _first(cat.objects, lambda a: None if identity(a) in cat.hom(a, a) else {"object": cat.label(a)})
    report.add("cat.identity", "identities exist and are two-sided units", ident_missing or _first(cat.morphisms(), identity_bad))

    def rule_bad(pair):
        f, g = pair
        fg = compose(f, g)
        for s, t in ((f.witness, g.witness), (f.canonical_witness, g.canonical_witness)):
            if fg != translation(f.dom, ring.mul(s, t), g.cod):
                return {"f": f.label(), "g": g.label()}
        return None

    report.add("cat.composition", "rho(a,s,b).rho(b,t,c) = rho(a,st,c) and lies in the hom-set", _first(_composable_pairs(cat), rule_bad))

    def assoc_bad(pair):
        f, g = pair
        fg = compose(f, g)
        for h in itertools.chain.from_iterable(cat.hom(g.cod, c) for c in cat.objects):
            if compose(fg, h) != compose(f, compose(g, h)):
                return {"f": f.label(), "g": g.label(), "h": h.label()}
        return None

    report.add("cat.assoc", "composition is associative on all composable triples", _first(_composable_pairs(cat), assoc_bad))
    _subobject_checks(report, cat, "sub")

    def image_bad(f):
        epi, j = canonical_factorization(f)
        if image(f).element_set != f.range_set:
            return {"morphism": f.label(), "reason": "image differs from range"}
        if compose(epi, j) != f:
            return {"morphism": f.label(), "reason": "factorization does not recompose"}
        return None

    report.add("cat.image", "image is the range R(as) and the canonical factorization recomposes", _first(cat.morphisms(), image_bad))
    return report


@_timed
def verify_preadditive(cat: Category) -> VerificationReport:
    report = VerificationReport(_name(cat, "preadditive"))
    ring = cat.ring
    pairs = list(itertools.product(cat.objects, repeat=2))

    def group_bad(pair):
        a, b = pair
        hom = cat.hom(a, b)
        members = set(hom)
        zero = zero_morphism(a, b)
        if zero not in members:
            return {"hom": [cat.label(a), cat.label(b)], "reason": "no zero morphism"}
        for f in hom:
            if negate_morphism(f) not in members or add_morphisms(f, negate_morphism(f)) != zero:
                return {"hom": [cat.label(a), cat.label(b)], "reason": "inverse", "f": f.label()}
            if add_morphisms(f, zero) != f:
                return {"hom": [cat.label(a), cat.label(b)], "reason": "identity", "f": f.label()}
            for g in hom:
                fg = add_morphisms(f, g)
                if fg not in members:
                    return {"hom": [cat.label(a), cat.label(b)], "reason": "closure", "f": f.label(), "g": g.label()}
                if fg != add_morphisms(g, f):
                    return {"hom": [cat.label(a), cat.label(b)], "reason": "commutativity", "f": f.label(), "g": g.label()}
                if fg != translation(a, ring.add(f.witness, g.witness), b):
                    return {"hom": [cat.label(a), cat.label(b)], "reason": "rho(a,s,b)+rho(a,t,b) != rho(a,s+t,b)", "f": f.label(), "g": g.label()}
                for h in hom:
                    if add_morphisms(fg, h) != add_morphisms(f, add_morphisms(g, h)):
                        return {"hom": [cat.label(a), cat.label(b)], "reason": "associativity", "f": f.label(), "g": g.label(), "h": h.label()}
        return None

    report.add("pre.hom_group", "every hom-set is an abelian group under pointwise addition", _first(pairs, group_bad))

    def bilinear_bad(triple):
        a, b, c = triple
        left, right = cat.hom(a, b), cat.hom(b, c)
        for f in left:
            for g, h in itertools.product(right, repeat=2):
                if compose(f, add_morphisms(g, h)) != add_morphisms(compose(f, g), compose(f, h)):
                    return {"side": "left", "f": f.label(), "g": g.label(), "h": h.label()}
        for g in right:
            for f, h in itertools.product(left, repeat=2):
                if compose(add_morphisms(f, h), g) != add_morphisms(compose(f, g), compose(h, g)):
                    return {"side": "right", "f": f.label(), "h": h.label(), "g": g.label()}
        return None

    report.add("pre.bilinear", "composition is bilinear", _first(itertools.product(cat.objects, repeat=3), bilinear_bad))

    z = cat.bottom
    report.add(
        "pre.zero_object",
        "the zero ideal is initial and terminal",
        _first(
            cat.objects,
            lambda a: None if len(cat.hom(a, z)) == 1 and len(cat.hom(z, a)) == 1 else {"object": cat.label(a)},
        ),
    )
    report.add(
        "pre.zero_arrow",
        "the zero morphism a -> b is the composite through the zero object",
        _first(
            pairs,
            lambda p: None
            if compose(cat.hom(p[0], z)[0], cat.hom(z, p[1])[0]) == zero_morphism(*p)
            else {"from": cat.label(p[0]), "to": cat.label(p[1])},
        ),
    )
    return report


@_timed
def verify_proper_category(cat: Category) -> VerificationReport:
    report = VerificationReport(_name(cat, "proper"))
    _inclusions_split(report, cat, "proper.split")

    def factor_bad(f):
        epi, j = canonical_factorization(f)
        if not (cat.analyse(epi).epi and is_inclusion(j) and compose(epi, j) == f):
            return {"morphism": f.label()}
        return None

    report.add("proper.factorization", "every morphism is an epi followed by an inclusion", _first(cat.morphisms(), factor_bad))

    def unique_bad(f):
        epi, j = canonical_factorization(f)
        found = cat.epi_inclusion_factorizations(f)
        if found != [(epi, j)]:
            return {"morphism": f.label(), "factorizations": [[q.label(), k.label()] for q, k in found]}
        return None

    report.add("proper.unique", "the epi-inclusion factorization is unique", _first(cat.morphisms(), unique_bad))

    def cone_bad(d):
        cone = principal_cone(cat, d)
        if not (is_proper(cone) and cat.is_epi(cone(cat.top))):
            return {"vertex": cat.label(d)}
        return None

    report.add("proper.vertex", "each object is the vertex of a proper (principal) cone", _first(cat.objects, cone_bad))
    return report


@_timed
def verify_normal_category(cat: Category) -> VerificationReport:
    report = VerificationReport(_name(cat, "normal"))
    _subobject_checks(report, cat, "normal.subobjects")
    _inclusions_split(report, cat, "normal.split")

    def nf_bad(f):
        try:
            cat.normal_factorization(f)
        except NoNormalFactorization:
            return {"morphism": f.label()}
        return None

    report.add("normal.factorization", "every morphism is retraction . isomorphism . inclusion", _first(cat.morphisms(), nf_bad))
    cones = enumerate_cones(cat)

    def vertex_bad(a):
        one = identity(a)
        if any(c.vertex == a and c(a) == one and is_normal(c) for c in cones):
            return None
        return {"vertex": cat.label(a)}

    report.add("normal.vertex", "each object a is the vertex of a normal cone with identity component at a", _first(cat.objects, vertex_bad))
    report.info("normal.regular_ring", "underlying ring is von Neumann regular", {"regular": cat.ring.is_von_neumann_regular()})
    return report


@_timed
def verify_tc_regular(cat: Category, normal: VerificationReport | None = None) -> VerificationReport:
    """Normal cones form a regular semigroup; requires a normal category."""
    normal = normal or verify_normal_category(cat)
    if not normal.passed:
        raise SkippedNotNormal(f"{cat.source_ring.label}: category is not normal")
    report = VerificationReport(_name(cat, "tc"))
    tc = [c for c in enumerate_cones(cat) if is_normal(c)]
    tc_set = set(tc)
    report.add(
        "tc.closed",
        "products of normal cones are normal",
        _first(itertools.product(tc, repeat=2), lambda p: None if multiply(*p) in tc_set else {"x": cone_id(p[0]), "y": cone_id(p[1])}),
    )

    def regular_bad(gamma):
        if any(multiply(multiply(gamma, eta), gamma) == gamma for eta in tc):
            return None
        return {"cone": cone_id(gamma)}

    report.add("tc.regular", "every normal cone g has a normal h with g.h.g = g", _first(tc, regular_bad))
    report.info("tc.size", "number of normal cones", {"count": len(tc)})
    return report


@_timed
def verify_green_characterization(cat: Category) -> VerificationReport:
    report = VerificationReport(_name(cat, "green"))
    ring = cat.ring
    morphisms = list(cat.morphisms())

    def witness(f, an):
        return {
            "morphism": f.label(),
            "a": f.dom.generator,
            "as": f.value,
            "b": f.cod.generator,
            "brute": {"epi": an.epi, "split_mono": an.split_mono, "iso": an.iso, "surjective": an.surjective},
            "green": {"epi": an.green_epi, "split_mono": an.green_split_mono, "iso": an.green_iso},
        }

    for claim, statement, key in (
        ("green.surjective", "epi by cancellation iff surjective", "epi-surjective"),
        ("green.epi", "epi iff as L b", "epi"),
        ("green.split_mono", "split mono iff a R as", "split_mono"),
        ("green.iso", "iso iff a R as L b", "iso"),
    ):
        report.add(
            claim,
            statement,
            _first(morphisms, lambda f: witness(f, cat.analyse(f)) if key in cat.analyse(f).mismatches() else None),
        )
    report.info(
        "green.identities",
        "identity morphisms are isomorphisms by both tests",
        {"all": all(cat.analyse(identity(a)).iso and cat.analyse(identity(a)).green_iso for a in cat.objects)},
    )
    report.info("green.morphisms", "morphisms examined", {"count": len(morphisms), "commutative": ring.is_commutative()})
    return report


# -- cones -----------------------------------------------------------------


def _try(fn, *args):
    try:
        return fn(*args), None
    except (NoUniqueMax, NoRetraction, NoJoin, NotACone) as exc:
        return None, f"{type(exc).__name__}: {exc}"


@_timed
def verify_cone_calculus(cat: Category, oracle_limit: int = 2_000_000) -> VerificationReport:
    """Star operation, multiplication, reduction and direct sums on every cone."""
    report = VerificationReport(_name(cat, "cones"))
    cones = enumerate_cones(cat)
    proper = [c for c in cones if is_proper(c)]
    report.info("cones.count", "cones and proper cones", {"cones": len(cones), "proper": len(proper)})

    try:
        brute = enumerate_cones_bruteforce(cat, oracle_limit)
    except Exception as exc:  # SizeExceeded on large categories
        report.skip("cones.oracle", "top-component enumeration equals full assignment search", str(exc))
    else:
        missing = [cone_id(c) for c in brute if c not in set(cones)]
        extra = [cone_id(c) for c in cones if c not in set(brute)]
        report.add(
            "cones.oracle",
            "top-component enumeration equals full assignment search",
            None if brute == cones else {"only_bruteforce": missing[:5], "only_top": extra[:5]},
        )

    def compat_bad(cone):
        for i, j, _ in cat.subobject_pairs:
            a, b = cat.objects[i], cat.objects[j]
            if compose(inclusion(a, b), cone(b)) != cone(a):
                return {"cone": cone_id(cone), "sub": cat.label(a), "object": cat.label(b)}
        return None

    report.add("cones.compatible", "j(c',c).g(c) = g(c') for every cone and containment", _first(cones, compat_bad))
    report.add(
        "cones.normal_proper",
        "every normal cone is proper",
        _first(cones, lambda c: {"cone": cone_id(c)} if is_normal(c) and not is_proper(c) else None),
    )
    report.add(
        "cones.principal",
        "principal cones are proper with an epi top component",
        _first(cat.objects, lambda d: None if is_proper(principal_cone(cat, d)) and cat.is_epi(principal_cone(cat, d).top) else {"vertex": cat.label(d)}),
    )

    def out_of(obj):
        return itertools.chain.from_iterable(cat.hom(obj, c) for c in cat.objects)

    def star_bad(gamma):
        ms = set(m_set(gamma).objects)
        for f in out_of(gamma.vertex):
            s = star(gamma, f)
            if s.vertex != image(f) or not ms <= set(m_set(s).objects):
                return {"cone": cone_id(gamma), "f": f.label()}
            c1 = image(f)
            for g in out_of(f.cod):
                if star(gamma, compose(f, g)) != star(s, compose(inclusion(c1, f.cod), g)):
                    return {"cone": cone_id(gamma), "f": f.label(), "g": g.label()}
        return None

    report.add(
        "star.law",
        "g*(fg)o = (g*fo)*(j.g)o, with vertex im f and M-set growing",
        _first(proper, star_bad),
    )

    proper_set = set(proper)
    products = {(i, j): multiply(x, y) for (i, x), (j, y) in itertools.product(enumerate(proper), repeat=2)}
    report.add(
        "mul.closed",
        "the product of proper cones is proper",
        _first(products.items(), lambda kv: None if kv[1] in proper_set else {"x": cone_id(proper[kv[0][0]]), "y": cone_id(proper[kv[0][1]])}),
    )
    index = {c: i for i, c in enumerate(proper)}

    def assoc_bad(triple):
        i, j, k = triple
        ij, jk = products[i, j], products[j, k]
        if ij not in index or jk not in index:
            return {"x": cone_id(proper[i]), "y": cone_id(proper[j]), "z": cone_id(proper[k]), "reason": "not closed"}
        if products[index[ij], k] != products[i, index[jk]]:
            return {"x": cone_id(proper[i]), "y": cone_id(proper[j]), "z": cone_id(proper[k])}
        return None

    report.add("mul.assoc", "multiplication of proper cones is associative", _first(itertools.product(range(len(proper)), repeat=3), assoc_bad))

    def idem_bad(i):
        g = proper[i]
        idem = products[i, i] == g
        crit = g(g.vertex) == identity(g.vertex)
        return None if idem == crit else {"cone": cone_id(g), "idempotent": idem, "identity_at_vertex": crit}

    report.add("mul.idempotents", "g.g = g iff the component at the vertex is the identity", _first(range(len(proper)), idem_bad))
    g0 = zero_cone(cat)
    report.add(
        "mul.zero",
        "the zero cone absorbs on both sides",
        _first(proper, lambda g: None if multiply(g0, g) == g0 and multiply(g, g0) == g0 else {"cone": cone_id(g)}),
    )

    def max_bad(cone):
        d0, err = _try(max_image, cone)
        if err:
            return {"cone": cone_id(cone), "error": err}
        if not all(image(f) <= d0 for f in cone.components):
            return {"cone": cone_id(cone), "reason": "not an upper bound"}
        if is_proper(cone) and d0 != cone.vertex:
            return {"cone": cone_id(cone), "reason": "proper cone with max image below vertex"}
        return None

    report.add("max.unique", "every cone's images have a unique maximum, the vertex for proper cones", _first(cones, max_bad))

    reduced = {}
    for cone in cones:
        reduced[cone] = _try(star_reduce, cone)

    def reduce_bad(cone):
        r, err = reduced[cone]
        if err:
            return {"cone": cone_id(cone), "error": err}
        return None if is_proper(r) else {"cone": cone_id(cone)}

    report.add("reduce.proper", "the reduction of every cone is a proper cone", _first(cones, reduce_bad))
    report.add(
        "reduce.fixes_proper",
        "the reduction leaves proper cones unchanged",
        _first(proper, lambda c: None if reduced[c][0] == c else {"cone": cone_id(c)}),
    )
    report.add(
        "reduce.idempotent",
        "reducing twice equals reducing once",
        _first(cones, lambda c: None if reduced[c][0] is None or star_reduce(reduced[c][0]) == reduced[c][0] else {"cone": cone_id(c)}),
    )

    def lemma3_bad(cone):
        r = reduced[cone][0]
        if r is None:
            return None
        d0 = r.vertex
        tops = [obj for obj, f in zip(cat.objects, cone.components) if image(f) == d0]
        if not any(cat.is_epi(r(obj)) for obj in tops):
            return {"cone": cone_id(cone)}
        return None

    report.add(
        "reduce.epi_at_witness",
        "the reduced component is epi at every object whose image is the maximum",
        _first(cones, lemma3_bad),
    )
    non_epi = _first(
        (r for r, _ in reduced.values() if r is not None),
        lambda r: next(({"cone": cone_id(r), "object": cat.label(o)} for o, f in zip(cat.objects, r.components) if not cat.is_epi(f)), None),
    )
    report.info("reduce.all_components_epi", "every component of every reduced cone is epi (universal form)", {"holds": non_epi is None, "witness": non_epi})

    def lemma4_bad(pair):
        gamma, beta = pair
        lhs, err = _try(star_reduce, multiply(gamma, beta))
        rb, err2 = _try(star_reduce, beta)
        if err or err2:
            return {"gamma": cone_id(gamma), "beta": cone_id(beta), "error": err or err2}
        if lhs != multiply(gamma, rb):
            return {"gamma": cone_id(gamma), "beta": cone_id(beta)}
        return None

    report.add(
        "reduce.product",
        "(g.b)* = g.b* for proper g and every cone b",
        _first(itertools.product(proper, cones), lemma4_bad),
    )

    sweep = {"cones": 0, "retractions": 0, "coincide": True, "witness": None}
    for cone in cones:
        options, err = _try(star_reductions, cone)
        if err:
            continue
        sweep["cones"] += 1
        sweep["retractions"] += len(options)
        if len(set(options)) > 1 and sweep["coincide"]:
            sweep["coincide"] = False
            sweep["witness"] = {"cone": cone_id(cone), "distinct_results": len(set(options))}
    report.info("reduce.retraction_choice", "the reduction is independent of the chosen retraction", sweep)

    def sum_bad(pair):
        gamma, delta = pair
        s, err = _try(direct_sum, gamma, delta)
        if err:
            return {"gamma": cone_id(gamma), "delta": cone_id(delta), "error": err}
        if s.vertex != cat.join(gamma.vertex, delta.vertex):
            return {"gamma": cone_id(gamma), "delta": cone_id(delta), "reason": "vertex"}
        if gamma.vertex == delta.vertex:
            expected = tuple(add_morphisms(f, g) for f, g in zip(gamma.components, delta.components))
            if s.components != expected:
                return {"gamma": cone_id(gamma), "delta": cone_id(delta), "reason": "same-vertex sum is not componentwise"}
        return None

    report.add("sum.cone", "the direct sum is a cone at the join, componentwise for equal vertices", _first(itertools.product(cones, repeat=2), sum_bad))
    report.add(
        "sum.zero",
        "g (+) zero cone = g",
        _first(cones, lambda g: None if direct_sum(g, g0) == g else {"cone": cone_id(g)}),
    )
    return report


@_timed
def verify_cone_ring(cat: Category) -> VerificationReport:
    """RR conditions, then the ring of proper cones with its full axiom sweep."""
    report = VerificationReport(_name(cat, "ring"))
    rr = check_rr_conditions(cat)
    report.extend(rr)
    try:
        cr = build_cone_ring(cat)
    except RRViolation as exc:
        first = exc.report.failures()[0]
        report.add("ring.build", "the ring of proper cones can be built", {"refused": "RRViolation", "claim": first.claim, "witness": first.witness})
        return report
    except (NoRetraction, NoUniqueMax, NoJoin) as exc:
        report.add("ring.build", "the ring of proper cones can be built", {"error": f"{type(exc).__name__}: {exc}"})
        return report
    report.add("ring.build", "the ring of proper cones can be built")
    report.extend(cr.report)

    g0 = zero_cone(cat)
    cones = cr.elements
    report.add(
        "ring.add_zero",
        "g + zero cone = g = zero cone + g",
        _first(cones, lambda g: None if add(g, g0) == g == add(g0, g) else {"cone": cone_id(g)}),
    )
    report.add(
        "ring.add_negative",
        "g + (-g) = zero cone",
        _first(cones, lambda g: None if add(g, negate(g)) == g0 else {"cone": cone_id(g)}),
    )
    report.add(
        "ring.negate",
        "negation is an involution preserving vertex and M-set",
        _first(
            cones,
            lambda g: None
            if negate(negate(g)) == g and negate(g).vertex == g.vertex and m_set(negate(g)).objects == m_set(g).objects
            else {"cone": cone_id(g)},
        ),
    )
    report.info("ring.order", "order of the ring of proper cones", {"order": cr.order, "unit": cr.one})
    return report


def verify_cone_ring_theorems(cat: Category) -> VerificationReport:
    report = VerificationReport(_name(cat, "cone-theorems"))
    report.extend(verify_cone_calculus(cat))
    report.extend(verify_cone_ring(cat))
    return report


# -- orchestration ---------------------------------------------------------


def run_suites(
    ring: FiniteRing,
    side: str = "left",
    suites: Iterable[str] = ("all",),
    early_exit: bool = False,
    category: Category | None = None,
    **caps,
) -> list[VerificationReport]:
    """Ring axioms first, then the selected suites in dependency order."""
    wanted = set(suites)
    if "all" in wanted:
        wanted = set(SUITES)
    unknown = wanted - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites: {sorted(unknown)}")
    reports = [verify_ring_axioms(ring)]
    if early_exit and not reports[0].passed:
        return reports
    cat = category or build_category(ring, side, **caps)
    normal = None
    for name in SUITES:
        if name not in wanted:
            continue
        if name == "category":
            rep = verify_category(cat)
        elif name == "preadditive":
            rep = verify_preadditive(cat)
        elif name == "proper":
            rep = verify_proper_category(cat)
        elif name == "normal":
            rep = normal = verify_normal_category(cat)
        elif name == "tc":
            try:
                rep = verify_tc_regular(cat, normal)
            except SkippedNotNormal as exc:
                rep = VerificationReport(_name(cat, "tc"))
                rep.skip("tc.regular", "every normal cone g has a normal h with g.h.g = g", str(exc))
        elif name == "green":
            rep = verify_green_characterization(cat)
        elif name == "cones":
            rep = verify_cone_calculus(cat)
        else:
            rep = verify_cone_ring(cat)
        reports.append(rep)
        if early_exit and not rep.passed:
            break
    return reports
