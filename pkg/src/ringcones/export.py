"""Deterministic JSON and Graphviz DOT renderings."""
from __future__ import annotations

import json
from typing import Iterable

from .category import Category, canonical_factorization, image, identity
from .cones import ConeRing, cone_id
from .lattice import subobject_lattice
from .report import VerificationReport

SCHEMA = 1


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def category_to_dict(cat: Category) -> dict:
    objs = cat.objects
    factorizations = []
    for f in cat.morphisms():
        epi, j = canonical_factorization(f)
        factorizations.append(
            {"morphism": f.label(), "image": cat.label(image(f)), "epi": epi.label(), "inclusion": j.label()}
        )
    return {
        "schema": SCHEMA,
        "ring": cat.source_ring.to_dict(),
        "side": cat.side,
        "objects": [{"label": cat.label(o), "generator": o.generator, "elements": list(o.elements)} for o in objs],
        "hom_sizes": [[len(cat.hom(a, b)) for b in objs] for a in objs],
        "morphism_count": cat.morphism_count,
        "factorizations": factorizations,
        "lattice": subobject_lattice(cat).to_dict(),
    }


def category_to_dot(cat: Category, counts: bool = False) -> str:
    """One node per object; one edge per non-identity morphism, or per hom-set with ``counts``."""
    lines = [f'digraph "{cat.side} ideals of {cat.source_ring.label}" {{', "  rankdir=BT;"]
    for obj in cat.objects:
        elems = ",".join(map(str, obj.elements))
        lines.append(f'  "{cat.label(obj)}" [label="{cat.label(obj)} = {{{elems}}}"];')
    for a in cat.objects:
        for b in cat.objects:
            arrows = [f for f in cat.hom(a, b) if f != identity(a)]
            if not arrows:
                continue
            if counts:
                lines.append(f'  "{cat.label(a)}" -> "{cat.label(b)}" [label="{len(arrows)}"];')
            else:
                for f in arrows:
                    lines.append(f'  "{cat.label(a)}" -> "{cat.label(b)}" [label="{f.canonical_witness}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cone_ring_to_dict(cr: ConeRing) -> dict:
    cat = cr.category
    return {
        "schema": SCHEMA,
        "ring": cat.source_ring.label,
        "side": cat.side,
        "order": cr.order,
        "objects": [cat.label(o) for o in cat.objects],
        "elements": [
            {
                "id": cone_id(c),
                "vertex": cat.label(c.vertex),
                "components": [f.canonical_witness for f in c.components],
            }
            for c in cr.elements
        ],
        "zero": cr.zero,
        "one": cr.one,
        "add_table": cr.add_table,
        "mul_table": cr.mul_table,
        "neg_table": cr.neg_table,
        "report": cr.report.to_dict(),
    }


def reports_to_dict(label: str, side: str, reports: Iterable[VerificationReport]) -> dict:
    reports = list(reports)
    return {
        "schema": SCHEMA,
        "ring": label,
        "side": side,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
