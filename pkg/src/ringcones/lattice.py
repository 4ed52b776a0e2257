from __future__ import annotations

from dataclasses import dataclass, field

from .category import Category
from .errors import NoUniqueMax
from .report import VerificationReport

RR_CONDITION_2_NOTE = (
    "condition 2 is checked operationally: every cone's image family must have a "
    "unique maximum. The literal reading (every bounded subset of objects has a "
    "unique maximal element) holds only for chains and is reported separately."
)


@dataclass
class LatticeReport:
    labels: list[str]
    join: dict[tuple[int, int], int | None]
    meet: dict[tuple[int, int], int | None]
    is_lattice: bool
    is_relatively_complemented: bool
    missing_bounds: list[dict] = field(default_factory=list)
    complement_witness: dict | None = None
    join_is_sum: bool = True
    join_sum_witness: dict | None = None
    is_chain: bool = True
    chain_witness: dict | None = None
    rr_condition_2_note: str = RR_CONDITION_2_NOTE

    def to_dict(self) -> dict:
        n = len(self.labels)

        def table(d):
            return [[d[i, j] for j in range(n)] for i in range(n)]

        return {
            "objects": self.labels,
            "join": table(self.join),
            "meet": table(self.meet),
            "is_lattice": self.is_lattice,
            "is_relatively_complemented": self.is_relatively_complemented,
            "missing_bounds": self.missing_bounds,
            "complement_witness": self.complement_witness,
            "join_is_sum": self.join_is_sum,
            "join_sum_witness": self.join_sum_witness,
            "is_chain": self.is_chain,
            "chain_witness": self.chain_witness,
            "rr_condition_2_note": self.rr_condition_2_note,
        }


def subobject_lattice(cat: Category) -> LatticeReport:
    objs = cat.objects
    n = len(objs)
    ring = cat.ring
    lab = [cat.label(o) for o in objs]
    join: dict[tuple[int, int], int | None] = {}
    meet: dict[tuple[int, int], int | None] = {}
    missing = []
    for i in range(n):
        for j in range(n):
            jb = cat._bound(objs[i], objs[j], upper=True)
            mb = cat._bound(objs[i], objs[j], upper=False)
            join[i, j] = None if jb is None else cat.index(jb)
            meet[i, j] = None if mb is None else cat.index(mb)
            if jb is None:
                missing.append({"op": "join", "a": lab[i], "b": lab[j]})
            if mb is None:
                missing.append({"op": "meet", "a": lab[i], "b": lab[j]})
    report = LatticeReport(lab, join, meet, not missing, False, missing)

    # a relatively complemented lattice: every z in every interval [x, y]
    # has some w in [x, y] with z ^ w = x and z v w = y
    if report.is_lattice:
        report.is_relatively_complemented = True
        for xi in range(n):
            for yi in range(n):
                if not objs[xi] <= objs[yi]:
                    continue
                interval = [k for k in range(n) if objs[xi] <= objs[k] <= objs[yi]]
                for z in interval:
                    if not any(meet[z, w] == xi and join[z, w] == yi for w in interval):
                        report.is_relatively_complemented = False
                        report.complement_witness = {"lower": lab[xi], "upper": lab[yi], "element": lab[z]}
                        break
                if report.complement_witness:
                    break
            if report.complement_witness:
                break

    for i in range(n):
        for j in range(n):
            k = join[i, j]
            if k is None:
                continue
            total = {ring.add(x, y) for x in objs[i].elements for y in objs[j].elements}
            if total != objs[k].element_set:
                report.join_is_sum = False
                report.join_sum_witness = {"a": lab[i], "b": lab[j], "join": lab[k], "sum_size": len(total)}
                break
        if not report.join_is_sum:
            break

    # the subset {a, b} of two incomparable objects has two maximal elements,
    # and every subset of a chain has exactly one, so the literal reading
    # holds iff the objects form a chain
    for i in range(n):
        for j in range(i + 1, n):
            if not (objs[i] <= objs[j] or objs[j] <= objs[i]):
                report.is_chain = False
                report.chain_witness = {"a": lab[i], "b": lab[j]}
                break
        if not report.is_chain:
            break
    return report


def check_rr_conditions(cat: Category, lattice: LatticeReport | None = None) -> VerificationReport:
    from .cones import enumerate_cones, max_image, cone_id

    lattice = lattice or subobject_lattice(cat)
    report = VerificationReport(f"rr-conditions[{cat.source_ring.label}/{cat.side}]")
    report.add(
        "rr.lattice",
        "every pair of objects has a least upper and greatest lower principal bound",
        lattice.missing_bounds[0] if lattice.missing_bounds else None,
    )
    report.add(
        "rr.bounds",
        "the whole ring is the top object and the zero ideal the bottom",
        None if cat.top.element_set == frozenset(cat.ring.elements) and cat.bottom.elements == (cat.ring.zero,)
        else {"top": cat.label(cat.top), "bottom": cat.label(cat.bottom)},
    )
    if lattice.is_lattice:
        report.add(
            "rr.relatively_complemented",
            "every element of every interval has a relative complement",
            lattice.complement_witness,
        )
    else:
        report.add("rr.relatively_complemented", "object poset is a relatively complemented lattice", {"reason": "not a lattice"})

    failure = None
    for cone in enumerate_cones(cat):
        try:
            max_image(cone)
        except NoUniqueMax:
            failure = {"cone": cone_id(cone)}
            break
    report.add("rr.max_image", "every cone's image family has a unique maximum", failure, detail=RR_CONDITION_2_NOTE)
    report.info("rr.literal_chain", "literal bounded-subset reading (objects form a chain)", {"holds": lattice.is_chain, "witness": lattice.chain_witness})
    report.info("rr.join_is_sum", "join of two principal ideals equals their set sum", {"holds": lattice.join_is_sum, "witness": lattice.join_sum_witness})
    return report
