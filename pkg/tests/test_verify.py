import pytest

from ringcones.category import compose, identity, inclusion
from ringcones.errors import SkippedNotNormal
from ringcones.report import FAIL, INFO, PASS, VerificationReport
from ringcones.verify import (
    SUITES,
    run_suites,
    verify_category,
    verify_cone_calculus,
    verify_cone_ring,
    verify_green_characterization,
    verify_normal_category,
    verify_preadditive,
    verify_proper_category,
    verify_tc_regular,
)

from .conftest import CORPUS, RR_FAILING, RR_PASSING, category, ring


@pytest.mark.parametrize("spec", CORPUS)
def test_category_and_preadditive_everywhere(spec):
    cat = category(spec)
    for rep in (verify_category(cat), verify_preadditive(cat)):
        assert rep.passed, rep.render()


@pytest.mark.parametrize("spec", RR_PASSING)
def test_regular_rings_pass_everything(spec):
    reports = run_suites(ring(spec), category=category(spec))
    assert [r.suite.split("[")[0] for r in reports] == ["ring-axioms"] + list(SUITES)
    for rep in reports:
        assert rep.passed, rep.render()


@pytest.mark.parametrize("spec,sub,top", [("zmod:4", 2, 1), ("zmod:12", 6, 3)])
def test_split_failure_witness_replays(spec, sub, top):
    cat = category(spec)
    check = verify_proper_category(cat).get("proper.split")
    assert check.status == FAIL
    assert check.witness == {"sub": f"R{sub}", "object": f"R{top}"}
    a, b = cat.object_of(sub), cat.object_of(top)
    j = inclusion(a, b)
    assert not any(compose(j, e) == identity(a) for e in cat.hom(b, a))


@pytest.mark.parametrize("spec,label", [("zmod:4", "rho(2,1,1)"), ("zmod:12", "rho(6,1,3)")])
def test_green_split_mono_counterexample(spec, label):
    cat = category(spec)
    rep = verify_green_characterization(cat)
    check = rep.get("green.split_mono")
    assert check.status == FAIL and check.witness["morphism"] == label
    assert check.witness["brute"]["split_mono"] is False
    assert check.witness["green"]["split_mono"] is True
    for claim in ("green.surjective", "green.epi", "green.iso"):
        assert rep.get(claim).status == PASS


@pytest.mark.parametrize("spec", RR_FAILING)
def test_non_regular_is_not_normal(spec):
    cat = category(spec)
    normal = verify_normal_category(cat)
    assert not normal.passed
    assert normal.get("normal.regular_ring").witness == {"regular": False}
    with pytest.raises(SkippedNotNormal):
        verify_tc_regular(cat, normal)


def test_tc_skip_is_reported():
    reports = run_suites(ring("zmod:4"), suites=["normal", "tc"], category=category("zmod:4"))
    tc = reports[-1]
    assert tc.get("tc.regular").status == "skip"
    assert tc.passed


# counted by a plain-Python oracle; over these regular rings every proper cone is normal
@pytest.mark.parametrize("spec,count", [("zmod:2", 2), ("zmod:6", 6), ("prod:zmod:2,zmod:2", 4)])
def test_tc_regular(spec, count):
    rep = verify_tc_regular(category(spec))
    assert rep.passed, rep.render()
    assert rep.get("tc.size").witness["count"] == count


@pytest.mark.parametrize("spec", RR_FAILING)
def test_rr_witness(spec):
    rep = verify_cone_ring(category(spec))
    check = rep.get("rr.relatively_complemented")
    assert check.status == FAIL
    cat = category(spec)
    by_label = {cat.label(o): o for o in cat.objects}
    lo, hi, x = (by_label[check.witness[k]] for k in ("lower", "upper", "element"))
    assert lo <= x <= hi
    # no y in [lo, hi] with x ^ y = lo and x v y = hi
    assert not any(
        lo <= y <= hi and cat.meet(x, y) == lo and cat.join(x, y) == hi for y in cat.objects
    )
    assert rep.get("ring.build").witness["refused"] == "RRViolation"


def test_cone_calculus_findings_z6():
    rep = verify_cone_calculus(category("zmod:6"))
    assert rep.passed, rep.render()
    assert rep.get("cones.count").witness == {"cones": 12, "proper": 6}
    assert rep.get("reduce.retraction_choice").witness["coincide"] is True
    assert rep.get("cones.oracle").status == PASS


def test_cone_calculus_universal_epi_finding():
    # the reduced cone's component at the zero object is never epi unless the vertex is zero
    check = verify_cone_calculus(category("zmod:6")).get("reduce.all_components_epi")
    assert check.status == INFO and check.witness["holds"] is False


def test_early_exit():
    reports = run_suites(ring("zmod:4"), early_exit=True, category=category("zmod:4"))
    assert not reports[-1].passed
    assert len(reports) < 1 + len(SUITES)
    assert reports[-1].suite.startswith("proper")


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(ring("zmod:2"), suites=["bogus"])


def test_report_behaviour():
    rep = VerificationReport("demo")
    assert rep.add("a", "holds")
    assert not rep.add("b", "fails", {"x": 1})
    rep.info("c", "finding", {"n": 3})
    rep.skip("d", "skipped", "why")
    assert rep.counts() == {PASS: 1, FAIL: 1, INFO: 1, "skip": 1}
    assert not rep.passed
    assert [c.claim for c in rep.failures()] == ["b"]
    text = rep.render(timing=False)
    assert "[FAIL] b: fails" in text and 'witness: {"x": 1}' in text
    assert "wall_time" not in rep.to_dict()
    with pytest.raises(KeyError):
        rep.get("zzz")
