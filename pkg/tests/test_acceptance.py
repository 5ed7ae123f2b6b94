"""Acceptance gate: every criterion exact, one printed line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS/FAIL lines.
All comparisons are exact equality on booleans and integers.
"""

import pytest

from cmtkit.classify import (
    DEFINITION_LINKS,
    LOCAL_HOMOLOGY,
    REISNER_HOMOLOGY,
    is_cm,
    is_cm_t,
    is_k_cm_t,
    is_k_cm_t_unbounded,
    is_pure,
    min_t,
)
from cmtkit.fields import GF2, GF3, GF5, RATIONALS
from cmtkit.generators import (
    GluedFamilySpec,
    boundary_simplex,
    glued_simplices,
    miyazaki_example,
    projective_plane_6,
    simplex,
)
from cmtkit.homology import (
    BettiVector,
    boundary_matrices,
    reduced_betti,
    reduced_euler_from_faces,
)
from cmtkit.snf import betti_via_snf
from cmtkit.suites import acceptance_corpus, suite_deletion_theorem

ALL_FIELDS = (GF2, GF3, GF5, RATIONALS)


@pytest.fixture(scope="module")
def corpus():
    return acceptance_corpus()


def report(number: int, name: str, ok: bool) -> bool:
    print(f"ACCEPTANCE {number} [{name}]: {'PASS' if ok else 'FAIL'}")
    return ok


def test_criterion_1_glued_family_classification():
    results = {}
    for d in range(2, 6):
        for t in range(1, d):
            cx = glued_simplices(GluedFamilySpec.uniform(d, 2, t - 2))
            results[(d, t)] = min_t(cx, GF2)
    ok = all(results[(d, t)] == t for (d, t) in results)
    assert report(1, "glued-family classification", ok), results
    assert len(results) == 10


def test_criterion_2_miyazaki_fixture():
    cx, sigma = miyazaki_example()
    wedge = cx.link(sigma)
    deleted, _ = cx.delete_cofaces([sigma])
    checks = (
        is_cm_t(cx, 0, GF2),
        is_k_cm_t_unbounded(wedge, 2, 1, GF2) and not is_k_cm_t_unbounded(wedge, 2, 0, GF2),
        not is_k_cm_t_unbounded(deleted, 2, 1, GF2),
    )
    assert report(2, "miyazaki fixture", all(checks)), checks


def test_criterion_3_criterion_equivalence(corpus):
    disagreements = []
    for name, cx in corpus:
        for t in range(0, cx.dim + 1):
            verdicts = {
                crit: is_cm_t(cx, t, GF2, crit)
                for crit in (DEFINITION_LINKS, REISNER_HOMOLOGY, LOCAL_HOMOLOGY)
            }
            if len(set(verdicts.values())) != 1:
                disagreements.append((name, t, verdicts))
    assert report(3, "criterion equivalence", not disagreements), disagreements


def test_criterion_4_link_recursions(corpus):
    counterexamples = []
    for name, cx in corpus:
        vertices = cx.faces(size=1)
        nonempty = [f for f in cx.faces() if len(f) > 0]
        for t in range(1, cx.dim + 1):
            lhs = is_cm_t(cx, t, GF2)
            rhs = is_pure(cx) and all(is_cm_t(cx.link(v), t - 1, GF2) for v in vertices)
            if lhs != rhs:
                counterexamples.append((name, "link", t, lhs, rhs))
            k_lhs = is_k_cm_t_unbounded(cx, 2, t, GF2)
            k_rhs = all(is_k_cm_t_unbounded(cx.link(s), 2, t - 1, GF2) for s in nonempty)
            if k_lhs != k_rhs:
                counterexamples.append((name, "k-link", t, k_lhs, k_rhs))
    assert report(4, "link and k-link recursion", not counterexamples), counterexamples


def test_criterion_5_deletion_theorem(corpus):
    rep = suite_deletion_theorem(corpus, field=GF2)
    assert report(5, "deletion theorem", rep.ok), [f.case for f in rep.failures]


def test_criterion_6_skeleton_corollary():
    checks = {}
    for d in (3, 4):
        cx = boundary_simplex(d + 1)
        checks[(d, "base")] = is_k_cm_t(cx, 2, 0, GF2)
        for s in (1, 2):
            sk = cx.skeleton(d - 1 - s)
            checks[(d, s)] = is_k_cm_t(sk, 2 + s, 0, GF2)
    assert report(6, "skeleton corollary", all(checks.values())), checks


def test_criterion_7_field_dependence():
    rp2 = projective_plane_6()
    expected = {
        GF2: BettiVector({1: 1, 2: 1}),
        GF3: BettiVector({}),
        RATIONALS: BettiVector({}),
    }
    ok = (not is_cm(rp2, GF2)) and is_cm(rp2, GF3) and is_cm(rp2, RATIONALS)
    for field, want in expected.items():
        engine = reduced_betti(rp2, field)
        oracle = betti_via_snf(rp2, field)
        ok = ok and engine == want == oracle
    assert report(7, "field dependence with SNF cross-check", ok)


def test_criterion_8_homology_substrate(corpus):
    violations = []
    for name, cx in corpus:
        mats = boundary_matrices(cx)
        for a, b in zip(mats, mats[1:]):
            if (a.matrix @ b.matrix).any():
                violations.append((name, "boundary-squared"))
        face_euler = reduced_euler_from_faces(cx)
        cone = cx.join(simplex(1))
        for field in ALL_FIELDS:
            if reduced_betti(cx, field).reduced_euler() != face_euler:
                violations.append((name, "euler", field.token))
            if reduced_betti(cone, field).nonzero():
                violations.append((name, "cone", field.token))
    for n in range(2, 8):
        sphere = boundary_simplex(n)
        for field in ALL_FIELDS:
            if reduced_betti(sphere, field) != BettiVector({n - 2: 1}):
                violations.append((f"boundary-{n}", "sphere", field.token))
    assert report(8, "homology substrate", not violations), violations
