"""Executable property suites: structural laws and classification theorems.

Each suite runs over a deterministic corpus (glued families, boundary
spheres, seeded random pure complexes) and returns a report listing every
counterexample with the complex that produced it, so the CLI can serialize
failures for replay.  A clean run of `all` is the strongest evidence the
deciders implement the intended theory.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Callable, Iterable

from .classify import (
    DEFINITION_LINKS,
    LOCAL_HOMOLOGY,
    REISNER_HOMOLOGY,
    _max_k_capped,
    is_cm,
    is_cm_t,
    is_k_cm_t_unbounded,
    is_pure,
    min_t,
)
from .core import Face, SimplicialComplex
from .fields import GF2, FieldSpec
from .generators import (
    GluedFamilySpec,
    boundary_simplex,
    glued_simplices,
    miyazaki_example,
    random_pure,
)

DEFAULT_SEED_BASE = 101

CorpusItem = tuple[str, SimplicialComplex]


@dataclass(frozen=True)
class CaseFailure:
    suite: str
    case: str
    complex: SimplicialComplex | None = None

    def to_json(self) -> dict:
        return {"suite": self.suite, "case": self.case}


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[CaseFailure] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "ok": self.ok,
            "failures": [f.to_json() for f in self.failures],
        }


# -- corpus ------------------------------------------------------------------

def glued_fixture_grid() -> list[CorpusItem]:
    """Pairs of (d-1)-simplices sharing a (t-2)-face, 2<=d<=5, 1<=t<=d-1,
    plus a three-member family with pairwise vertex overlaps."""
    items = []
    for d in range(2, 6):
        for t in range(1, d):
            cx = glued_simplices(GluedFamilySpec.uniform(d, 2, t - 2))
            items.append((f"glued-d{d}-t{t}", cx))
    items.append(("glued-d4-m3-o0", glued_simplices(GluedFamilySpec.uniform(4, 3, 0))))
    return items


def boundary_corpus(max_n: int = 6) -> list[CorpusItem]:
    return [(f"boundary-{n}", boundary_simplex(n)) for n in range(2, min(max_n, 6) + 1)]


_RANDOM_GRID = ((5, 2), (5, 3), (6, 2), (6, 3), (6, 4), (7, 2), (7, 3), (7, 4))
_DENSITIES = (0.45, 0.6, 0.8)


def random_corpus(count: int, max_n: int = 7,
                  seed_base: int = DEFAULT_SEED_BASE) -> list[CorpusItem]:
    grid = [(n, d) for n, d in _RANDOM_GRID if n <= max_n] or [(max_n, min(2, max_n))]
    items = []
    for i in range(count):
        n, d = grid[i % len(grid)]
        density = _DENSITIES[(i // len(grid)) % len(_DENSITIES)]
        seed = seed_base + i
        items.append((f"random-n{n}-d{d}-p{density}-s{seed}",
                      random_pure(n, d, density, seed)))
    return items


def build_corpus(max_n: int = 7, seeds: int = 20,
                 seed_base: int = DEFAULT_SEED_BASE) -> list[CorpusItem]:
    """Verification corpus: glued fixtures always, the rest sized by max_n."""
    return (glued_fixture_grid()
            + boundary_corpus(max_n)
            + random_corpus(seeds, max_n=max_n, seed_base=seed_base))


def acceptance_corpus() -> list[CorpusItem]:
    """The pinned corpus: glued fixtures, 50 seeded random complexes with
    at most 7 vertices, and boundary spheres up to 6 vertices."""
    return (glued_fixture_grid()
            + random_corpus(50, max_n=7, seed_base=DEFAULT_SEED_BASE)
            + boundary_corpus(6))


# -- helpers -----------------------------------------------------------------

def _run_cases(suite: str, cases: list[tuple[str, Callable[[], list[CaseFailure]]]],
               jobs: int = 1) -> SuiteReport:
    report = SuiteReport(suite=suite, cases=len(cases))
    if jobs > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: c[1](), cases))
    else:
        results = [fn() for _, fn in cases]
    for fails in results:
        report.failures.extend(fails)
    report.failures.sort(key=lambda f: f.case)
    return report


def _sampled(seq, cap: int):
    seq = list(seq)
    if len(seq) <= cap:
        return seq
    stride = -(-len(seq) // cap)
    return seq[::stride]


def _ts(cx: SimplicialComplex) -> range:
    return range(0, cx.dim + 1)


# -- structural laws -----------------------------------------------------------

def suite_link_laws(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                    jobs: int = 1) -> SuiteReport:
    """Link/restriction/skeleton/join identities and constructor idempotence."""
    items = list(corpus)

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []

            def bad(what: str):
                fails.append(CaseFailure("link_laws", f"{name}: {what}", cx))

            for sigma in _sampled(cx.faces(), 24):
                lk = cx.link(sigma)
                for tau in _sampled(lk.faces(), 8):
                    if lk.link(tau) != cx.link(sigma | tau):
                        bad(f"link-of-link fails at {sigma}, {tau}")
                outside = Face.from_mask(cx.support_mask & ~sigma.mask).vertices[:4]
                removals = [(v,) for v in outside] + list(combinations(outside, 2))[:2]
                for removed in removals:
                    keep = Face.from_mask(cx.support_mask & ~Face(removed).mask)
                    if cx.restrict(keep).link(sigma) != cx.link(sigma).restrict(keep):
                        bad(f"restriction/link commutation fails at {sigma}, W={removed}")
            prev_faces: set[int] = set()
            for j in range(-1, cx.dim + 1):
                sk = cx.skeleton(j)
                if sk.skeleton(j) != sk:
                    bad(f"skeleton({j}) not idempotent")
                cur = {f.mask for f in sk.faces()}
                if not prev_faces <= cur:
                    bad(f"skeleton not monotone at {j}")
                prev_faces = cur
            compacted = cx.compact()
            rebuilt = SimplicialComplex.from_facets(
                [f.vertices for f in compacted.facets], labels=compacted.labels)
            if rebuilt != compacted:
                bad("from_facets not idempotent on its own output")
            for sigma in (cx.facets[0],) + ((cx.faces(size=1)[0],) if cx.dim >= 0 else ()):
                deleted, _ = cx.delete_cofaces([sigma])
                expected = {f.mask for f in cx.faces()
                            if f.mask & sigma.mask != sigma.mask}
                got = set() if deleted.is_void else {f.mask for f in deleted.faces()}
                if got != expected:
                    bad(f"delete_cofaces face filter fails at {sigma}")
            return fails

        return run

    def make_join_case(i: int):
        name_a, a = items[i]
        _, b = items[(i + 1) % len(items)]
        _, c = items[(i + 2) % len(items)]

        def run() -> list[CaseFailure]:
            fails = []
            ab = a.join(b)
            if ab.dim != a.dim + b.dim + 1:
                fails.append(CaseFailure(
                    "link_laws", f"join:{name_a}: dimension formula fails", ab))
            if a.join(SimplicialComplex.from_facets([()])) != a:
                fails.append(CaseFailure(
                    "link_laws", f"join:{name_a}: {{<>}} is not a join identity", a))
            left = ab.join(c).compact()
            right = a.join(b.join(c)).compact()
            if {f.mask for f in left.facets} != {f.mask for f in right.facets}:
                fails.append(CaseFailure(
                    "link_laws", f"join:{name_a}: associativity fails", left))
            return fails

        return run

    cases = [(name, make_case(name, cx)) for name, cx in items]
    cases += [(f"join:{items[i][0]}", make_join_case(i))
              for i in range(min(len(items), 8))]
    return _run_cases("link_laws", cases, jobs=jobs)


# -- classification theorems ---------------------------------------------------

def suite_criteria_equivalence(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                               jobs: int = 1) -> SuiteReport:
    """The three CM_t deciders agree for every t in 0..dim."""

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []
            for t in _ts(cx):
                verdicts = {crit: is_cm_t(cx, t, field, crit)
                            for crit in (DEFINITION_LINKS, REISNER_HOMOLOGY, LOCAL_HOMOLOGY)}
                if len(set(verdicts.values())) != 1:
                    fails.append(CaseFailure(
                        "criteria_equivalence", f"{name}: t={t} verdicts {verdicts}", cx))
            return fails

        return run

    return _run_cases("criteria_equivalence",
                      [(name, make_case(name, cx)) for name, cx in corpus], jobs=jobs)


def suite_link_recursion(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                         jobs: int = 1) -> SuiteReport:
    """CM_t (t >= 1) holds iff the complex is pure and every vertex link is CM_{t-1}."""

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []
            vertices = cx.faces(size=1) if cx.dim >= 0 else ()
            for t in range(1, cx.dim + 1):
                lhs = is_cm_t(cx, t, field)
                rhs = is_pure(cx) and all(
                    is_cm_t(cx.link(v), t - 1, field) for v in vertices)
                if lhs != rhs:
                    fails.append(CaseFailure(
                        "link_recursion", f"{name}: t={t} lhs={lhs} rhs={rhs}", cx))
            return fails

        return run

    return _run_cases("link_recursion",
                      [(name, make_case(name, cx)) for name, cx in corpus], jobs=jobs)


def suite_k_link_recursion(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                           jobs: int = 1) -> SuiteReport:
    """k-CM_t recursion laws on pure complexes, k = 2:

    * t >= 1: k-CM_t iff every nonempty face's link is k-CM_{t-1};
    * links drop the index by the face size (one direction);
    * the alternative formulation via k-CM links of faces with >= t vertices
      agrees with the removal-set definition for every t.
    """
    k = 2

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []
            if not is_pure(cx):
                return fails
            nonempty = [f for f in cx.faces() if len(f) > 0]
            for t in range(1, cx.dim + 1):
                lhs = is_k_cm_t_unbounded(cx, k, t, field)
                rhs = all(is_k_cm_t_unbounded(cx.link(s), k, t - 1, field)
                          for s in nonempty)
                if lhs != rhs:
                    fails.append(CaseFailure(
                        "k_link_recursion", f"{name}: t={t} lhs={lhs} rhs={rhs}", cx))
                if lhs:
                    for s in _sampled([f for f in nonempty if len(f) <= 2], 6):
                        if not is_k_cm_t_unbounded(cx.link(s), k, max(t - len(s), 0), field):
                            fails.append(CaseFailure(
                                "k_link_recursion",
                                f"{name}: t={t} link drop fails at {s}", cx))
            for t in _ts(cx):
                lhs = is_k_cm_t_unbounded(cx, k, t, field)
                rhs = all(is_k_cm_t_unbounded(cx.link(s), k, 0, field)
                          for s in cx.faces() if len(s) >= t)
                if lhs != rhs:
                    fails.append(CaseFailure(
                        "k_link_recursion",
                        f"{name}: t={t} link formulation lhs={lhs} rhs={rhs}", cx))
            return fails

        return run

    return _run_cases("k_link_recursion",
                      [(name, make_case(name, cx)) for name, cx in corpus], jobs=jobs)


def suite_deletion_theorem(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                           jobs: int = 1) -> SuiteReport:
    """Coface deletion: for CM_t cx and admissible removal sets among facet
    subsets of size <= 2 (pairwise unions outside, dimension drop, links
    2-CM_{t-1}), the survivor is 2-CM_t one dimension down."""

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []
            if not is_pure(cx):
                return fails
            sigma_sets = [[f] for f in cx.facets]
            sigma_sets += [list(p) for p in combinations(cx.facets, 2)]
            for sigmas in sigma_sets:
                survivor, rep = cx.delete_cofaces(sigmas)
                if not (rep.union_condition and rep.dim_dropped):
                    continue
                for t in _ts(cx):
                    if not is_cm_t(cx, t, field):
                        continue
                    if not all(is_k_cm_t_unbounded(cx.link(s), 2, t - 1, field)
                               for s in sigmas):
                        continue
                    ok = (not survivor.is_void
                          and survivor.dim == cx.dim - 1
                          and is_k_cm_t_unbounded(survivor, 2, t, field))
                    if not ok:
                        fails.append(CaseFailure(
                            "deletion_theorem",
                            f"{name}: t={t} sigmas={sigmas} conclusion fails", cx))
            return fails

        return run

    return _run_cases("deletion_theorem",
                      [(name, make_case(name, cx)) for name, cx in corpus], jobs=jobs)


def suite_skeleton_theorem(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                           jobs: int = 1) -> SuiteReport:
    """For a k-CM_t complex of dimension d-1 the (d-s-1)-skeleton is (k+s)-CM_t."""

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []
            if not is_pure(cx) or cx.dim < 1:
                return fails
            t = min_t(cx, field)
            k = _max_k_capped(cx, t, field, cap=3)
            for s in (1, 2):
                if s > cx.dim:
                    continue
                target = cx.skeleton(cx.dim - s)
                if not is_k_cm_t_unbounded(target, k + s, t, field):
                    fails.append(CaseFailure(
                        "skeleton_theorem",
                        f"{name}: t={t} k={k} s={s} skeleton not (k+s)-CM_t", cx))
            return fails

        return run

    return _run_cases("skeleton_theorem",
                      [(name, make_case(name, cx)) for name, cx in corpus], jobs=jobs)


def suite_monotonicity(corpus: Iterable[CorpusItem], field: FieldSpec = GF2,
                       jobs: int = 1) -> SuiteReport:
    """CM_t is monotone in t; k-CM_t is antitone in k."""

    def make_case(name: str, cx: SimplicialComplex):
        def run() -> list[CaseFailure]:
            fails = []
            verdicts = [is_cm_t(cx, t, field) for t in _ts(cx)]
            for a, b in zip(verdicts, verdicts[1:]):
                if a and not b:
                    fails.append(CaseFailure(
                        "monotonicity", f"{name}: CM_t not monotone: {verdicts}", cx))
                    break
            for t in _ts(cx):
                if is_k_cm_t_unbounded(cx, 2, t, field) and not is_k_cm_t_unbounded(cx, 1, t, field):
                    fails.append(CaseFailure(
                        "monotonicity", f"{name}: k-monotonicity fails at t={t}", cx))
            return fails

        return run

    return _run_cases("monotonicity",
                      [(name, make_case(name, cx)) for name, cx in corpus], jobs=jobs)


def suite_paper_fixtures(corpus: Iterable[CorpusItem] = (), field: FieldSpec = GF2,
                         jobs: int = 1) -> SuiteReport:
    """Pinned classification facts for the canonical example families."""
    del corpus  # fixture-driven
    checks: list[tuple[str, Callable[[], bool]]] = []

    two_tri_vertex = SimplicialComplex.from_facets([(1, 2, 3), (3, 4, 5)])
    checks.append(("two triangles at a vertex: link of the shared vertex",
                   lambda: two_tri_vertex.link(Face((2,)))
                   == SimplicialComplex(5, [Face((0, 1)), Face((3, 4))],
                                        two_tri_vertex.labels)))
    checks.append(("two triangles at a vertex: CM_2 but not CM_1",
                   lambda: is_cm_t(two_tri_vertex, 2, field)
                   and not is_cm_t(two_tri_vertex, 1, field)))
    checks.append(("two triangles at a vertex: min_t = 2",
                   lambda: min_t(two_tri_vertex, field) == 2))
    checks.append(("two triangles at a vertex: not CM",
                   lambda: not is_cm(two_tri_vertex, field)))

    two_tets = SimplicialComplex.from_facets([(1, 2, 3, 4), (4, 5, 6, 7)])
    checks.append(("two tetrahedra at a vertex: min_t = 2",
                   lambda: min_t(two_tets, field) == 2))

    mi, sigma1 = miyazaki_example()
    wedge = SimplicialComplex.from_facets([(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    checks.append(("miyazaki: join has 6 facets of size 4 and dimension 3",
                   lambda: mi.dim == 3 and len(mi.facets) == 6
                   and all(len(f) == 4 for f in mi.facets)))
    checks.append(("miyazaki: the join is Cohen-Macaulay",
                   lambda: is_cm_t(mi, 0, field)))
    checks.append(("miyazaki: link of {x,y} is the wedge of two circles",
                   lambda: mi.link(sigma1).compact() == wedge))
    checks.append(("miyazaki: wedge is 2-CM_1 but not 2-CM_0",
                   lambda: is_k_cm_t_unbounded(wedge, 2, 1, field)
                   and not is_k_cm_t_unbounded(wedge, 2, 0, field)))

    deleted, _ = mi.delete_cofaces([sigma1])
    two_points = SimplicialComplex.from_facets([(0,), (1,)], labels=("x", "y"))
    checks.append(("miyazaki: deleting cofaces of {x,y} gives wedge * two points",
                   lambda: {f.mask for f in deleted.facets}
                   == {f.mask for f in wedge.join(two_points).facets}))
    checks.append(("miyazaki: the deletion survivor is not 2-CM_1",
                   lambda: not is_k_cm_t_unbounded(deleted, 2, 1, field)))

    for d in range(2, 6):
        for t in range(1, d):
            cx = glued_simplices(GluedFamilySpec.uniform(d, 2, t - 2))
            checks.append((f"glued d={d} t={t}: min_t = {t}",
                           lambda cx=cx, t=t: min_t(cx, field) == t))

    gamma3 = glued_simplices(GluedFamilySpec.uniform(4, 3, 0))
    checks.append(("three glued tetrahedra: CM_2 with min_t = 2",
                   lambda: is_cm_t(gamma3, 2, field) and min_t(gamma3, field) == 2))

    # skeleton of a glued family: 2-CM_t always; the sharpness half
    # (not 2-CM_{t-1}) only bites for t <= d-2, where the skeleton is
    # high-dimensional enough to see the failure
    for d in range(2, 6):
        for t in range(1, d):
            gamma = glued_simplices(GluedFamilySpec.uniform(d, 2, t - 2))
            lam = gamma.skeleton(d - 2)
            checks.append((f"glued skeleton d={d} t={t}: 2-CM_{t}",
                           lambda lam=lam, t=t: is_k_cm_t_unbounded(lam, 2, t, field)))
            if t <= d - 2:
                checks.append((f"glued skeleton d={d} t={t}: not 2-CM_{t - 1}",
                               lambda lam=lam, t=t:
                               not is_k_cm_t_unbounded(lam, 2, t - 1, field)))

    cases = [(name, (lambda name=name, fn=fn:
                     [] if fn() else [CaseFailure("paper_fixtures", name)]))
             for name, fn in checks]
    return _run_cases("paper_fixtures", cases, jobs=jobs)


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "link_laws": suite_link_laws,
    "criteria_equivalence": suite_criteria_equivalence,
    "link_recursion": suite_link_recursion,
    "k_link_recursion": suite_k_link_recursion,
    "deletion_theorem": suite_deletion_theorem,
    "skeleton_theorem": suite_skeleton_theorem,
    "monotonicity": suite_monotonicity,
    "paper_fixtures": suite_paper_fixtures,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suites(names: Iterable[str], corpus: list[CorpusItem],
               field: FieldSpec = GF2, jobs: int = 1) -> list[SuiteReport]:
    wanted: list[str] = []
    for name in names:
        if name == "all":
            wanted.extend(SUITES)
        elif name in SUITES:
            wanted.append(name)
        else:
            raise ValueError(f"unknown suite: {name!r} (expected one of {SUITE_NAMES})")
    return [SUITES[name](corpus, field=field, jobs=jobs) for name in wanted]
