"""Deciders for Cohen-Macaulay, CM_t, Buchsbaum and k-CM_t complexes.

Three independently implemented CM_t criteria are exposed and expected to
agree:

* ``definition_links`` - purity plus Cohen-Macaulayness (Reisner test) of
  every link of a face with at least t vertices;
* ``reisner_homology`` - purity plus vanishing of the links' reduced
  homology below degree dim - #face - 1;
* ``local_homology`` - purity plus vanishing local homology at every face
  of size >= max(t, 1) below the top degree, with the global homology
  condition added for t = 0 where no puncture sees it.

All deciders produce concrete witnesses on failure so the CLI can report
them.  Verdicts are memoized per (complex, parameters) since the theorem
suites revisit the same links and restrictions many times.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .core import EMPTY_FACE, Face, SimplicialComplex
from .fields import GF2, FieldSpec
from .homology import reduced_betti

DEFINITION_LINKS = "definition_links"
REISNER_HOMOLOGY = "reisner_homology"
LOCAL_HOMOLOGY = "local_homology"
CRITERIA = (DEFINITION_LINKS, REISNER_HOMOLOGY, LOCAL_HOMOLOGY)

_CRITERION_ALIASES = {
    "def": DEFINITION_LINKS,
    "definition": DEFINITION_LINKS,
    DEFINITION_LINKS: DEFINITION_LINKS,
    "reisner": REISNER_HOMOLOGY,
    REISNER_HOMOLOGY: REISNER_HOMOLOGY,
    "local": LOCAL_HOMOLOGY,
    LOCAL_HOMOLOGY: LOCAL_HOMOLOGY,
}


def normalize_criterion(name: str) -> str:
    try:
        return _CRITERION_ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown criterion: {name!r} (expected def, reisner or local)") from None


@dataclass(frozen=True)
class Witness:
    """Concrete evidence that a property fails.

    kind is one of: impure, link_not_cm, link_homology, local_homology,
    global_homology, restriction_dimension, restriction.
    """

    kind: str
    face: Face | None = None
    degree: int | None = None
    removed: tuple[int, ...] | None = None
    inner: "Witness | None" = None

    def to_json(self, cx: SimplicialComplex) -> dict:
        labels = cx.labels

        def face_labels(f: Face | None):
            return None if f is None else [labels[v] for v in f]

        out: dict = {"kind": self.kind}
        if self.face is not None:
            out["face"] = face_labels(self.face)
        if self.degree is not None:
            out["degree"] = self.degree
        if self.removed is not None:
            out["removed"] = [labels[v] for v in self.removed]
        if self.inner is not None:
            out["inner"] = self.inner.to_json(cx)
        return out


_CM_CACHE: dict[tuple, Witness | None] = {}
_CMT_CACHE: dict[tuple, Witness | None] = {}
_KLAYER_CACHE: dict[tuple, Witness | None] = {}


def clear_caches() -> None:
    _CM_CACHE.clear()
    _CMT_CACHE.clear()
    _KLAYER_CACHE.clear()


def _require_nonvoid(cx: SimplicialComplex) -> None:
    if cx.is_void:
        raise ValueError("the void complex cannot be classified")


def is_pure(cx: SimplicialComplex) -> bool:
    """True when all facets share one cardinality; {<>} is pure."""
    _require_nonvoid(cx)
    sizes = {len(f) for f in cx.facets}
    return len(sizes) == 1


def cm_witness(cx: SimplicialComplex, field: FieldSpec = GF2) -> Witness | None:
    """Reisner test: a face whose link has homology below its dimension, or None."""
    _require_nonvoid(cx)
    key = (cx, field)
    if key in _CM_CACHE:
        return _CM_CACHE[key]
    found = None
    for sigma in cx.faces():
        lk = cx.link(sigma)
        top = lk.dim
        if top <= 0:
            continue  # links of dimension -1 or 0 never obstruct
        betti = reduced_betti(lk, field)
        for i in range(-1, top):
            if betti[i]:
                found = Witness("link_homology", face=sigma, degree=i)
                break
        if found:
            break
    _CM_CACHE[key] = found
    return found


def is_cm(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Cohen-Macaulayness over the given field."""
    return cm_witness(cx, field) is None


def cm_t_witness(cx: SimplicialComplex, t: int, field: FieldSpec = GF2,
                 criterion: str = DEFINITION_LINKS) -> Witness | None:
    """Witness against CM_t under the chosen criterion, or None if CM_t holds.

    t is clamped below at 0; values above dim leave only the purity
    requirement since no face is large enough to be quantified over.
    """
    _require_nonvoid(cx)
    crit = normalize_criterion(criterion)
    t = max(int(t), 0)
    key = (cx, t, field, crit)
    if key in _CMT_CACHE:
        return _CMT_CACHE[key]

    if not is_pure(cx):
        found: Witness | None = Witness("impure")
    elif crit == DEFINITION_LINKS:
        found = None
        for sigma in cx.faces():
            if len(sigma) < t:
                continue
            inner = cm_witness(cx.link(sigma), field)
            if inner is not None:
                found = Witness("link_not_cm", face=sigma, inner=inner)
                break
    elif crit == REISNER_HOMOLOGY:
        found = None
        d = cx.dim + 1
        for sigma in cx.faces():
            if len(sigma) < t:
                continue
            betti = reduced_betti(cx.link(sigma), field)
            for i in range(-1, d - len(sigma) - 1):
                if betti[i]:
                    found = Witness("link_homology", face=sigma, degree=i)
                    break
            if found:
                break
    else:
        found = None
        d = cx.dim + 1
        if t == 0:
            # punctures never see the empty face: add the global condition
            betti = reduced_betti(cx, field)
            for i in range(-1, d - 1):
                if betti[i]:
                    found = Witness("global_homology", face=EMPTY_FACE, degree=i)
                    break
        if found is None:
            for sigma in cx.faces():
                s = len(sigma)
                if s < max(t, 1):
                    continue
                betti = reduced_betti(cx.link(sigma), field)
                for j in range(-1, d - 1 - s):
                    if betti[j]:
                        found = Witness("local_homology", face=sigma, degree=j + s)
                        break
                if found:
                    break

    _CMT_CACHE[key] = found
    return found


def is_cm_t(cx: SimplicialComplex, t: int, field: FieldSpec = GF2,
            criterion: str = DEFINITION_LINKS) -> bool:
    return cm_t_witness(cx, t, field, criterion) is None


def is_buchsbaum(cx: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    """Buchsbaum = CM_1: purity plus Cohen-Macaulay links of nonempty faces."""
    return is_cm_t(cx, 1, field)


def _k_layer_witness(cx: SimplicialComplex, size: int, t: int,
                     field: FieldSpec, jobs: int = 1) -> Witness | None:
    """First failing removal set of exactly `size` vertices, or None."""
    key = (cx, size, t, field)
    if key in _KLAYER_CACHE:
        return _KLAYER_CACHE[key]
    support = cx.vertex_ids()
    support_mask = cx.support_mask
    d = cx.dim

    def check(removal: tuple[int, ...]) -> Witness | None:
        keep_mask = support_mask
        for v in removal:
            keep_mask &= ~(1 << v)
        sub = cx.restrict(Face.from_mask(keep_mask))
        if sub.dim != d:
            return Witness("restriction_dimension", removed=removal)
        inner = cm_t_witness(sub, t, field, DEFINITION_LINKS)
        if inner is not None:
            return Witness("restriction", removed=removal, inner=inner)
        return None

    removals = list(combinations(support, size))
    found = None
    if jobs > 1 and len(removals) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for w in pool.map(check, removals):
                if w is not None and found is None:
                    found = w  # keep the first in canonical order
    else:
        for removal in removals:
            found = check(removal)
            if found is not None:
                break
    _KLAYER_CACHE[key] = found
    return found


def k_cm_t_witness(cx: SimplicialComplex, k: int, t: int, field: FieldSpec = GF2,
                   jobs: int = 1, check_budget: bool = True) -> Witness | None:
    """Witness against k-CM_t (a removal set breaking CM_t or the dimension).

    Enumerates every removal set W with fewer than k vertices; with
    check_budget, k larger than #V + 1 is rejected since the incremental
    search could not terminate there.
    """
    _require_nonvoid(cx)
    if k < 1:
        raise ValueError("k must be at least 1")
    support = cx.vertex_ids()
    if check_budget and k > len(support) + 1:
        raise ValueError("k exceeds vertex budget")
    t = max(int(t), 0)
    for size in range(0, min(k - 1, len(support)) + 1):
        w = _k_layer_witness(cx, size, t, field, jobs=jobs)
        if w is not None:
            return w
    return None


def is_k_cm_t(cx: SimplicialComplex, k: int, t: int, field: FieldSpec = GF2,
              jobs: int = 1) -> bool:
    return k_cm_t_witness(cx, k, t, field, jobs=jobs) is None


def is_k_cm_t_unbounded(cx: SimplicialComplex, k: int, t: int,
                        field: FieldSpec = GF2) -> bool:
    """k-CM_t by the raw definition, without the vertex-budget guard.

    For k > #V + 1 this is vacuously true only on {<>}; on anything else
    removing all vertices drops the dimension, so the verdict stays total.
    The theorem suites need this form because links of facets are {<>}.
    """
    return k_cm_t_witness(cx, k, t, field, check_budget=False) is None


def is_k_buchsbaum(cx: SimplicialComplex, k: int, field: FieldSpec = GF2) -> bool:
    return is_k_cm_t(cx, k, 1, field)


def min_t(cx: SimplicialComplex, field: FieldSpec = GF2) -> int:
    """Least t with CM_t; defined (and guaranteed) for pure complexes."""
    _require_nonvoid(cx)
    if not is_pure(cx):
        raise ValueError("min_t undefined for impure complexes")
    if cx.dim == -1:
        return 0
    verdicts = [is_cm_t(cx, t, field) for t in range(0, cx.dim + 1)]
    first = verdicts.index(True) if True in verdicts else None
    if first is None or not all(verdicts[first:]):
        raise AssertionError(f"CM_t monotonicity violated: {verdicts}")
    return first


def _max_k_capped(cx: SimplicialComplex, t: int, field: FieldSpec,
                  cap: int | None) -> int:
    if cm_t_witness(cx, t, field) is not None:
        raise ValueError("not CM_t")
    support = cx.vertex_ids()
    k = 1
    for size in range(1, len(support) + 1):
        if cap is not None and k >= cap:
            break
        if _k_layer_witness(cx, size, t, field) is not None:
            break
        k = size + 1
    return k


def max_k(cx: SimplicialComplex, t: int, field: FieldSpec = GF2) -> int:
    """Largest k with k-CM_t, by incremental enlargement of the removal sets."""
    _require_nonvoid(cx)
    return _max_k_capped(cx, max(int(t), 0), field, cap=None)


@dataclass(frozen=True)
class ClassificationReport:
    dimension: int
    pure: bool
    field: FieldSpec
    min_t: int | None
    max_k_per_t: dict[int, int] = dc_field(default_factory=dict)
    criteria_agree: bool = True

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "pure": self.pure,
            "field": self.field.token,
            "min_t": self.min_t,
            "max_k_per_t": {str(t): k for t, k in sorted(self.max_k_per_t.items())},
            "criteria_agree": self.criteria_agree,
        }


def classify(cx: SimplicialComplex, field: FieldSpec = GF2) -> ClassificationReport:
    """Full report: purity, dimension, minimal t, maximal k per t, agreement."""
    _require_nonvoid(cx)
    dim = cx.dim
    ts = list(range(0, dim + 1)) if dim >= 0 else [0]
    pure = is_pure(cx)
    agree = all(
        is_cm_t(cx, t, field, DEFINITION_LINKS)
        == is_cm_t(cx, t, field, REISNER_HOMOLOGY)
        == is_cm_t(cx, t, field, LOCAL_HOMOLOGY)
        for t in ts
    )
    if not pure:
        return ClassificationReport(dim, False, field, None, {}, agree)
    mt = min_t(cx, field)
    per_t = {t: max_k(cx, t, field) for t in ts if t >= mt}
    return ClassificationReport(dim, True, field, mt, per_t, agree)


@dataclass(frozen=True)
class JoinObservation:
    left_index: int
    right_index: int
    left_min_t: int
    right_min_t: int
    join_min_t: int

    def to_json(self) -> dict:
        return {
            "pair": [self.left_index, self.right_index],
            "factor_min_t": [self.left_min_t, self.right_min_t],
            "join_min_t": self.join_min_t,
        }


def explore_join(pool: list[SimplicialComplex],
                 field: FieldSpec = GF2) -> list[JoinObservation]:
    """Observed minimal t of factors versus their join, for every pool pair.

    Purely exploratory output: how min_t behaves under joins is an open
    question, so no expected relationship is asserted.
    """
    for cx in pool:
        _require_nonvoid(cx)
        if not is_pure(cx):
            raise ValueError("explore_join expects pure complexes")
    out = []
    for i in range(len(pool)):
        for j in range(i + 1, len(pool)):
            joined = pool[i].join(pool[j])
            out.append(JoinObservation(
                i, j,
                min_t(pool[i], field), min_t(pool[j], field),
                min_t(joined, field),
            ))
    return out
