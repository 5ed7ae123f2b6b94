"""Bitmask faces and facet-list simplicial complexes.

A complex stores only its inclusion-maximal faces (facets) over a dense
vertex id space 0..n-1; every other face is enumerated on demand and
memoized.  Two degenerate values are representable and distinct: the void
complex (no faces at all) and the irrelevant complex {<>} whose single face
is the empty face.  Dimension queries on the void complex raise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class Face:
    """Immutable set of vertex ids stored as a single bitmask."""

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        mask = 0
        for v in vertices:
            v = int(v)
            if v < 0:
                raise ValueError(f"vertex ids must be non-negative, got {v}")
            mask |= 1 << v
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "Face":
        if mask < 0:
            raise ValueError("face mask must be non-negative")
        f = cls.__new__(cls)
        f.mask = mask
        return f

    @property
    def vertices(self) -> tuple[int, ...]:
        return _bits(self.mask)

    @property
    def dim(self) -> int:
        return self.mask.bit_count() - 1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.mask.bit_count(), self.vertices)

    def isdisjoint(self, other: "Face") -> bool:
        return self.mask & other.mask == 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "Face") -> "Face":
        return Face.from_mask(self.mask | other.mask)

    def __and__(self, other: "Face") -> "Face":
        return Face.from_mask(self.mask & other.mask)

    def __sub__(self, other: "Face") -> "Face":
        return Face.from_mask(self.mask & ~other.mask)

    def __le__(self, other: "Face") -> bool:
        return self.mask & other.mask == self.mask

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Face) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"Face({', '.join(map(str, self.vertices))})"


EMPTY_FACE = Face()


def as_face(obj) -> Face:
    return obj if isinstance(obj, Face) else Face(obj)


def _vertex_mask(obj, n_vertices: int) -> int:
    """Normalize a vertex-set argument (Face or iterable of ids) to a mask."""
    mask = obj.mask if isinstance(obj, Face) else Face(obj).mask
    if mask >> n_vertices:
        raise ValueError("vertex set uses ids beyond the ambient vertex space")
    return mask


def _maximal_masks(masks: Iterable[int]) -> list[int]:
    """Keep only inclusion-maximal masks (deduplicated)."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class DeletionReport:
    """Hypothesis bookkeeping attached to a coface deletion.

    union_condition is True when no pairwise union of the removed faces is
    itself a face; dim_dropped records whether the deletion lowered the
    dimension of the complex.
    """

    union_condition: bool
    violating_pair: tuple[Face, Face] | None
    dim_dropped: bool


class SimplicialComplex:
    """Finite abstract simplicial complex given by its facets.

    Instances are immutable and hashable; derived complexes (links,
    restrictions, skeleta) live on the same ambient id space as their
    parent so they compare structurally.
    """

    __slots__ = ("n_vertices", "facets", "labels", "_cache")

    def __init__(self, n_vertices: int, facets: Iterable[Face] = (),
                 labels: Sequence[str] | None = None):
        n_vertices = int(n_vertices)
        if n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        fs = tuple(sorted({as_face(f) for f in facets}, key=Face.sort_key))
        for f in fs:
            if f.mask >> n_vertices:
                raise ValueError(f"facet {f} uses ids beyond ambient size {n_vertices}")
        for i, a in enumerate(fs):
            for b in fs[i + 1:]:
                if a.mask & b.mask == a.mask:
                    raise ValueError(f"facets must form an antichain: {a} is contained in {b}")
        if labels is None:
            labels = tuple(str(i) for i in range(n_vertices))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n_vertices:
                raise ValueError("label table must have one entry per ambient vertex")
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "facets", fs)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_facets(cls, faces: Iterable[Iterable[int]],
                    labels: Mapping[int, str] | Sequence[str] | None = None,
                    n_hint: int | None = None) -> "SimplicialComplex":
        """Build a complex from an arbitrary collection of faces.

        Repeated and non-maximal input faces are discarded silently.
        Vertex ids are compacted to 0..n-1 in increasing numeric order of
        the original ids, which are kept (as text) in the label table.
        An empty collection gives the void complex; a collection whose
        only face is the empty face gives {<>}.
        """
        masks = [as_face(f).mask for f in faces]
        used = 0
        for m in masks:
            used |= m
        used_ids = _bits(used)
        if n_hint is not None:
            bad = [v for v in used_ids if v >= n_hint]
            if bad:
                raise ValueError(f"vertex ids {bad} exceed n_hint={n_hint}")

        def label_of(old: int) -> str:
            if labels is None:
                return str(old)
            if isinstance(labels, Mapping):
                return str(labels.get(old, str(old)))
            return str(labels[old])

        if labels is not None:
            if isinstance(labels, Mapping):
                ghost = sorted(set(labels) - set(used_ids))
            else:
                ghost = [i for i in range(len(labels)) if i not in set(used_ids)]
            if ghost:
                warnings.warn(
                    f"dropping {len(ghost)} labelled vertex id(s) not used by any face: {ghost}",
                    stacklevel=2,
                )

        if not masks:
            return cls(0, (), ())
        remap = {old: new for new, old in enumerate(used_ids)}
        remapped = []
        for m in masks:
            nm = 0
            for v in _bits(m):
                nm |= 1 << remap[v]
            remapped.append(nm)
        facets = [Face.from_mask(m) for m in _maximal_masks(remapped)]
        return cls(len(used_ids), facets, tuple(label_of(v) for v in used_ids))

    # -- basic queries -----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.dim for f in self.facets)

    @property
    def support_mask(self) -> int:
        m = self._cache.get("support")
        if m is None:
            m = 0
            for f in self.facets:
                m |= f.mask
            self._cache["support"] = m
        return m

    def vertex_ids(self) -> tuple[int, ...]:
        """Ids of vertices lying in some face (the vertex set V)."""
        return _bits(self.support_mask)

    def contains(self, face) -> bool:
        mask = as_face(face).mask
        return any(mask & f.mask == mask for f in self.facets)

    def faces(self, size: int | None = None) -> tuple[Face, ...]:
        """All faces, or all faces with exactly `size` vertices.

        Deterministic order: by (size, vertex tuple).  The enumeration is
        memoized per complex; racing fills recompute identical values.
        """
        if self.is_void:
            raise ValueError("void complex has no faces")
        by_size = self._cache.get("faces_by_size")
        if by_size is None:
            seen: set[int] = set()
            for f in self.facets:
                sub = f.mask
                while True:
                    seen.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & f.mask
            groups: dict[int, list[Face]] = {}
            for m in seen:
                groups.setdefault(m.bit_count(), []).append(Face.from_mask(m))
            by_size = {s: tuple(sorted(fs, key=Face.sort_key)) for s, fs in groups.items()}
            self._cache["faces_by_size"] = by_size
        if size is None:
            flat = self._cache.get("faces_all")
            if flat is None:
                flat = tuple(f for s in sorted(by_size) for f in by_size[s])
                self._cache["faces_all"] = flat
            return flat
        if size < 0:
            raise ValueError("face size must be non-negative")
        return by_size.get(size, ())

    def face_count(self, size: int) -> int:
        return len(self.faces(size=size))

    # -- derived complexes -------------------------------------------------

    def link(self, face) -> "SimplicialComplex":
        """The link {tau | tau u sigma is a face, tau disjoint from sigma}."""
        sigma = as_face(face)
        if not self.contains(sigma):
            raise ValueError(f"not a face of the complex: {sigma}")
        if sigma.mask == 0:
            return self
        # Facets containing sigma stay an antichain after removing it.
        facets = tuple(Face.from_mask(f.mask & ~sigma.mask)
                       for f in self.facets if sigma.mask & f.mask == sigma.mask)
        return SimplicialComplex(self.n_vertices, facets, self.labels)

    def restrict(self, keep) -> "SimplicialComplex":
        """Faces contained in the vertex set `keep`; {<>} if nothing survives."""
        keep_mask = _vertex_mask(keep, self.n_vertices)
        if self.is_void:
            return self
        masks = _maximal_masks(f.mask & keep_mask for f in self.facets)
        return SimplicialComplex(self.n_vertices,
                                 tuple(Face.from_mask(m) for m in masks), self.labels)

    def skeleton(self, j: int) -> "SimplicialComplex":
        """All faces of dimension at most j (j = -1 gives {<>})."""
        if j < -1:
            raise ValueError("skeleton dimension must be at least -1")
        if self.is_void:
            raise ValueError("the void complex has no skeleta")
        if j >= self.dim:
            return self
        facets = self.faces(size=j + 1) + tuple(f for f in self.facets if len(f) <= j)
        return SimplicialComplex(self.n_vertices, facets, self.labels)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; the second operand's ids are shifted past ours."""
        if self.is_void or other.is_void:
            raise ValueError("join with the void complex is undefined")
        offset = self.n_vertices
        taken = set(self.labels)
        relabeled = []
        for lb in other.labels:
            while lb in taken:
                lb = lb + "'"
            taken.add(lb)
            relabeled.append(lb)
        facets = tuple(Face.from_mask(a.mask | (b.mask << offset))
                       for a in self.facets for b in other.facets)
        return SimplicialComplex(offset + other.n_vertices, facets,
                                 self.labels + tuple(relabeled))

    def delete_cofaces(self, faces_to_remove: Iterable) -> tuple["SimplicialComplex", DeletionReport]:
        """Remove every face containing one of the given faces.

        Returns the surviving subcomplex together with a report on the two
        side conditions the removal theorems care about: pairwise unions of
        the removed faces being non-faces, and the dimension dropping.
        """
        sigmas = [as_face(f) for f in faces_to_remove]
        for s in sigmas:
            if not self.contains(s):
                raise ValueError(f"not a face of the complex: {s}")
        union_ok, violating = True, None
        for i, a in enumerate(sigmas):
            for b in sigmas[i + 1:]:
                if self.contains(a | b):
                    union_ok, violating = False, (a, b)
                    break
            if not union_ok:
                break
        result = self
        for s in sigmas:
            if result.is_void or not result.contains(s):
                continue
            if s.mask == 0:
                result = SimplicialComplex(self.n_vertices, (), self.labels)
                continue
            cands: list[int] = []
            for f in result.facets:
                if s.mask & f.mask == s.mask:
                    cands.extend(f.mask & ~(1 << v) for v in s)
                else:
                    cands.append(f.mask)
            result = SimplicialComplex(self.n_vertices,
                                       tuple(Face.from_mask(m) for m in _maximal_masks(cands)),
                                       self.labels)
        if self.is_void:
            dropped = False
        else:
            dropped = result.is_void or result.dim < self.dim
        return result, DeletionReport(union_ok, violating, dropped)

    def compact(self) -> "SimplicialComplex":
        """Drop unused ambient vertex slots, keeping labels and id order."""
        if self.is_void:
            return SimplicialComplex(0, (), ())
        used = _bits(self.support_mask)
        if len(used) == self.n_vertices:
            return self
        remap = {old: new for new, old in enumerate(used)}
        facets = []
        for f in self.facets:
            m = 0
            for v in f:
                m |= 1 << remap[v]
            facets.append(Face.from_mask(m))
        return SimplicialComplex(len(used), facets, tuple(self.labels[v] for v in used))

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.n_vertices == other.n_vertices
                and self.facets == other.facets
                and self.labels == other.labels)

    def __hash__(self) -> int:
        h = self._cache.get("hash")
        if h is None:
            h = hash((self.n_vertices, self.facets, self.labels))
            self._cache["hash"] = h
        return h

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        shown = ", ".join("{" + ",".join(self.labels[v] for v in f) + "}"
                          for f in self.facets[:6])
        more = "" if len(self.facets) <= 6 else f", ... {len(self.facets)} facets"
        return f"SimplicialComplex(n={self.n_vertices}, <{shown}{more}>)"


def from_facets(faces, labels=None, n_hint=None) -> SimplicialComplex:
    return SimplicialComplex.from_facets(faces, labels=labels, n_hint=n_hint)
