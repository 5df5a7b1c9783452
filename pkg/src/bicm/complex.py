"""Simplicial complexes on a ground set [n] = {1, ..., n}.

A complex is stored by its facets only.  Vertex sets are sorted tuples of
1-based labels; internally most algorithms work with bitmasks where vertex
``v`` is bit ``v - 1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import guards
from .errors import ComplexError

VertexSet = tuple[int, ...]


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def from_mask(mask: int) -> VertexSet:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def face_key(face: Sequence[int]) -> tuple[int, VertexSet]:
    """Canonical storage order: by cardinality, then lexicographically."""
    return (len(face), tuple(face))


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family of bitmasks (duplicates merged)."""
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def minimal_masks(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=popcount)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == k for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    The constructor normalizes its input: duplicates are merged and facets
    contained in other facets are dropped.  Facets are then stored in
    canonical order, so two complexes are equal exactly when they have the
    same ground-set size and the same faces.

    ``labels`` optionally records, for complexes produced by :func:`link` or
    :func:`restriction`, the original label of each vertex.  It does not take
    part in equality.
    """

    n: int
    facets: tuple[VertexSet, ...]
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ComplexError(f"ground-set size must be a nonnegative integer, got {self.n!r}")
        masks = []
        for cand in self.facets:
            verts = set(cand)
            for v in verts:
                if not isinstance(v, int) or not 1 <= v <= self.n:
                    raise ComplexError(f"vertex {v!r} outside [1, {self.n}]")
            masks.append(to_mask(verts))
        if not masks:
            raise ComplexError("the void complex (no faces at all) is not representable")
        canon = sorted((from_mask(m) for m in maximal_masks(masks)), key=face_key)
        object.__setattr__(self, "facets", tuple(canon))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(f) for f in self.facets)

    @property
    def d(self) -> int:
        """Maximum facet cardinality, so that dim = d - 1."""
        return len(self.facets[-1])

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.masks:
            m |= f
        return m

    def is_full_simplex(self) -> bool:
        return len(self.masks) == 1 and self.masks[0] == self.ground

    def is_pure(self) -> bool:
        return len(self.facets[0]) == len(self.facets[-1])

    def contains(self, face: Iterable[int]) -> bool:
        m = to_mask(face)
        return any(m & f == m for f in self.masks)

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, [{body}])"


def from_facets(n: int, candidate_facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(n, tuple(tuple(f) for f in candidate_facets))


def from_masks(n: int, masks: Iterable[int], labels: tuple[int, ...] | None = None) -> SimplicialComplex:
    return SimplicialComplex(n, tuple(from_mask(m) for m in masks), labels)


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, (tuple(range(1, n + 1)),))


def empty_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ((),))


def boundary_of_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, tuple(combinations(range(1, n + 1), n - 1)))


def face_masks_by_size(masks: Iterable[int], guard: int | None = None) -> list[list[int]]:
    """All faces generated by ``masks``, grouped by cardinality.

    Entry ``k`` of the result lists the faces with ``k`` vertices, sorted by
    mask value.  Raises :class:`GuardExceeded` once the running total passes
    the face guard.
    """
    masks = list(masks)
    top = max(popcount(m) for m in masks)
    by_size: list[set[int]] = [set() for _ in range(top + 1)]
    for m in masks:
        by_size[popcount(m)].add(m)
    total = 0
    for k in range(top, 0, -1):
        level = by_size[k]
        below = by_size[k - 1]
        for g in level:
            b = g
            while b:
                low = b & -b
                below.add(g ^ low)
                b ^= low
        total += len(level)
        guards.check("face", total, guard, "face count")
    return [sorted(s) for s in by_size]


def faces(cx: SimplicialComplex, k: int) -> list[VertexSet]:
    """All k-dimensional faces in canonical (lexicographic) order; none above the dimension."""
    if k < -1:
        raise ComplexError(f"dimension {k} below -1")
    found: set[VertexSet] = set()
    for f in cx.facets:
        if len(f) > k:
            found.update(combinations(f, k + 1))
    return sorted(found)


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Minimal hitting sets of a family of bitmasks (Berge's algorithm)."""
    trans = [0]
    for e in sorted(set(edges), key=popcount):
        if e == 0:
            return []
        hit = [t for t in trans if t & e]
        new = list(hit)
        for t in trans:
            if t & e:
                continue
            b = e
            while b:
                low = b & -b
                b ^= low
                cand = t | low
                if not any(h & cand == h for h in hit):
                    new.append(cand)
        trans = minimal_masks(new)
    return trans


def minimal_nonface_masks(cx: SimplicialComplex) -> list[int]:
    full = cx.ground
    # S is a nonface iff it meets the complement of every facet
    return sorted(minimal_transversals(full ^ f for f in cx.masks))


def minimal_nonfaces(cx: SimplicialComplex) -> list[VertexSet]:
    return sorted((from_mask(m) for m in minimal_nonface_masks(cx)), key=face_key)


def from_minimal_nonfaces(n: int, nonfaces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The complex on [n] whose minimal nonfaces are (the minimal members of) ``nonfaces``."""
    full = (1 << n) - 1
    masks = [to_mask(nf) for nf in nonfaces]
    return from_masks(n, (full ^ t for t in minimal_transversals(masks)))


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Faces are the complements of nonfaces of ``cx``."""
    if cx.is_full_simplex():
        raise ComplexError("the Alexander dual of the full simplex is void")
    full = cx.ground
    return from_masks(cx.n, (full ^ m for m in minimal_nonface_masks(cx)))


def frame_invariant_c(cx: SimplicialComplex) -> int:
    """Largest c such that every (c-1)-subset of [n] is a face."""
    if cx.is_full_simplex():
        return cx.n
    return min(popcount(m) for m in minimal_nonface_masks(cx)) - 1


def is_cone(cx: SimplicialComplex) -> VertexSet:
    """Apex vertices, i.e. those lying in every facet.  Empty unless a cone."""
    common = cx.ground
    for f in cx.masks:
        common &= f
    return from_mask(common)


def cone(cx: SimplicialComplex) -> SimplicialComplex:
    apex = cx.n + 1
    return SimplicialComplex(apex, tuple(f + (apex,) for f in cx.facets))


def _compress(mask: int, keep: Sequence[int]) -> int:
    out = 0
    for i, v in enumerate(keep):
        if mask >> (v - 1) & 1:
            out |= 1 << i
    return out


def link(cx: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Link of a face, on the ground set [n] minus the face, relabeled in order."""
    s = to_mask(sigma)
    if s & ~cx.ground or not cx.contains(from_mask(s)):
        raise ComplexError(f"{from_mask(s)} is not a face")
    keep = from_mask(cx.ground ^ s)
    lk = [_compress(f ^ s, keep) for f in cx.masks if f & s == s]
    return from_masks(len(keep), lk, labels=keep)


def restriction(cx: SimplicialComplex, w: Iterable[int]) -> SimplicialComplex:
    """Induced subcomplex on W, relabeled to [|W|] preserving order."""
    keep = tuple(sorted(set(w)))
    wm = to_mask(keep)
    if wm & ~cx.ground:
        raise ComplexError(f"{keep} is not a subset of [{cx.n}]")
    return from_masks(len(keep), (_compress(f & wm, keep) for f in cx.masks), labels=keep)


def relabel(cx: SimplicialComplex, perm: Sequence[int]) -> SimplicialComplex:
    """Apply the vertex map ``v -> perm[v - 1]``; ``perm`` is a permutation of [n]."""
    if sorted(perm) != list(range(1, cx.n + 1)):
        raise ComplexError("relabeling must be a permutation of [n]")
    return SimplicialComplex(cx.n, tuple(tuple(perm[v - 1] for v in f) for f in cx.facets))


def strip_apexes(cx: SimplicialComplex) -> tuple[SimplicialComplex, VertexSet]:
    """Split a cone into its base (apexes deleted, relabeled) and its apex set."""
    apex = is_cone(cx)
    if not apex:
        return cx, ()
    am = to_mask(apex)
    keep = from_mask(cx.ground ^ am)
    base = from_masks(len(keep), (_compress(f ^ am, keep) for f in cx.masks), labels=keep)
    return base, apex
