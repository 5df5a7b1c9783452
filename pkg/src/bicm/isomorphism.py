"""Canonical forms of simplicial complexes under relabeling of [n].

The canonical form is the smallest canonical encoding (facets ordered by
cardinality then lexicographically, compared as a sequence) over the
relabelings reachable by individualization-refinement.  Vertex colors are
refined with an isomorphism-invariant procedure, so two complexes receive
the same canonical form exactly when they are isomorphic.

Branches that differ by a transposition of twin vertices (two vertices
whose swap fixes the facet set) are pruned; this keeps skeleta, cones and
other highly symmetric complexes cheap.
"""

from __future__ import annotations

from . import guards
from .complex import SimplicialComplex, from_mask, popcount

Encoding = tuple[tuple[int, tuple[int, ...]], ...]


def _rank(sigs: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _refine(colors: list[int], masks: tuple[int, ...], incidence: list[list[int]]) -> list[int]:
    while True:
        facet_sig = [(popcount(m), tuple(sorted(colors[v] for v in verts)))
                     for m, verts in zip(masks, _members(masks))]
        sigs = [(colors[v], tuple(sorted(facet_sig[i] for i in incidence[v])))
                for v in range(len(colors))]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


_member_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}


def _members(masks: tuple[int, ...]) -> list[tuple[int, ...]]:
    got = _member_cache.get(masks)
    if got is None:
        got = [tuple(v - 1 for v in from_mask(m)) for m in masks]
        if len(_member_cache) > 4096:
            _member_cache.clear()
        _member_cache[masks] = got
    return got


def _encode(members: list[tuple[int, ...]], colors: list[int]) -> Encoding:
    faces = [tuple(sorted(colors[v] + 1 for v in f)) for f in members]
    return tuple(sorted((len(f), f) for f in faces))


def _swap(mask: int, a: int, b: int) -> int:
    ba = mask >> a & 1
    bb = mask >> b & 1
    if ba != bb:
        mask ^= (1 << a) | (1 << b)
    return mask


def _are_twins(masks: frozenset[int], a: int, b: int) -> bool:
    return all(_swap(m, a, b) in masks for m in masks)


def canonical_labeling(cx: SimplicialComplex, guard: int | None = None) -> tuple[Encoding, list[int]]:
    """Return the canonical encoding and a relabeling ``perm`` realizing it.

    ``perm[v - 1]`` is the new label of vertex ``v``.
    """
    guards.check("iso", cx.n, guard, "ground-set size for isomorphism")
    n = cx.n
    masks = cx.masks
    members = _members(masks)
    incidence: list[list[int]] = [[] for _ in range(n)]
    for i, verts in enumerate(members):
        for v in verts:
            incidence[v].append(i)
    mask_set = frozenset(masks)
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        colors = _refine(colors, masks, incidence)
        if len(set(colors)) == n:
            enc = _encode(members, colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                best[1] = colors
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        reps: list[int] = []
        for v in cell:
            if any(_are_twins(mask_set, r, v) for r in reps):
                continue
            reps.append(v)
            search(_rank([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)]))

    if n == 0:
        return _encode(members, []), []
    search(_rank([0] * n))
    return best[0], [c + 1 for c in best[1]]


def canonical_form(cx: SimplicialComplex, guard: int | None = None) -> SimplicialComplex:
    enc, _ = canonical_labeling(cx, guard)
    return SimplicialComplex(cx.n, tuple(f for _, f in enc))


def _quick_invariant(cx: SimplicialComplex) -> tuple:
    degrees = sorted(sorted(popcount(m) for m in cx.masks if m >> v & 1) for v in range(cx.n))
    return (cx.n, tuple(len(f) for f in cx.facets), tuple(map(tuple, degrees)))


def is_isomorphic(a: SimplicialComplex, b: SimplicialComplex, guard: int | None = None) -> bool:
    if a == b:
        return True
    if _quick_invariant(a) != _quick_invariant(b):
        return False
    from .fvectors import f_polynomial

    if f_polynomial(a) != f_polynomial(b):
        return False
    return canonical_form(a, guard) == canonical_form(b, guard)
