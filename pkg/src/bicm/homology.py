"""Reduced homology over prime fields and Q, Reisner's criterion, shellings."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from . import guards
from .complex import (
    SimplicialComplex,
    VertexSet,
    alexander_dual,
    face_masks_by_size,
    from_mask,
    popcount,
    strip_apexes,
    to_mask,
)
from .errors import ComplexError
from .linalg import PREPASS_PRIME, is_prime, rank

DEFAULT_CHARACTERISTICS = (0, 2, 3, 5)


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self) -> None:
        p = self.characteristic
        if p != 0 and not is_prime(p):
            raise ComplexError(f"characteristic must be 0 or a prime, got {p}")


def as_field(k: FieldSpec | int) -> FieldSpec:
    return k if isinstance(k, FieldSpec) else FieldSpec(int(k))


@dataclass(frozen=True)
class HomologyReport:
    """Reduced Betti numbers ``betti[i]`` for -1 <= i <= dim."""

    betti: dict[int, int]
    field: FieldSpec

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in self.betti.items())

    def vanishes_below(self, top: int) -> bool:
        return all(b == 0 for i, b in self.betti.items() if i < top)


@dataclass(frozen=True)
class CMWitness:
    verdict: bool
    failing_face: VertexSet | None = None
    failing_dimension: int | None = None

    def __bool__(self) -> bool:
        return self.verdict


def _boundary_rank(upper: list[int], lower: list[int], p: int) -> int:
    if not upper or not lower:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    cols = []
    for g in upper:
        col = {}
        sign = 1
        b = g
        while b:
            low = b & -b
            col[index[g ^ low]] = sign
            sign = -sign
            b ^= low
        cols.append(col)
    return rank(cols, p, len(lower))


@lru_cache(maxsize=100_000)
def _betti_cached(masks: tuple[int, ...], p: int, guard: int | None) -> tuple[int, ...]:
    common = -1
    for m in masks:
        common &= m
    top = max(popcount(m) for m in masks)
    if common and masks:
        # a cone is acyclic
        return (0,) * (top + 1)
    levels = face_masks_by_size(masks, guard)
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(levels[k], levels[k - 1], p)
    return tuple(len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))


def betti_from_masks(masks, p: int, guard: int | None = None) -> tuple[int, ...]:
    """Reduced Betti numbers of the complex with these facet masks.

    Entry ``k`` is the Betti number in dimension ``k - 1``.
    """
    return _betti_cached(tuple(sorted(masks)), p, guard)


def reduced_homology(cx: SimplicialComplex, k: FieldSpec | int = 0, guard: int | None = None) -> HomologyReport:
    field = as_field(k)
    b = betti_from_masks(cx.masks, field.characteristic, guard)
    return HomologyReport({i - 1: v for i, v in enumerate(b)}, field)


def _faces_in_order(masks, guard: int | None):
    """Faces by increasing dimension, lexicographic within a dimension."""
    for level in face_masks_by_size(masks, guard):
        yield from sorted(level, key=from_mask)


def is_CM(cx: SimplicialComplex, k: FieldSpec | int = 0, guard: int | None = None) -> CMWitness:
    """Reisner's criterion: every link has vanishing homology below its top dimension.

    Apex vertices are split off first: a face missing an apex has a cone as
    link, so only faces containing every apex can fail, and their links are
    links in the base complex.  On failure the witness is the first failing
    face (by dimension, then lexicographically) with the lowest failing
    dimension of its link.

    Over Q a link is first tried modulo a large prime: rational Betti
    numbers never exceed modular ones, so vanishing there is a proof, and
    only links that do not vanish are recomputed exactly.
    """
    p = as_field(k).characteristic
    base, apex = strip_apexes(cx)
    labels = base.labels or tuple(range(1, base.n + 1))
    apex_mask = to_mask(apex)
    for sigma in _faces_in_order(base.masks, guard):
        lk = [f ^ sigma for f in base.masks if f & sigma == sigma]
        top = max(popcount(m) for m in lk) - 1
        if top <= 0:
            # a nonempty link of dimension <= 0 has nothing below its top to check
            continue
        if p == 0:
            pre = betti_from_masks(lk, PREPASS_PRIME, guard)
            if not any(pre[: top + 1]):
                continue
        b = betti_from_masks(lk, p, guard)
        for i in range(-1, top):
            if b[i + 1]:
                face = to_mask(labels[v - 1] for v in from_mask(sigma)) | apex_mask
                return CMWitness(False, from_mask(face), i)
    return CMWitness(True)


def is_biCM(cx: SimplicialComplex, k: FieldSpec | int = 0, guard: int | None = None) -> bool:
    if cx.is_full_simplex():
        raise ComplexError("bi-CM is undefined for the full simplex")
    return bool(is_CM(cx, k, guard)) and bool(is_CM(alexander_dual(cx), k, guard))


def _shelling_step_ok(masks: Sequence[int], previous: Sequence[int], j: int, d: int) -> bool:
    fj = masks[j]
    meets = [masks[i] & fj for i in previous]
    ridges = [m for m in meets if popcount(m) == d - 1]
    if previous and not ridges:
        return False
    return all(any(m & r == m for r in ridges) for m in meets)


def is_shelling(cx: SimplicialComplex, order: Sequence[int]) -> bool:
    """Check the pure shelling condition for facet indices ``order`` (0-based)."""
    if not cx.is_pure():
        raise ComplexError("shellings are defined here for pure complexes only")
    if sorted(order) != list(range(len(cx.facets))):
        raise ComplexError("order must be a permutation of the facet indices")
    d = cx.d
    masks = cx.masks
    return all(_shelling_step_ok(masks, order[:j], order[j], d) for j in range(1, len(order)))


def find_shelling(cx: SimplicialComplex, guard: int | None = None) -> list[int] | None:
    """Exhaustive search for a shelling order; None if none exists.

    Whether a facet may be added depends only on the set of facets already
    placed, so failed sets are memoized and the search is over subsets.
    Non-pure complexes have no shelling in this sense and return None.
    """
    m = len(cx.facets)
    guards.check("shelling", m, guard, "facet count for shelling search")
    if not cx.is_pure():
        return None
    d = cx.d
    masks = cx.masks
    full = (1 << m) - 1
    dead: set[int] = set()

    def extend(used: int, seq: list[int]) -> list[int] | None:
        if used == full:
            return seq
        if used in dead:
            return None
        for j in range(m):
            if used >> j & 1:
                continue
            if _shelling_step_ok(masks, seq, j, d):
                got = extend(used | 1 << j, seq + [j])
                if got is not None:
                    return got
        dead.add(used)
        return None

    for first in range(m):
        got = extend(1 << first, [first])
        if got is not None:
            return got
    return None
