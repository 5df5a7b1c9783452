"""Graded Betti numbers of Stanley-Reisner rings via Hochster's formula."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import guards
from .complex import (
    SimplicialComplex,
    alexander_dual,
    frame_invariant_c,
    maximal_masks,
    minimal_nonface_masks,
    popcount,
)
from .errors import ComplexError
from .homology import FieldSpec, as_field, betti_from_masks, is_CM


@dataclass(frozen=True)
class BettiTable:
    """beta[(i, j)] of k[Delta]: homological degree i, internal degree j.

    Only nonzero entries are stored.  The ideal's Betti numbers are the
    entries shifted by one: beta_(i,j)(I) = beta_(i+1,j)(k[Delta]).
    """

    entries: dict[tuple[int, int], int]
    field: FieldSpec = dc_field(default_factory=FieldSpec)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def rows(self) -> list[list[int]]:
        """Betti diagram: row r holds beta_(i, i+r) for i = 0..pd."""
        pd = self.projective_dimension
        reg = max(j - i for i, j in self.entries)
        return [[self[(i, i + r)] for i in range(pd + 1)] for r in range(reg + 1)]

    def format(self) -> str:
        rows = self.rows()
        width = max(len(str(v)) for row in rows for v in row) + 1
        head = "      " + "".join(f"{i:>{width}}" for i in range(len(rows[0])))
        lines = [head, "total:" + "".join(f"{sum(r[i] for r in rows):>{width}}" for i in range(len(rows[0])))]
        for r, row in enumerate(rows):
            cells = "".join(f"{(v if v else '.'):>{width}}" for v in row)
            lines.append(f"{r:>5}:" + cells)
        return "\n".join(lines)


def _compress(mask: int, w: int) -> int:
    out = 0
    bit = 0
    while w:
        low = w & -w
        if mask & low:
            out |= 1 << bit
        bit += 1
        w ^= low
    return out


def _gray_code(n: int):
    for i in range(1 << n):
        yield i ^ (i >> 1)


def hochster_betti(cx: SimplicialComplex, k: FieldSpec | int = 0, guard: int | None = None,
                   face_guard: int | None = None) -> BettiTable:
    """beta_(i,j) = sum over |W| = j of dim H~_(j-i-1)(Delta restricted to W)."""
    field = as_field(k)
    p = field.characteristic
    guards.check("hochster", cx.n, guard, "ground-set size for Hochster's formula")
    entries: dict[tuple[int, int], int] = {}
    memo: dict[tuple[int, ...], tuple[int, ...]] = {}
    for w in _gray_code(cx.n):
        restricted = maximal_masks(f & w for f in cx.masks)
        if len(restricted) == 1 and restricted[0] == w and w:
            continue  # a simplex is acyclic
        key = tuple(sorted(_compress(m, w) for m in restricted))
        b = memo.get(key)
        if b is None:
            b = betti_from_masks(key, p, face_guard)
            memo[key] = b
        j = popcount(w)
        for idx, val in enumerate(b):
            if val:
                r = idx - 1
                i = j - r - 1
                entries[(i, j)] = entries.get((i, j), 0) + val
    return BettiTable(entries, field)


def has_linear_resolution(cx: SimplicialComplex, k: FieldSpec | int = 0, guard: int | None = None) -> bool:
    """True iff the Stanley-Reisner ideal has a (c+1)-linear resolution."""
    if cx.is_full_simplex():
        raise ComplexError("the full simplex has the zero ideal")
    c = frame_invariant_c(cx)
    if any(popcount(m) != c + 1 for m in minimal_nonface_masks(cx)):
        return False
    table = hochster_betti(cx, k, guard)
    return all(j == i + c for (i, j) in table.entries if i >= 1)


def eagon_reiner_check(cx: SimplicialComplex, k: FieldSpec | int = 0, guard: int | None = None) -> bool:
    """Consistency oracle: linear resolution of I_Delta agrees with CM-ness of the dual.

    A False return means one of the two code paths is wrong.
    """
    return has_linear_resolution(cx, k, guard) == is_CM(alexander_dual(cx), k).verdict
