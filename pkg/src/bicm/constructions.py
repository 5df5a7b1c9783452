"""Explicit complexes: skeleta, cones, (d-1)-trees, RP^2, path-matrix complexes."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Literal

from .certify import Certificate, certify
from .complex import (
    SimplicialComplex,
    cone,
    from_facets,
    from_masks,
    from_minimal_nonfaces,
    is_cone,
    to_mask,
)
from .errors import ComplexError
from .homology import DEFAULT_CHARACTERISTICS

Cell = tuple[int, int]


def skeleton_complex(s: int, c: int) -> SimplicialComplex:
    """All c-subsets of [s]: the (c-1)-skeleton of the simplex on s vertices."""
    if not 0 <= c <= s:
        raise ComplexError(f"need 0 <= c <= s, got c={c}, s={s}")
    return from_facets(s, combinations(range(1, s + 1), c))


def iterated_cone(cx: SimplicialComplex, m: int) -> SimplicialComplex:
    if m < 0:
        raise ComplexError("cone count must be nonnegative")
    for _ in range(m):
        cx = cone(cx)
    return cx


def d_tree(d: int, attach: Sequence[tuple[int, int | Sequence[int]]] | None = None, *,
           n_attach: int = 0, seed: int | None = None) -> SimplicialComplex:
    """A (d-1)-tree: a (d-1)-simplex with simplices glued along single ridges.

    Each attachment ``(facet_index, selector)`` names a facet by creation
    order and a ridge of it, either as the position of the vertex to drop
    or as the ridge's vertex tuple; the new simplex is that ridge plus a
    fresh vertex.  With ``attach=None``, ``n_attach`` random attachments
    are drawn from ``random.Random(seed)``.
    """
    if d < 1:
        raise ComplexError("d must be at least 1")
    if attach is None:
        rng = random.Random(seed)
        attach = []
        for t in range(n_attach):
            attach.append((rng.randrange(t + 1), rng.randrange(d)))
    facets: list[tuple[int, ...]] = [tuple(range(1, d + 1))]
    for idx, sel in attach:
        if not 0 <= idx < len(facets):
            raise ComplexError(f"attachment names facet {idx}, only {len(facets)} exist")
        base = facets[idx]
        if isinstance(sel, int):
            if not 0 <= sel < d:
                raise ComplexError(f"ridge selector {sel} outside [0, {d})")
            ridge = base[:sel] + base[sel + 1:]
        else:
            ridge = tuple(sorted(sel))
            if len(ridge) != d - 1 or not set(ridge) <= set(base):
                raise ComplexError(f"{ridge} is not a ridge of facet {base}")
        new = len(facets) + d
        facets.append(ridge + (new,))
    return from_facets(d + len(attach), facets)


def rp2_six() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane."""
    return from_facets(6, [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ])


# --- path matrices -------------------------------------------------------


def cell_label(i: int, j: int, q: int) -> int:
    """Row-major label of grid cell (i, j) in a p x q matrix."""
    return (i - 1) * q + j


@dataclass(frozen=True)
class LatticePath:
    """Graph of a nondecreasing function: [p] -> [q] if vertical, [q] -> [p] if horizontal."""

    kind: Literal["vertical", "horizontal"]
    values: tuple[int, ...]

    def cells(self) -> frozenset[Cell]:
        if self.kind == "vertical":
            return frozenset((i + 1, v) for i, v in enumerate(self.values))
        return frozenset((v, j + 1) for j, v in enumerate(self.values))

    def is_valid(self, p: int, q: int) -> bool:
        dom, cod = (p, q) if self.kind == "vertical" else (q, p)
        vals = self.values
        return (len(vals) == dom and all(1 <= v <= cod for v in vals)
                and all(a <= b for a, b in zip(vals, vals[1:])))


def horizontal_paths(p: int, q: int) -> Iterator[LatticePath]:
    for vals in combinations_with_replacement(range(1, p + 1), q):
        yield LatticePath("horizontal", vals)


def vertical_paths(p: int, q: int) -> Iterator[LatticePath]:
    for vals in combinations_with_replacement(range(1, q + 1), p):
        yield LatticePath("vertical", vals)


def _path_mask(path: LatticePath, q: int) -> int:
    return to_mask(cell_label(i, j, q) for i, j in path.cells())


def path_complexes(p: int, q: int) -> tuple[SimplicialComplex, SimplicialComplex]:
    """(X, Y): facets of X are complements of horizontal paths, of Y of vertical paths."""
    if p < 1 or q < 1:
        raise ComplexError("p and q must be positive")
    full = (1 << (p * q)) - 1
    xs = [full ^ _path_mask(b, q) for b in horizontal_paths(p, q)]
    ys = [full ^ _path_mask(a, q) for a in vertical_paths(p, q)]
    return from_masks(p * q, xs), from_masks(p * q, ys)


def path_dichotomy(cells: set[Cell] | frozenset[Cell], p: int, q: int) -> LatticePath:
    """A horizontal path inside F, or else a vertical path inside its complement.

    Follows the constructive argument: grow the greedy lowest horizontal
    path column by column; if it stalls after column i at row b, the
    sub-block of rows < b and columns <= i has no horizontal path of F, so
    recursion there yields a vertical path of the complement, which is
    finished in column i+1 (free of F from row b down).
    """
    F = frozenset(cells)
    path = _dichotomy(F, p, q)
    assert path.is_valid(p, q)
    if path.kind == "horizontal":
        assert path.cells() <= F
    else:
        assert not path.cells() & F
    return path


def _dichotomy(F: frozenset[Cell], p: int, q: int) -> LatticePath:
    beta: list[int] = []
    lo = 1
    for j in range(1, q + 1):
        row = next((i for i in range(lo, p + 1) if (i, j) in F), None)
        if row is None:
            break
        beta.append(row)
        lo = row
    i = len(beta)
    if i == q:
        return LatticePath("horizontal", tuple(beta))
    b = beta[-1] if beta else 1
    if b > 1:
        sub = _dichotomy(frozenset(c for c in F if c[0] < b and c[1] <= i), b - 1, i)
        assert sub.kind == "vertical", "greedy path was not lowest"
        head = sub.values
    else:
        head = ()
    return LatticePath("vertical", head + (i + 1,) * (p - len(head)))


def lex_shelling_order(p: int, q: int, which: Literal["X", "Y"] = "X") -> list[int]:
    """Facet indices of X (or Y) ordered lexicographically by their defining paths.

    Paths compare as value sequences with 1 the largest symbol, larger paths
    first; that is plain ascending order on the value tuples.
    """
    X, Y = path_complexes(p, q)
    full = (1 << (p * q)) - 1
    if which == "X":
        cx, paths = X, horizontal_paths(p, q)
    elif which == "Y":
        cx, paths = Y, vertical_paths(p, q)
    else:
        raise ComplexError(f"which must be 'X' or 'Y', got {which!r}")
    index = {m: i for i, m in enumerate(cx.masks)}
    ordered = sorted(paths, key=lambda path: path.values)
    return [index[full ^ _path_mask(path, q)] for path in ordered]


# --- diagonal identifications -------------------------------------------


@dataclass(frozen=True)
class PathMatrixSpec:
    """p x q grid with cells merged along normal diagonals D_k = {i + j = k + 1}."""

    p: int
    q: int
    identification: tuple[tuple[Cell, ...], ...]

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p < 1 or q < 1:
            raise ComplexError("p and q must be positive")
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.identification))
        seen: set[Cell] = set()
        for b in blocks:
            if not b:
                raise ComplexError("identification blocks must be nonempty")
            if len({i + j for i, j in b}) != 1:
                raise ComplexError(f"block {b} straddles two diagonals")
            for cell in b:
                i, j = cell
                if not (1 <= i <= p and 1 <= j <= q) or cell in seen:
                    raise ComplexError(f"cell {cell} out of range or repeated")
                seen.add(cell)
        if len(seen) != p * q:
            raise ComplexError("identification must cover every cell")
        object.__setattr__(self, "identification", blocks)

    @classmethod
    def trivial(cls, p: int, q: int) -> PathMatrixSpec:
        return cls(p, q, tuple(((i, j),) for i in range(1, p + 1) for j in range(1, q + 1)))

    @classmethod
    def full(cls, p: int, q: int) -> PathMatrixSpec:
        return cls(p, q, tuple(tuple(diagonal(p, q, k)) for k in range(1, p + q)))

    @property
    def n(self) -> int:
        return len(self.identification)

    @property
    def m(self) -> int:
        return self.p * self.q - self.n

    def block_labels(self) -> dict[Cell, int]:
        """Blocks are numbered by their first cell in row-major order."""
        order = sorted(self.identification, key=lambda b: (b[0][0], b[0][1]))
        return {cell: k for k, b in enumerate(order, start=1) for cell in b}


def diagonal(p: int, q: int, k: int) -> list[Cell]:
    """Cells (i, j) with i + j = k + 1, by increasing row."""
    return [(i, k + 1 - i) for i in range(1, p + 1) if 1 <= k + 1 - i <= q]


def identify_diagonals(spec: PathMatrixSpec) -> SimplicialComplex:
    """Complex whose minimal nonfaces are the images of the vertical paths.

    A vertical path meets each diagonal at most once, so the images stay
    squarefree of size p.
    """
    label = spec.block_labels()
    images = []
    for path in vertical_paths(spec.p, spec.q):
        img = {label[c] for c in path.cells()}
        assert len(img) == spec.p
        images.append(img)
    return from_minimal_nonfaces(spec.n, images)


def _set_partitions(items: Sequence[Cell], blocks: int) -> Iterator[list[list[Cell]]]:
    """Partitions into exactly ``blocks`` blocks, restricted-growth order."""
    n = len(items)

    def rec(i: int, rgs: list[int], used: int) -> Iterator[list[int]]:
        if n - i < blocks - used:
            return
        if i == n:
            if used == blocks:
                yield rgs
            return
        for b in range(min(used + 1, blocks)):
            yield from rec(i + 1, rgs + [b], max(used, b + 1))

    for rgs in rec(0, [], 0):
        out: list[list[Cell]] = [[] for _ in range(blocks)]
        for item, b in zip(items, rgs):
            out[b].append(item)
        yield out


def _merge_vectors(lengths: list[int], m: int) -> Iterator[list[int]]:
    """Merge counts per diagonal, greedy on the given order first."""
    if not lengths:
        if m == 0:
            yield []
        return
    cap = lengths[0] - 1
    rest_cap = sum(x - 1 for x in lengths[1:])
    for r in range(min(cap, m), max(0, m - rest_cap) - 1, -1):
        for tail in _merge_vectors(lengths[1:], m - r):
            yield [r] + tail


def identification_candidates(p: int, q: int, m: int) -> Iterator[PathMatrixSpec]:
    """Deterministic stream of identifications with exactly m merges.

    Longer diagonals receive merges first; within a diagonal the set
    partitions are taken in restricted-growth order.
    """
    diags = sorted(range(1, p + q), key=lambda k: (-len(diagonal(p, q, k)), k))
    cells = [diagonal(p, q, k) for k in diags]
    for vec in _merge_vectors([len(c) for c in cells], m):
        yield from _specs_for(p, q, cells, vec)


def _specs_for(p: int, q: int, cells: list[list[Cell]], vec: list[int]) -> Iterator[PathMatrixSpec]:
    def rec(idx: int, acc: list) -> Iterator[PathMatrixSpec]:
        if idx == len(cells):
            yield PathMatrixSpec(p, q, tuple(tuple(b) for b in acc))
            return
        for part in _set_partitions(cells[idx], len(cells[idx]) - vec[idx]):
            yield from rec(idx + 1, acc + part)

    yield from rec(0, [])


@dataclass(frozen=True)
class NonConeResult:
    n: int
    c: int
    s: int
    found: bool
    complex: SimplicialComplex | None
    spec: PathMatrixSpec | None
    certificate: Certificate | None
    candidates_tried: int


def biCM_noncone(n: int, c: int, s: int, characteristics=DEFAULT_CHARACTERISTICS,
                 max_candidates: int = 1000, eagon_reiner: bool = True) -> NonConeResult:
    """Search diagonal identifications of the (c+1) x (s-c) grid for a certified non-cone.

    Exhausting ``max_candidates`` is reported in the result, not raised.
    """
    if not (0 < c < s <= n <= (c + 1) * (s - c)):
        raise ComplexError(f"(n, c, s) = ({n}, {c}, {s}) outside 0 < c < s <= n <= (c+1)(s-c)")
    p, q = c + 1, s - c
    m = p * q - n
    tried = 0
    for spec in identification_candidates(p, q, m):
        if tried >= max_candidates:
            break
        tried += 1
        cx = identify_diagonals(spec)
        if is_cone(cx):
            continue
        cert = certify(cx, characteristics, eagon_reiner=eagon_reiner)
        if cert.ok and cert.noncone and cert.type_ncs == (n, c, s):
            return NonConeResult(n, c, s, True, cx, spec, cert, tried)
    return NonConeResult(n, c, s, False, None, None, None, tried)


__all__ = [
    "LatticePath",
    "NonConeResult",
    "PathMatrixSpec",
    "biCM_noncone",
    "cell_label",
    "d_tree",
    "diagonal",
    "horizontal_paths",
    "identification_candidates",
    "identify_diagonals",
    "iterated_cone",
    "lex_shelling_order",
    "path_complexes",
    "path_dichotomy",
    "rp2_six",
    "skeleton_complex",
    "vertical_paths",
]
