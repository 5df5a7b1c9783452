"""Small-scale evidence for the cone conjectures.

Exhaustive searches work on isomorphism classes: facet sets are grown one
facet at a time, and after each step only one canonical representative per
class is kept.  Every constraint used for pruning (running face counts not
exceeding the target f-vector) is inherited by subsets, so each target
complex is reached from the representative of each of its sub-collections.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

from . import guards
from .complex import (
    SimplicialComplex,
    alexander_dual,
    face_masks_by_size,
    frame_invariant_c,
    from_masks,
    is_cone,
)
from .errors import ComplexError
from .fvectors import cone_bound, f_polynomial, f_sc, one_plus_t_power, poly_mul, type_of
from .homology import DEFAULT_CHARACTERISTICS, is_biCM, is_CM
from .isomorphism import canonical_form


@dataclass
class Exemplar:
    complex: SimplicialComplex
    characteristics: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"facets": [list(f) for f in self.complex.facets], "characteristics": list(self.characteristics)}


@dataclass
class SearchReport:
    n: int
    c: int
    s: int
    examined: int = 0
    bicm: int = 0
    cones: int = 0
    noncones: int = 0
    bicm_by_characteristic: dict[int, int] = field(default_factory=dict)
    exemplars: list[Exemplar] = field(default_factory=list)
    char_dependent: list[Exemplar] = field(default_factory=list)
    exhaustive: bool = True
    seed: int | None = None
    characteristics: tuple[int, ...] = DEFAULT_CHARACTERISTICS

    @property
    def conjecture_bound(self) -> int:
        """c(s-c-1): the conjectured maximum of n-s for a non-cone."""
        return self.c * (self.s - self.c - 1)

    @property
    def conjecture_holds(self) -> bool:
        return self.noncones == 0 or self.n - self.s <= self.conjecture_bound

    def as_dict(self) -> dict:
        return {
            "n": self.n, "c": self.c, "s": self.s,
            "examined": self.examined,
            "bicm": self.bicm,
            "cones": self.cones,
            "noncones": self.noncones,
            "bicm_by_characteristic": {str(p): v for p, v in sorted(self.bicm_by_characteristic.items())},
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "characteristics": list(self.characteristics),
            "conjecture_bound": self.conjecture_bound,
            "conjecture_holds": self.conjecture_holds,
            "exemplars": [e.as_dict() for e in self.exemplars],
            "char_dependent": [e.as_dict() for e in self.char_dependent],
        }


def target_f(n: int, c: int, s: int) -> tuple[int, ...]:
    if not 0 <= c <= s <= n:
        raise ComplexError(f"need 0 <= c <= s <= n, got ({n}, {c}, {s})")
    return poly_mul(one_plus_t_power(n - s), f_sc(s, c))


def _face_counts(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(len(level) for level in face_masks_by_size(masks))


def _within(counts: tuple[int, ...], target: tuple[int, ...]) -> bool:
    return len(counts) <= len(target) and all(a <= b for a, b in zip(counts, target))


def _exhaustive_classes(n: int, target: tuple[int, ...], order_seed: int | None) -> list[SimplicialComplex]:
    d = len(target) - 1
    n_facets = target[-1]
    candidates = [sum(1 << (v - 1) for v in sub) for sub in combinations(range(1, n + 1), d)]
    if order_seed is not None:
        random.Random(order_seed).shuffle(candidates)
    level: dict[tuple, tuple[int, ...]] = {}
    first = canonical_form(from_masks(n, [candidates[0]]))
    level[first.facets] = first.masks
    for _ in range(n_facets - 1):
        nxt: dict[tuple, tuple[int, ...]] = {}
        for masks in level.values():
            have = set(masks)
            for cand in candidates:
                if cand in have:
                    continue
                grown = masks + (cand,)
                if not _within(_face_counts(grown), target):
                    continue
                canon = canonical_form(from_masks(n, grown))
                nxt.setdefault(canon.facets, canon.masks)
        level = nxt
    out = []
    for masks in level.values():
        cx = from_masks(n, masks)
        if f_polynomial(cx) == target:
            out.append(cx)
    return sorted(out, key=lambda cx: cx.facets)


def _sampled_classes(n: int, target: tuple[int, ...], samples: int, seed: int) -> tuple[list[SimplicialComplex], int]:
    rng = random.Random(seed)
    d = len(target) - 1
    pool = [sum(1 << (v - 1) for v in sub) for sub in combinations(range(1, n + 1), d)]
    found: dict[tuple, SimplicialComplex] = {}
    for _ in range(samples):
        rng.shuffle(pool)
        chosen: list[int] = []
        for cand in pool:
            trial = chosen + [cand]
            if _within(_face_counts(trial), target):
                chosen = trial
                if len(chosen) == target[-1]:
                    break
        cx = from_masks(n, chosen)
        if f_polynomial(cx) == target:
            canon = canonical_form(cx)
            found.setdefault(canon.facets, canon)
    return sorted(found.values(), key=lambda cx: cx.facets), samples


def _bicm_chars(cx: SimplicialComplex, chars: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p for p in chars if is_biCM(cx, p))


def enumerate_type(n: int, c: int, s: int, *, exhaustive: bool = True, samples: int = 100,
                   seed: int = 0, characteristics: Iterable[int] = DEFAULT_CHARACTERISTICS,
                   max_exemplars: int = 5, order_seed: int | None = None,
                   guard: int | None = None, jobs: int = 1) -> SearchReport:
    """Classify complexes on [n] with f = (1+t)^(n-s) f_(s,c) up to isomorphism.

    Each class is tested for bi-CM-ness over every listed characteristic and
    counted as bi-CM when that holds for at least one of them; exemplars are
    the bi-CM non-cones in canonical form, with the characteristics that
    certify them.  Classes whose verdict depends on the characteristic are
    always listed in ``char_dependent``, whatever ``max_exemplars`` says.
    ``order_seed`` shuffles the candidate order and must not change the
    report; neither may ``jobs``.
    """
    chars = tuple(characteristics)
    target = target_f(n, c, s)
    report = SearchReport(n, c, s, exhaustive=exhaustive, characteristics=chars,
                          seed=None if exhaustive else seed,
                          bicm_by_characteristic={p: 0 for p in chars})
    if len(target) == 1 or target == one_plus_t_power(n):
        # empty or full simplex: nothing to classify as bi-CM
        return report
    if exhaustive:
        guards.check("enum", n, guard, "ground-set size for exhaustive search")
        classes = _exhaustive_classes(n, target, order_seed)
        report.examined = len(classes)
    else:
        classes, report.examined = _sampled_classes(n, target, samples, seed)
    if jobs > 1 and len(classes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_bicm_chars, classes, [chars] * len(classes), chunksize=8))
    else:
        verdicts = [_bicm_chars(cx, chars) for cx in classes]
    for cx, good in zip(classes, verdicts):
        for p in good:
            report.bicm_by_characteristic[p] += 1
        if not good:
            continue
        report.bicm += 1
        if len(good) < len(chars):
            report.char_dependent.append(Exemplar(cx, good))
        if is_cone(cx):
            report.cones += 1
        else:
            report.noncones += 1
            if len(report.exemplars) < max_exemplars:
                report.exemplars.append(Exemplar(cx, good))
    return report


# --- c = 1 -------------------------------------------------------------------


@dataclass
class C1BoundResult:
    holds: bool
    counterexample: SimplicialComplex | None
    trees: int
    noncones: int
    equality: list[SimplicialComplex]


def all_complexes(n: int, guard: int | None = None) -> list[SimplicialComplex]:
    """Every complex on [n] (ghost vertices allowed) up to isomorphism, in canonical form.

    Facet sets are antichains of the Boolean lattice, whose number grows like the
    Dedekind numbers, so the default limit is n <= 5 (7581 antichains) unless
    ``guard`` raises it.
    """
    guards.check("enum", n, 5 if guard is None else guard, "vertices for complete enumeration")
    # larger subsets first, so a subset is only tested against chosen supersets
    subsets = sorted(range(1 << n), key=lambda m: (-m.bit_count(), m))
    seen: dict[SimplicialComplex, None] = {}

    def grow(start: int, chosen: list[int]) -> None:
        if chosen:
            seen.setdefault(canonical_form(from_masks(n, chosen)), None)
        for k in range(start, len(subsets)):
            m = subsets[k]
            if all(m & c != m for c in chosen):
                chosen.append(m)
                grow(k + 1, chosen)
                chosen.pop()

    grow(0, [])
    return list(seen)


def enumerate_trees(n_max: int) -> list[SimplicialComplex]:
    """All (d-1)-trees on at most n_max vertices, up to isomorphism."""
    out: list[SimplicialComplex] = []
    for d in range(1, n_max + 1):
        level = {canonical_form(from_masks(d, [(1 << d) - 1])).facets: from_masks(d, [(1 << d) - 1])}
        n = d
        while True:
            out.extend(level.values())
            if n == n_max:
                break
            nxt: dict[tuple, SimplicialComplex] = {}
            new_bit = 1 << n
            for cx in level.values():
                for f in cx.masks:
                    b = f
                    while b:
                        low = b & -b
                        b ^= low
                        grown = from_masks(n + 1, cx.masks + ((f ^ low) | new_bit,))
                        canon = canonical_form(grown)
                        nxt.setdefault(canon.facets, canon)
            level = nxt
            n += 1
    return out


def verify_c1_bound(n_max: int, guard: int | None = None, certify: bool = True) -> C1BoundResult:
    """Check n - s <= s - 2 for every non-cone (d-1)-tree with n <= n_max.

    With ``certify`` each tree is also confirmed bi-CM over Q and of type
    (n, 1, s), which guards the enumeration itself.
    """
    guards.check("enum", n_max, guard, "n_max for tree enumeration")
    trees = enumerate_trees(n_max)
    noncones = 0
    equality = []
    for cx in trees:
        if cx.is_full_simplex() or is_cone(cx):
            continue
        noncones += 1
        t = type_of(f_polynomial(cx), cx.n)
        if t is None or t[1] != 1:
            raise AssertionError(f"tree without type (n,1,s): {cx}")
        if certify and not is_biCM(cx, 0):
            raise AssertionError(f"tree not bi-CM: {cx}")
        n, _, s = t
        if n - s > s - 2:
            return C1BoundResult(False, cx, len(trees), noncones, equality)
        if n - s == s - 2:
            equality.append(cx)
    return C1BoundResult(True, None, len(trees), noncones, equality)


# --- cone bound -------------------------------------------------------------


@dataclass
class AuditEntry:
    n: int
    c: int
    bound: int
    binding: bool
    cone: bool


@dataclass
class AuditReport:
    entries: list[AuditEntry]
    violations: list[SimplicialComplex]
    skipped: int

    @property
    def ok(self) -> bool:
        return not self.violations


def cone_bound_audit(corpus: Iterable[SimplicialComplex], check_precondition: bool = True,
                     characteristic: int = 0) -> AuditReport:
    """Check that n > cone_bound(f, n, c) forces a cone, member by member.

    Members whose dual is not CM (over the given characteristic) fall
    outside the implication and are counted as skipped when
    ``check_precondition`` is on.
    """
    entries: list[AuditEntry] = []
    violations: list[SimplicialComplex] = []
    skipped = 0
    for cx in corpus:
        if cx.is_full_simplex():
            skipped += 1
            continue
        if check_precondition and not is_CM(alexander_dual(cx), characteristic):
            skipped += 1
            continue
        c = frame_invariant_c(cx)
        bound = cone_bound(f_polynomial(cx), cx.n, c)
        binding = cx.n > bound
        cone = bool(is_cone(cx))
        entries.append(AuditEntry(cx.n, c, bound, binding, cone))
        if binding and not cone:
            violations.append(cx)
    return AuditReport(entries, violations, skipped)


__all__ = [
    "AuditReport",
    "C1BoundResult",
    "SearchReport",
    "all_complexes",
    "cone_bound_audit",
    "enumerate_trees",
    "enumerate_type",
    "target_f",
    "verify_c1_bound",
]
