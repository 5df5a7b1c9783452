"""One-stop summary of a complex, shared by the CLI and the test suites."""

from __future__ import annotations

from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .complex import SimplicialComplex, alexander_dual, frame_invariant_c, is_cone
from .fvectors import cone_bound, f_polynomial, grothendieck_class, h_vector, hilbert_series_S, type_of
from .homology import DEFAULT_CHARACTERISTICS, is_CM

SCHEMA = "bicm-report/1"


@dataclass(frozen=True)
class Verdicts:
    cm: bool
    dual_cm: bool | None

    @property
    def bicm(self) -> bool | None:
        return None if self.dual_cm is None else self.cm and self.dual_cm


@dataclass(frozen=True)
class ComplexProfile:
    n: int
    d: int
    c: int
    f: tuple[int, ...]
    h: tuple[int, ...]
    type_ncs: tuple[int, int, int] | None
    cone_apexes: tuple[int, ...]
    verdicts: dict[int, Verdicts]
    dual_facets: int | None
    hilbert: tuple[int, ...] | None
    grothendieck: list[tuple[int, int]] | None
    cone_bound: int | None

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "analysis",
            "n": self.n,
            "d": self.d,
            "c": self.c,
            "f": list(self.f),
            "h": list(self.h),
            "type": list(self.type_ncs) if self.type_ncs else None,
            "cone_apexes": list(self.cone_apexes),
            "characteristics": {
                str(p): {"cm": v.cm, "dual_cm": v.dual_cm, "bicm": v.bicm}
                for p, v in sorted(self.verdicts.items())
            },
            "dual_facets": self.dual_facets,
            "hilbert_series": list(self.hilbert) if self.hilbert is not None else None,
            "grothendieck": [list(x) for x in self.grothendieck] if self.grothendieck is not None else None,
            "cone_bound": self.cone_bound,
        }


def _verdicts(cx: SimplicialComplex, dual: SimplicialComplex | None, p: int) -> Verdicts:
    cm = bool(is_CM(cx, p))
    return Verdicts(cm, None if dual is None else bool(is_CM(dual, p)))


def profile(cx: SimplicialComplex, characteristics: Iterable[int] = DEFAULT_CHARACTERISTICS,
            k_max: int = 8, jobs: int = 1) -> ComplexProfile:
    """Everything the analyze command reports.

    The dual-dependent fields are None for the full simplex, whose dual
    does not exist.
    """
    chars = tuple(dict.fromkeys(characteristics))
    f = f_polynomial(cx)
    c = frame_invariant_c(cx)
    full = cx.is_full_simplex()
    dual = None if full else alexander_dual(cx)
    if jobs > 1 and len(chars) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verdicts, [cx] * len(chars), [dual] * len(chars), chars))
    else:
        results = [_verdicts(cx, dual, p) for p in chars]
    return ComplexProfile(
        n=cx.n,
        d=cx.d,
        c=c,
        f=f,
        h=h_vector(f),
        type_ncs=type_of(f, cx.n),
        cone_apexes=is_cone(cx),
        verdicts=dict(zip(chars, results)),
        dual_facets=None if dual is None else len(dual.facets),
        hilbert=None if full else hilbert_series_S(f, cx.n, c, k_max),
        grothendieck=None if full else grothendieck_class(cx),
        cone_bound=None if full else cone_bound(f, cx.n, c),
    )
