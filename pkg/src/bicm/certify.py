"""Bi-CM certificates checked along two independent routes."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .betti import eagon_reiner_check
from .complex import SimplicialComplex, VertexSet, is_cone
from .fvectors import f_polynomial, h_vector, type_of
from .homology import DEFAULT_CHARACTERISTICS, is_biCM


@dataclass(frozen=True)
class Certificate:
    characteristics: tuple[int, ...]
    bicm: dict[int, bool]
    eagon_reiner: dict[int, bool]
    apexes: VertexSet
    type_ncs: tuple[int, int, int] | None

    @property
    def ok(self) -> bool:
        """Bi-CM over every listed field, confirmed by the Eagon-Reiner route."""
        return all(self.bicm.values()) and all(self.eagon_reiner.values()) and self.type_ncs is not None

    @property
    def noncone(self) -> bool:
        return not self.apexes


def certify(cx: SimplicialComplex, characteristics: Iterable[int] = DEFAULT_CHARACTERISTICS,
            eagon_reiner: bool = True) -> Certificate:
    chars = tuple(characteristics)
    bicm = {p: is_biCM(cx, p) for p in chars}
    er = {p: eagon_reiner_check(cx, p) for p in chars} if eagon_reiner else {}
    f = f_polynomial(cx)
    cert = Certificate(chars, bicm, er, is_cone(cx), type_of(f, cx.n))
    if all(bicm.values()):
        check_bicm_numerics(cx, f)
    return cert


def check_bicm_numerics(cx: SimplicialComplex, f=None) -> None:
    """Standing assertions for a certified bi-CM complex.

    h is nonnegative, vanishes above index c, and f factors with a type.
    """
    f = f_polynomial(cx) if f is None else f
    h = h_vector(f)
    t = type_of(f, cx.n)
    assert t is not None, f"bi-CM complex without a type: f={f}"
    c = t[1]
    assert all(x >= 0 for x in h), f"negative h-vector {h}"
    assert all(x == 0 for x in h[c + 1:]), f"h-vector {h} nonzero above c={c}"
