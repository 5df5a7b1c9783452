"""Exact ranks of sparse integer matrices over prime fields and the rationals.

A matrix is given as a list of columns; each column is a dict mapping row
index to a nonzero integer entry.  Columns are reduced left to right
against earlier pivots keyed by their lowest (largest) row index, the
usual scheme for boundary matrices, which keeps fill-in small.
"""

from __future__ import annotations

from math import gcd

# Mersenne prime used for the optional rational pre-pass.
PREPASS_PRIME = 2_147_483_647

Column = dict[int, int]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def rank_gf2(columns: list[Column]) -> int:
    pivots: dict[int, int] = {}
    for col in columns:
        bits = 0
        for r, v in col.items():
            if v & 1:
                bits ^= 1 << r
        while bits:
            low = bits.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = bits
                break
            bits ^= other
    return len(pivots)


def rank_mod_p(columns: list[Column], p: int) -> int:
    if p == 2:
        return rank_gf2(columns)
    pivots: dict[int, Column] = {}
    for col in columns:
        work = {r: v % p for r, v in col.items() if v % p}
        while work:
            low = max(work)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(work[low], -1, p)
                pivots[low] = {r: v * inv % p for r, v in work.items()}
                break
            f = work[low]
            for r, v in piv.items():
                nv = (work.get(r, 0) - f * v) % p
                if nv:
                    work[r] = nv
                else:
                    work.pop(r, None)
    return len(pivots)


def _primitive(col: Column) -> Column:
    g = 0
    for v in col.values():
        g = gcd(g, v)
        if g == 1:
            return col
    return {r: v // g for r, v in col.items()}


def rank_integer(columns: list[Column]) -> int:
    """Rank over Q by fraction-free elimination in integer arithmetic.

    Each reduction step replaces ``col`` by ``a*col - b*pivot`` with the
    pivot entries ``a`` and ``b`` reduced by their gcd, then divides out the
    column content.  Both operations keep the column's span membership over
    Q unchanged, so the count of surviving pivots is the rational rank.
    """
    pivots: dict[int, Column] = {}
    for col in columns:
        work = {r: v for r, v in col.items() if v}
        while work:
            low = max(work)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = _primitive(work)
                break
            a, b = piv[low], work[low]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {r: a * v for r, v in work.items()} if a != 1 else dict(work)
            for r, v in piv.items():
                nv = new.get(r, 0) - b * v
                if nv:
                    new[r] = nv
                else:
                    new.pop(r, None)
            work = _primitive(new)
    return len(pivots)


def rank(columns: list[Column], characteristic: int, n_rows: int | None = None) -> int:
    """Rank over the prime field of the given characteristic (0 means Q).

    Over Q a modular pass runs first; it is trusted only when it already
    proves the largest possible rank, since rank mod p never exceeds the
    rational rank.
    """
    if not columns:
        return 0
    if characteristic:
        return rank_mod_p(columns, characteristic)
    if n_rows is None:
        n_rows = 1 + max((max(c) for c in columns if c), default=-1)
    r = rank_mod_p(columns, PREPASS_PRIME)
    if r == min(len(columns), n_rows):
        return r
    return rank_integer(columns)
