"""f-polynomials, h-vectors and the numerical shadows of the associated sheaf.

Polynomials and truncated power series are plain tuples of Python ints,
lowest degree first.  Nothing here touches floating point.
"""

from __future__ import annotations

from math import comb, factorial, prod

from .complex import (
    SimplicialComplex,
    alexander_dual,
    face_masks_by_size,
    frame_invariant_c,
    strip_apexes,
)
from .errors import ComplexError

FPolynomial = tuple[int, ...]
HVector = tuple[int, ...]
PowerSeries = tuple[int, ...]


def trim(p) -> tuple[int, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a, b) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def one_plus_t_power(e: int) -> tuple[int, ...]:
    return tuple(comb(e, i) for i in range(e + 1))


def evaluate(p, t: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def divide_one_plus_t(p) -> tuple[int, ...] | None:
    """Exact quotient p / (1+t), or None when (1+t) does not divide p."""
    p = trim(p)
    if len(p) == 1:
        return None
    # synthetic division by t + 1 from the top coefficient down
    q = [0] * (len(p) - 1)
    rem = 0
    for i in range(len(p) - 1, 0, -1):
        rem = p[i] - rem
        q[i - 1] = rem
    if p[0] - rem != 0:
        return None
    return tuple(q)


def f_polynomial(cx: SimplicialComplex, guard: int | None = None) -> FPolynomial:
    """Coefficient of t^i is the number of faces with i vertices.

    Apex vertices are factored out first (each contributes a factor 1+t), so
    large iterated cones never enumerate their faces.
    """
    base, apex = strip_apexes(cx)
    counts = tuple(len(level) for level in face_masks_by_size(base.masks, guard))
    return poly_mul(counts, one_plus_t_power(len(apex)))


def h_vector(f: FPolynomial) -> HVector:
    """Solve t^d + f_0 t^(d-1) + ... + f_(d-1) = sum_i h_i (1+t)^(d-i)."""
    f = trim(f)
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: HVector) -> FPolynomial:
    d = len(h) - 1
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def dual_f(f: FPolynomial, n: int) -> FPolynomial:
    """f-polynomial of the Alexander dual, from f*_i + f_(n-i-2) = C(n, i+1).

    Coefficient index ``j`` holds f_(j-1), so the identity reads
    F*[j] = C(n, j) - F[n - j].
    """
    f = trim(f)

    def coef(j: int) -> int:
        return f[j] if 0 <= j < len(f) else 0

    out = [comb(n, j) - coef(n - j) for j in range(n + 1)]
    if any(x < 0 for x in out):
        raise ComplexError(f"f-polynomial {f} is not realizable on [{n}]")
    if out[0] == 0:
        raise ComplexError("the dual of the full simplex is void")
    return trim(out)


def f_sc(s: int, c: int) -> FPolynomial:
    """f-polynomial of the (c-1)-skeleton of the simplex on s vertices."""
    if not 0 <= c <= s:
        raise ComplexError(f"need 0 <= c <= s, got c={c}, s={s}")
    return tuple(comb(s, i) for i in range(c + 1))


def type_of(f: FPolynomial, n: int) -> tuple[int, int, int] | None:
    """(n, c, s) when f = (1+t)^(n-s) f_(s,c), else None."""
    q = trim(f)
    e = 0
    while True:
        nxt = divide_one_plus_t(q)
        if nxt is None:
            break
        q, e = nxt, e + 1
    s = n - e
    c = len(q) - 1
    if s < 0 or c > s or q != f_sc(s, c):
        return None
    return (n, c, s)


def divide_by_one_minus_t_power(series, n: int, k_max: int) -> PowerSeries:
    """Truncated expansion of series / (1-t)^n via n running prefix sums."""
    out = list(series[: k_max + 1]) + [0] * max(0, k_max + 1 - len(series))
    for _ in range(n):
        acc = 0
        for k in range(k_max + 1):
            acc += out[k]
            out[k] = acc
    return tuple(out)


def hilbert_series_S(f: FPolynomial, n: int, c: int, k_max: int) -> PowerSeries:
    """Coefficients 0..k_max of (-1)^(c+1) + (-1)^c f(-t) / (1-t)^n.

    When the dual complex is Cohen-Macaulay, coefficient k is the dimension
    of the space of global sections of the associated sheaf twisted by k.
    """
    if k_max < 0:
        raise ComplexError("k_max must be nonnegative")
    sign = -1 if c % 2 else 1
    num = [sign * a * (-1) ** i for i, a in enumerate(f)]
    series = list(divide_by_one_minus_t_power(num, n, k_max))
    series[0] -= sign
    return tuple(series)


def grothendieck_class(cx: SimplicialComplex) -> list[tuple[int, int]]:
    """Pairs (h*_(d*-j), n-1-j) for j = 0..d*.

    Formal unless the dual is Cohen-Macaulay; then the first entry is the
    rank of the sheaf twisted by c+1, and pair (h, k) stands for h copies
    of the structure sheaf of a k-dimensional projective space.
    """
    hd = h_vector(f_polynomial(alexander_dual(cx)))
    ds = len(hd) - 1
    return [(hd[ds - j], cx.n - 1 - j) for j in range(ds + 1)]


def chi_O(m: int, n: int) -> int:
    """Euler characteristic of O(m) on projective (n-1)-space."""
    if n <= 1:
        return 1
    return prod(m + i for i in range(1, n)) // factorial(n - 1)


def euler_char_from_f(f: FPolynomial, n: int, c: int, k: int) -> int:
    fs = dual_f(f, n)
    ds = len(fs) - 1
    return sum((-1) ** j * fs[ds - j] * chi_O(k - c - 1 - j, n) for j in range(ds + 1))


def euler_char_S(cx: SimplicialComplex, k: int) -> int:
    """Alternating sum over the linear resolution O(-c-1)^a <- ... <- O(-n)."""
    return euler_char_from_f(f_polynomial(cx), cx.n, frame_invariant_c(cx), k)


def cone_bound(f: FPolynomial, n: int, c: int) -> int:
    """a*b with a, b the Hilbert-series coefficients at c+1 and c+2.

    A complex with Cohen-Macaulay dual, this f-polynomial and more than a*b
    vertices is a cone.
    """
    series = hilbert_series_S(f, n, c, c + 2)
    return series[c + 1] * series[c + 2]
