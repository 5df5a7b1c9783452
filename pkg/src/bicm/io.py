"""Plain-text complex files.

::

    # optional comments
    n 6
    1 2 3
    1 3 4
    ...

Vertex labels are 1-based; a line reading ``empty`` is the empty facet.
Serialization writes the header and then the facets in canonical order.
"""

from __future__ import annotations

from pathlib import Path

from .complex import SimplicialComplex, from_facets
from .errors import ComplexError

EMPTY_TOKEN = "empty"


def parse_complex(text: str) -> SimplicialComplex:
    n: int | None = None
    facets: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ComplexError(f"line {lineno}: expected header 'n <integer>', got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ComplexError(f"line {lineno}: bad vertex count {tokens[1]!r}") from None
            if n < 0:
                raise ComplexError(f"line {lineno}: negative vertex count")
            continue
        if tokens == [EMPTY_TOKEN]:
            facets.append(())
            continue
        try:
            facet = tuple(int(t) for t in tokens)
        except ValueError:
            raise ComplexError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if len(set(facet)) != len(facet):
            raise ComplexError(f"line {lineno}: repeated vertex in {line!r}")
        facets.append(facet)
    if n is None:
        raise ComplexError("missing header 'n <integer>'")
    return from_facets(n, facets)


def serialize_complex(cx: SimplicialComplex) -> str:
    lines = [f"n {cx.n}"]
    lines += [" ".join(map(str, f)) if f else EMPTY_TOKEN for f in cx.facets]
    return "\n".join(lines) + "\n"


def read_complex(path: str | Path) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ComplexError(f"cannot read {path}: {exc.strerror}") from None
    return parse_complex(text)


def write_complex(cx: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(serialize_complex(cx))
