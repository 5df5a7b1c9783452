"""Standing numerical assertions for every CM / bi-CM verdict in the suites.

Each public ``is_CM`` / ``is_biCM`` binding inside the package is wrapped
for the whole session: a positive CM verdict must come with a nonnegative
h-vector, and a positive bi-CM verdict with h vanishing above c and an
f-polynomial that factors with a type.
"""

from __future__ import annotations

import sys

import pytest

import bicm  # noqa: F401  (loads every submodule before patching)
from bicm import homology
from bicm.fvectors import f_polynomial, h_vector, type_of

STANDING = {"cm": 0, "bicm": 0}


def _check_cm(cx):
    h = h_vector(f_polynomial(cx))
    assert all(x >= 0 for x in h), f"CM complex with negative h-vector {h}: {cx}"
    STANDING["cm"] += 1


def _check_bicm(cx):
    f = f_polynomial(cx)
    h = h_vector(f)
    t = type_of(f, cx.n)
    assert t is not None, f"bi-CM complex without type: {cx}"
    assert all(x == 0 for x in h[t[1] + 1:]), f"bi-CM h-vector {h} nonzero above c={t[1]}"
    STANDING["bicm"] += 1


_orig_cm = homology.is_CM
_orig_bicm = homology.is_biCM


def _is_cm(cx, k=0, guard=None):
    w = _orig_cm(cx, k, guard)
    if w.verdict:
        _check_cm(cx)
    return w


def _is_bicm(cx, k=0, guard=None):
    v = _orig_bicm(cx, k, guard)
    if v:
        _check_bicm(cx)
    return v


# patched at import time, before test modules bind the names
for _name, _mod in list(sys.modules.items()):
    if _mod is None or not (_name == "bicm" or _name.startswith("bicm.")):
        continue
    for _attr, _repl, _orig in (("is_CM", _is_cm, _orig_cm), ("is_biCM", _is_bicm, _orig_bicm)):
        if getattr(_mod, _attr, None) is _orig:
            setattr(_mod, _attr, _repl)


@pytest.fixture
def standing():
    return STANDING



_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
