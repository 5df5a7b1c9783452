"""Default size guards.

Each default can be overridden through an environment variable, read at
call time so tests and the CLI can adjust them without reimporting.

=====================  ======================  =======
variable               guards                  default
=====================  ======================  =======
BICM_FACE_GUARD        faces per homology run  200000
BICM_ISO_GUARD         n for canonical forms   12
BICM_HOCHSTER_GUARD    n for Hochster sums     16
BICM_SHELLING_GUARD    facets in shelling DP   12
BICM_ENUM_GUARD        n for exhaustive search 7
=====================  ======================  =======
"""

from __future__ import annotations

import os

from .errors import GuardExceeded

_DEFAULTS = {
    "face": ("BICM_FACE_GUARD", 200_000),
    "iso": ("BICM_ISO_GUARD", 12),
    "hochster": ("BICM_HOCHSTER_GUARD", 16),
    "shelling": ("BICM_SHELLING_GUARD", 12),
    "enum": ("BICM_ENUM_GUARD", 7),
}


def limit(kind: str, override: int | None = None) -> int:
    if override is not None:
        return override
    var, default = _DEFAULTS[kind]
    raw = os.environ.get(var)
    return int(raw) if raw else default


def check(kind: str, value: int, override: int | None = None, what: str | None = None) -> None:
    lim = limit(kind, override)
    if value > lim:
        raise GuardExceeded(what or kind, value, lim)
