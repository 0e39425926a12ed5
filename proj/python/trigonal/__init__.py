"""Exact deformation invariants of the trigonal genus-4 family y^3 = (x^3-1)(x-u1)(x-u2)(x-u3).

Scalars are passed and returned as literals such as "1/2" or "1/2+-3/4*w" (w a primitive
cube root of unity). Every function returns the same report the command-line tool prints,
decoded into Python objects.
"""

import json

from . import _core
from ._core import (
    DegenerateInput,
    DomainError,
    InvalidParameters,
    StructuralError,
    TrigonalError,
    ZeroTangent,
)

__all__ = [
    "analyze",
    "residue_check",
    "scan",
    "ideal",
    "schiffer",
    "d0",
    "qz24",
    "TrigonalError",
    "InvalidParameters",
    "ZeroTangent",
    "StructuralError",
    "DomainError",
    "DegenerateInput",
]


def _literals(values):
    return [str(v) for v in values]


def analyze(u, xi):
    return json.loads(_core.analyze(_literals(u), _literals(xi)))


def residue_check(u, j=1, numeric=False, series_order=12):
    return json.loads(_core.residue_check(_literals(u), j, numeric, series_order))


def scan(grid="", u=None, random=0, seed=1, jobs=1):
    """`grid` is "cone:N" or "box:R" at fixed u; otherwise `random` rows drawn from `seed`."""
    fixed = None if u is None else _literals(u)
    return json.loads(_core.scan(grid, fixed, random, seed, jobs))


def ideal(u, seed=1):
    return json.loads(_core.ideal(_literals(u), seed))


def schiffer(u, point):
    return json.loads(_core.schiffer(_literals(u), _literals(point)))


def d0(u, t1, t=None):
    return json.loads(_core.d0(_literals(u), str(t1), None if t is None else str(t)))


def qz24(a=None):
    return json.loads(_core.qz24(None if a is None else str(a)))
