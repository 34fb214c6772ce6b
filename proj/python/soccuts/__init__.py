"""Cutting planes for planar conic sets, computed in exact rational arithmetic."""

import json
from fractions import Fraction

from . import _core
from ._core import SoccutsError

__all__ = [
    "SoccutsError",
    "f_gamma",
    "classify_gamma",
    "check_function",
    "cuts",
    "certify",
    "face",
    "hull",
]


def _text(values):
    return [str(Fraction(v)) if not isinstance(v, str) else v for v in values]


def f_gamma(gamma, j, v):
    return Fraction(_core.f_gamma(_text(gamma), j, _text(v)))


def classify_gamma(gamma, j):
    return _core.classify_gamma(_text(gamma), j)


def check_function(gamma, j, samples=10000, seed=1, orthant=False):
    report, _ = _core.check_function(_text(gamma), j, samples, seed, orthant)
    return json.loads(report)


def _instance_text(instance):
    if isinstance(instance, dict):
        return json.dumps(instance)
    with open(instance, encoding="utf-8") as f:
        return f.read()


def _run(fn, instance, box):
    report, _ = fn(_instance_text(instance), list(box) if box is not None else None)
    return json.loads(report)


def cuts(instance, box=None):
    return _run(_core.cuts, instance, box)


def certify(instance, box=None):
    return _run(_core.certify, instance, box)


def face(instance, box=None):
    return _run(_core.face, instance, box)


def hull(instance, box=None):
    return _run(_core.hull, instance, box)
