"""Exact psi/kappa intersection numbers on moduli of stable curves.

Rational results come back as :class:`fractions.Fraction`.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ENGINE_VERSION, CacheFormatError, cache_clear, cache_entries, relations

__all__ = [
    "ENGINE_VERSION",
    "CacheFormatError",
    "cache_clear",
    "cache_entries",
    "cache_load",
    "cache_save",
    "genus0_closed_form",
    "one_point_value",
    "psi_eval",
    "psi_integral",
    "psi_kappa_integral",
    "relations",
    "verify",
    "xi_witness",
]


def psi_integral(g, d):
    return Fraction(_core.psi_integral(g, list(d)))


def psi_kappa_integral(g, d, kappa):
    return Fraction(_core.psi_kappa_integral(g, list(d), list(kappa)))


def one_point_value(g):
    return Fraction(_core.one_point_value(g))


def genus0_closed_form(d):
    return Fraction(_core.genus0_closed_form(list(d)))


def xi_witness(g, r):
    return Fraction(_core.xi_witness(g, r))


def psi_eval(g, m, w=(), v=()):
    """Psi_{r,s,g,m}(W|V) at t = 0 for coordinate fields given by level."""
    return Fraction(_core.psi_eval(g, m, list(w), list(v)))


def _range(x):
    if x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    lo, hi = x
    return f"{lo}..{hi}"


def verify(relation, g=None, r=None, s=None, m=None, levels=None, n1=2, n2=2, timing=True):
    """Run a sweep and return its reports as a list of dicts.

    Ranges may be ints, (lo, hi) pairs or "lo..hi" strings.
    """
    text = _core.verify(relation, _range(g), _range(r), _range(s), _range(m), _range(levels), n1, n2, timing)
    return json.loads(text)


def cache_save(path):
    _core.cache_save(str(path))


def cache_load(path):
    """Merge a cache file into the shared engine; returns (entries, trusted)."""
    return _core.cache_load(str(path))
