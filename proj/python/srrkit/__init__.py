"""Exact service rate regions of MDS-coded storage systems."""

import json
from fractions import Fraction

try:
    from srrkit._core import *  # installed layout
    from srrkit import _core
except ImportError:  # build-tree layout used by the test suite
    from _core import *
    import _core

__all__ = [
    "construct", "hypergraph", "matching_number", "vertex_cover_number",
    "membership", "max_demand", "closed_form", "matching_simplex",
    "achievable_simplex", "region_vertices", "allocate", "sum_rate_bound",
    "region_svg", "verify_sweep", "frac", "loads",
]


def frac(text):
    """Exact `p/q` string to Fraction."""
    return Fraction(text)


def loads(text):
    """JSON text from the core module to a dict."""
    return json.loads(text)
