"""Closed knight's and giraffe's tours with few turns and crossings."""

from ._knights import (
    Plan,
    UnsupportedDims,
    build,
    build_giraffe,
    build_multidim,
    build_odd,
    build_symmetric,
    compose,
    crossing_bound,
    find_closed_tour,
    giraffe_effect,
    metrics,
    validate,
)

__all__ = [
    "Plan",
    "UnsupportedDims",
    "build",
    "build_giraffe",
    "build_multidim",
    "build_odd",
    "build_symmetric",
    "compose",
    "crossing_bound",
    "find_closed_tour",
    "giraffe_effect",
    "metrics",
    "validate",
]
