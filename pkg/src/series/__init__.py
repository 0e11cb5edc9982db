"""Truncated u-expansions and the operators acting on them."""

from .useries import (
    USeries,
    apoly_series,
    series_arith,
    series_compose,
    series_exact_div,
    series_inv,
    series_reduce,
    series_vp,
    theta,
)

__all__ = [
    "USeries",
    "apoly_series",
    "series_arith",
    "series_compose",
    "series_exact_div",
    "series_inv",
    "series_reduce",
    "series_vp",
    "theta",
]
