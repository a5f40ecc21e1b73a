"""Exact line-arrangement operators."""

from ._lineops import (
    Arrangement,
    LineopsError,
    build,
    catalog,
    classify,
    equivalent,
    lam,
    matroid,
    matroid_isomorphic,
    orbit,
    profile,
    render_svg,
    run_cli,
    run_sequence,
)

__all__ = [
    "Arrangement",
    "LineopsError",
    "build",
    "catalog",
    "classify",
    "equivalent",
    "lam",
    "matroid",
    "matroid_isomorphic",
    "orbit",
    "profile",
    "render_svg",
    "run_cli",
    "run_sequence",
]
