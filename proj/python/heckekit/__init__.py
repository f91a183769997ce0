"""Exact computations in extended affine Weyl groups and affine Hecke algebras."""

from ._heckekit import (
    Algebra,
    AntisphericalElement,
    DatumMismatch,
    DomainError,
    HeckeElement,
    ParseError,
    ResourceError,
    lusztig_q_analogue,
    run_suite,
    suite_names,
    whittaker_trace,
)

__all__ = [
    "Algebra",
    "AntisphericalElement",
    "DatumMismatch",
    "DomainError",
    "HeckeElement",
    "ParseError",
    "ResourceError",
    "lusztig_q_analogue",
    "run_suite",
    "suite_names",
    "whittaker_trace",
]
