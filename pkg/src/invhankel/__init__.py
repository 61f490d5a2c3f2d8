"""Coefficient functionals for inverses of normalized univalent functions.

The package bundles a truncated power-series engine with exact and
floating backends, Schur-parameter sampling of Schwarz functions, the
coefficient systems of four subordination-defined function families,
the Hankel determinant a3*a5 - a4**2 for a function and its inverse,
Grunsky tables of the odd square-root transform, and seeded searches
that verify the sharp bounds numerically.
"""

__version__ = "0.1.0"

from .series import PowerSeries, QComplex
from .schwarz import SchurParams, SchwarzParams, carlson_slack, sample_admissible, schur_to_schwarz
from .funclasses import CLASS_TAGS, CoefficientSet, build_from_schwarz, extremal
from .hankel import h23, h23_inverse, inverse_coeffs
from .grunsky import full_class_bound, grunsky_coeffs, sqrt_transform
from .search import bound_table, difference_search, random_search, sharpness_check

__all__ = [
    "PowerSeries",
    "QComplex",
    "SchurParams",
    "SchwarzParams",
    "carlson_slack",
    "sample_admissible",
    "schur_to_schwarz",
    "CLASS_TAGS",
    "CoefficientSet",
    "build_from_schwarz",
    "extremal",
    "h23",
    "h23_inverse",
    "inverse_coeffs",
    "full_class_bound",
    "grunsky_coeffs",
    "sqrt_transform",
    "bound_table",
    "difference_search",
    "random_search",
    "sharpness_check",
    "__version__",
]
