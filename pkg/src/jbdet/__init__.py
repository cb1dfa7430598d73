"""Determinants and spectral calculus for matrix algebras over the
Cayley-Dickson tower: biquaternionic hermitian matrices of any order and
the 27-dimensional algebra of hermitian 3x3 octonion matrices."""

__version__ = "0.1.0"

from .cd import CDElement
from .determinant import DtResult, char_poly, dt, dt3_sarrus, dt_relative
from .errors import (
    ConsistencyError,
    DomainError,
    JbdetError,
    LevelMismatchError,
    NumericError,
    SingularError,
    UnsupportedInputError,
)
from .jordan import HermMatrix
from .minproj import MinProjParams, build_min_projection, classify_min_projection
from .reduce import ReductionResult, reduce_single, simultaneous_biq, simultaneous_quat
from .spectral import (
    SpectralResolution,
    dt_general,
    dt_unitary,
    spectral_decompose,
    unitary_sqrt,
)

__all__ = [
    "CDElement",
    "HermMatrix",
    "DtResult",
    "MinProjParams",
    "ReductionResult",
    "SpectralResolution",
    "char_poly",
    "classify_min_projection",
    "build_min_projection",
    "dt",
    "dt3_sarrus",
    "dt_general",
    "dt_relative",
    "dt_unitary",
    "reduce_single",
    "simultaneous_biq",
    "simultaneous_quat",
    "spectral_decompose",
    "unitary_sqrt",
    "JbdetError",
    "DomainError",
    "LevelMismatchError",
    "NumericError",
    "SingularError",
    "UnsupportedInputError",
    "ConsistencyError",
]
