"""Derivation modules of projective closures of monomial curves."""

__version__ = "0.1.0"

from .errors import DercurveError
from .numsgp import NumericalSemigroup, new_semigroup
from .plane import PlaneSemigroup, build_plane
from .dermod import DerivationModule, derivation_module
from .families import arslan, backelin, validate_family

__all__ = [
    "DercurveError",
    "DerivationModule",
    "NumericalSemigroup",
    "PlaneSemigroup",
    "arslan",
    "backelin",
    "build_plane",
    "derivation_module",
    "new_semigroup",
    "validate_family",
]
