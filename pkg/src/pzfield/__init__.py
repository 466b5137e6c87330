"""Qualitative and Galoisian analysis of linear Polyanin-Zaitsev vector fields."""

from pzfield.errors import (
    AffineFamilyUnsupported,
    AllZeroParams,
    DomainError,
    LineOfEquilibria,
    PoleEncountered,
    PZError,
    RhoZero,
)
from pzfield.model import Family, LinearFamily, Params, PZField, reduce_to_linear

__version__ = "0.1.0"

__all__ = [
    "AffineFamilyUnsupported",
    "AllZeroParams",
    "DomainError",
    "Family",
    "LineOfEquilibria",
    "LinearFamily",
    "Params",
    "PoleEncountered",
    "PZError",
    "PZField",
    "RhoZero",
    "reduce_to_linear",
]
