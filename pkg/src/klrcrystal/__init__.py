"""Exact computations with KLR algebras, quantum shuffle characters and crystals."""

from .cartan import (
    CartanDatum,
    DominantWeight,
    RootVector,
    load_datum,
    pairing,
    quantum_numbers,
    standard_datum,
    validate_datum,
)
from .laurent import LaurentPoly

__all__ = [
    "CartanDatum",
    "DominantWeight",
    "LaurentPoly",
    "RootVector",
    "load_datum",
    "pairing",
    "quantum_numbers",
    "standard_datum",
    "validate_datum",
]

__version__ = "0.1.0"
