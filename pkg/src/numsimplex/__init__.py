"""Lattice simplices attached to positional numeral systems and their h*-polynomials."""

from .poly import IntPolynomial
from .simplex import QSimplex, hstar, is_reflexive, normalized_volume, omega

__all__ = ["IntPolynomial", "QSimplex", "hstar", "is_reflexive", "normalized_volume", "omega"]
__version__ = "0.1.0"
