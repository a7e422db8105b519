"""Exact-arithmetic Ammann rhombohedral tilings and their toric reduction data.

Everything numerical in this package is carried out in the golden field
Q(phi) with exact rational coefficients; floats appear only in diagnostic
output and mesh export.
"""

__version__ = "0.1.0"

from .golden import GoldenRational, PHI, ONE, ZERO

__all__ = ["GoldenRational", "PHI", "ONE", "ZERO", "__version__"]
