"""Exceptions shared across the package."""


class AmmannError(Exception):
    """Base class for all package errors."""


class NonGenericShiftError(AmmannError):
    """A lattice point projected exactly onto the acceptance window boundary."""


class InvalidTileError(AmmannError):
    """Tile edges are not a golden rhombohedron (determinant out of range)."""


class NotCanonicalizableError(AmmannError):
    """No icosahedral element maps the tile's edge triple to a canonical triple."""


class NotQuasirationalError(AmmannError):
    """A facet has no normal in the unit star of the quasilattice Q."""


class MalformedRepError(AmmannError):
    """A half-space representation violates its structural contract."""


class EmptyInteriorError(AmmannError):
    """An opposite facet pair bounds a slab with empty interior."""
