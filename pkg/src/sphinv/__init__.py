"""Classification of involutions of spherical 3-manifolds with exact verification."""

__version__ = "0.1.0"
