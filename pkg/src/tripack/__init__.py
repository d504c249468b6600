"""Exact parallel packing of isosceles right and equilateral triangles.

Layer-packing engines for rectangles, right triangles and 60-degree right
trapezoids, unit-square dispatchers with machine-checked density guarantees,
and an independent exact validator producing packing certificates.
"""

from .scalar import BACKEND, QE, QuadExt, rat

__version__ = "0.1.0"

__all__ = ["BACKEND", "QE", "QuadExt", "rat", "__version__"]
