"""Exact checks of graded-ring, genus, Hodge and intersection numbers for
Calabi-Yau hypersurfaces in weighted projective 4-space with a curve of
transverse A1 singularities."""

from .core import (
    HypersurfaceFamily,
    SparsePoly,
    WeightSystem,
    enumerate_monomials,
    graded_dim,
    normalize_weights,
    random_member,
)

__all__ = [
    "HypersurfaceFamily",
    "SparsePoly",
    "WeightSystem",
    "enumerate_monomials",
    "graded_dim",
    "normalize_weights",
    "random_member",
]
