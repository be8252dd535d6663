"""Support tau-tilting enumeration for bound quiver algebras over F_p."""
from ._kernels import BACKEND
from .algebra import (AlgebraError, Arrow, BoundAlgebra, Quiver, Relation, block_decompose,
                      build_algebra, cartan_matrix, center_basis, idempotent_truncation, opposite,
                      quotient_by_ideal, vertex_quotient)
from .catalog import catalog, load_quiver, resolve
from .modules import Module, decompose, g_vector, hom, is_tau_rigid, projective, tau
from .mutation import HasseGraph, enumerate_pairs, strata_by_quotients
from .screens import contains_infinite_subquiver, rad_square_zero_finite, screen

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AlgebraError", "Arrow", "BoundAlgebra", "Quiver", "Relation", "block_decompose",
    "build_algebra", "cartan_matrix", "center_basis", "idempotent_truncation", "opposite",
    "quotient_by_ideal", "vertex_quotient", "catalog", "load_quiver", "resolve", "Module",
    "decompose", "g_vector", "hom", "is_tau_rigid", "projective", "tau", "HasseGraph",
    "enumerate_pairs", "strata_by_quotients", "contains_infinite_subquiver",
    "rad_square_zero_finite", "screen",
]
