"""Supersingular isogeny graphs with level structure and their Hecke modules.

The package builds directed multigraphs of prime-degree isogenies between
supersingular elliptic curves carrying level-N structure (an orbit of torsion
bases under an open subgroup of GL2(Zhat)), realizes the adjacency matrices
as Hecke operators on the weighted divisor module of supersingular points,
and sieves the degree-zero subspace for rational eigensystems by exact
integer kernel computations.
"""

__version__ = "0.1.0"

from .fields import field, FieldDesc, FieldElem, embed, primitive_root_of_unity

__all__ = [
    "field",
    "FieldDesc",
    "FieldElem",
    "embed",
    "primitive_root_of_unity",
    "__version__",
]
