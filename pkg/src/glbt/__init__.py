"""Exact toric g-vectors, homology of vertex-induced subcomplexes and
lower bound checks for convex polytopes."""

from .complex import FaceLattice, PolyComplex, barycentric_subdivision, complement_closure, induced_subcomplex
from .geometry import PointConfiguration, convex_hull, glbt_triangulation
from .gvec import GVector, simplicial_g, toric_g
from .homology import alpha, betti, check_qglbt, check_zero_map

__all__ = [
    "FaceLattice",
    "PolyComplex",
    "PointConfiguration",
    "GVector",
    "alpha",
    "barycentric_subdivision",
    "betti",
    "check_qglbt",
    "check_zero_map",
    "complement_closure",
    "convex_hull",
    "glbt_triangulation",
    "induced_subcomplex",
    "simplicial_g",
    "toric_g",
]

__version__ = "0.1.0"
