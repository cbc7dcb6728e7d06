"""Exact combinatorics of Kottwitz-Rapoport strata for symplectic similitude groups.

Subpackages model the extended affine Weyl group of GSp_2g, mu-admissible
sets and their parahoric double quotients, the boundary embedding of
admissible sets across the minimal compactification, the Iwahori-Hecke
algebra with Bernstein functions and Kazhdan-Lusztig multiplicities,
Kostant-style nilradical cohomology with weight truncations, and the
assembled semi-simple trace table over all strata.
"""

__version__ = "0.1.0"

from . import admissible, affine_weyl, boundary, hecke

__all__ = ["admissible", "affine_weyl", "boundary", "hecke"]
