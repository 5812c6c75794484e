"""Right-angled Coxeter groups and right-angled buildings, exactly and at desk scale.

Everything here is exact integer/word combinatorics: canonical reduced words,
half-spaces and their shortest elements, finite product buildings, balls of
infinite regular buildings built by gluing or by covering, chamber morphisms
with certification, and integer simplicial homology via Smith normal form.
"""

from racb.coxeter import CoxeterSystem, Element, SphericalSubset
from racb.halfspace import HalfSpace

__all__ = [
    "CoxeterSystem",
    "Element",
    "SphericalSubset",
    "HalfSpace",
]

__version__ = "0.1.0"
