"""Exact computations with phi-algebras: the product a.b = phi(a) b on Q(i)^n.

Builds the algebras, their iterated dual bimodules and Arens products, and
checks derivation/cohomology, radical, ideal and multiplier structure with
exact Gaussian-rational linear algebra.
"""

from .algebra import Algebra, make_phi_algebra, multiply, radical, unitize
from .arens import arens_products, bidual_tower, bidual_tower_regularity
from .bimodule import Bimodule, action_span, dual_bimodule, nth_dual, regular_bimodule
from .cohomology import (
    derivation_space,
    h1,
    inner_derivations,
    make_noninner_even,
    n_weak_amenability_profile,
)
from .exactnum import GaussianRational, Matrix, Subspace, gr
from .structure import check_isomorphism, multipliers

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "Bimodule",
    "GaussianRational",
    "Matrix",
    "Subspace",
    "action_span",
    "arens_products",
    "bidual_tower",
    "bidual_tower_regularity",
    "check_isomorphism",
    "derivation_space",
    "dual_bimodule",
    "gr",
    "h1",
    "inner_derivations",
    "make_noninner_even",
    "make_phi_algebra",
    "multipliers",
    "multiply",
    "n_weak_amenability_profile",
    "nth_dual",
    "radical",
    "regular_bimodule",
    "unitize",
]
