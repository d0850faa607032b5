"""Homotopy classification of total spaces of S^(2k-1)-fibrations over S^(2k)
for 2 <= k <= 6, by brute-force orbit enumeration checked against the closed
form counts."""

from .abelian import AbelianGroup, Endo, GroupElement, hom_from_images, orbits
from .action import SelfEquivalence, equivalence_params, epsilon_k, induced_endo, negation_endo
from .classify import (
    ClassificationMismatch,
    ClassificationResult,
    admissible_coefficients,
    attaching_set,
    brute_force_classify,
    closed_form_G,
    cross_validate,
    representatives_symbolic,
)
from .kgroups import KGroup, build_K, image_subgroup, sphere_table

__version__ = "0.1.0"
