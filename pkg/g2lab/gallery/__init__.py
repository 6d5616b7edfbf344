from .embedding import orthogonal_embedding, verify_special_orthogonal
from .abelian import build_alpha, build_torus_subgroup, torus_element
from .gl2 import RepresentationRingCheck, build_beta, faithful_plane, gl2_representation_ring, pairing_permutation
from .o2pm import (
    O2pmGenerator, O2pmSubgroupSpec, PRESET_CASES, build_gamma, gamma_preset, hyperbolic_plane, predict_gamma_case,
    similitude_characters
)
from .g2sample import automorphism_pool, build_g2_finite_sample, search_g2_elements
from .fuzz import fuzz_subgroups, monomial_rotations, random_rotation, sign_pair_group
