from .field import FieldTower, Scalar, absolute_norm, cyclotomic_coefficients
from .poly import Poly, poly_from_rationals, root_multiplicity
from .matrix import (
    Matrix, Vector, charpoly, kernel_basis, image_basis, span_basis, intersect_kernels, rank_mod_p,
    vector_add, vector_scale, is_zero_vector
)
from .roots import roots_in_tower
from .radicals import try_sqrt, adjoin_sqrt, sqrt_of, sqrt_rational, canonical_sign
