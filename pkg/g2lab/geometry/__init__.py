from .quadspace import (
    QuadSpace, Similitude, SubspaceFlag, Isometry, hyperbolic, line, orth_sum, reference_space,
    isometry_class, reflection, congruence_diagonalize, find_isometry
)
from .clifford import (
    CliffordAlgebra, CliffordElement, SpinLift, cl_mul, cl_transpose, nu, pi_action, spin_lift,
    reflection_factors, random_clifford_group_element
)
from .octonion import (
    Octonion, OctonionAlgebra, PureSpace, EllIsoReport, G2SpinLift, octonions, oct_mul, ell_generator,
    ell_iso_check, ell_image, embed_pure, restrict_pure, spin_rep, spin_rep_odd, spin_rep_from_vectors,
    is_related_triple, is_g2_automorphism, g2_spin_lift, fixed_anisotropic_spinor, so_from_spinor,
    torus_spin_element
)
