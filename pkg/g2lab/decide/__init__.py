from .type_g2 import (
    TypeG2Verdict, elementwise_type_g2, poly_is_type_g2, roots_are_type_g2, type_g2_symbolic_equivalence_check,
    type_g2_verdict
)
from .containment import (
    EigenSquareReport, SOContainment, SpinContainment, SpinPreimage, TraceIdentities, contained_in_g2_so,
    TwistedContainment, contained_in_g2_spin, eigen_square_check, spin_group_of, spin_preimage, spinor_trace_identities,
    twisted_containment, twisted_group
)
from .classify import ClassificationReport, Constituents, classify
