"""Containment of finite groups in G2-subgroups, tested through the spinor representation.

Elements of the even Clifford group of the pure octonions act on the
octonions C through rho = spin_rep. A subgroup of Spin(P) lies in a
G2-subgroup exactly when it fixes an anisotropic spinor, and exactly
when each of its elements has the eigenvalue 1 on C. Both routes are
computed and compared.
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from g2lab.decide.type_g2 import poly_is_type_g2
from g2lab.errors import EquivalenceViolation, IncompleteSplit
from g2lab.geometry import (
    CliffordElement, fixed_anisotropic_spinor, nu, octonions, pi_action, so_from_spinor, spin_lift, spin_rep
)
from g2lab.groups import (
    LinearCharacter, MatrixGroup, character, common_tower, multiplicity, order2_linear_characters
)
from g2lab.scalars import Matrix, Poly, Scalar, Vector, charpoly, roots_in_tower, sqrt_of


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpinPreimage:
    """The inverse image of a group G in Spin(P), as matrices on C.

    ``group.generators`` are rho of ``lifts``: one lift per generator of G, then -1.
    """
    base: MatrixGroup
    group: MatrixGroup
    lifts: Tuple[CliffordElement, ...]
    tower_extensions: Tuple[Scalar, ...] = field(default=())

    def clifford_element(self, i: int) -> CliffordElement:
        acc = self.lifts[0].algebra.one()
        for k in self.group.word(i):
            acc = acc * self.lifts[k]
        return acc

    def projection(self) -> List[Matrix]:
        """pi of every element, in P coordinates."""
        return [so_from_spinor(m) for m in self.group.elements]


def spin_preimage(group: MatrixGroup) -> SpinPreimage:
    algebra = octonions(group.tower).pure.clifford
    lifts: List[CliffordElement] = []
    extensions: List[Scalar] = []
    for g in group.generators:
        lift = spin_lift(g, algebra)
        algebra = lift.element.algebra
        lifts.append(lift.element)
        extensions.extend(lift.tower_extensions)
    lifts = [x.coerce(algebra) for x in lifts]
    lifts.append(-algebra.one())

    tower = algebra.tower
    preimage = MatrixGroup([spin_rep(x) for x in lifts], name=f'Spin({group.name})', cap=2 * group.cap)
    for g, m in zip(group.generators, preimage.generators):
        assert so_from_spinor(m) == g.coerce(tower)
    assert preimage.order == 2 * group.order, (preimage.order, group.order)
    logger.debug('%s lifts to %r with extensions %s', group.name, preimage, extensions)
    return SpinPreimage(base=group, group=preimage, lifts=tuple(lifts), tower_extensions=tuple(extensions))


@dataclass(frozen=True)
class SpinContainment:
    contained: bool
    # an anisotropic spinor fixed by every element
    witness: Optional[Vector] = None
    # first element without the eigenvalue 1
    failing_index: Optional[int] = None


def contained_in_g2_spin(delta: MatrixGroup) -> SpinContainment:
    """Whether the subgroup of Spin(P), given by its matrices on C, lies in a G2-subgroup."""
    identity = Matrix.identity(delta.tower, delta.dim)
    failing = next((i for i, m in enumerate(delta.elements) if not (m - identity).det().is_zero()), None)
    witness = fixed_anisotropic_spinor(delta.generators)
    if (failing is None) != (witness is not None):
        raise EquivalenceViolation(
            f'{delta.name}: eigenvalue test and fixed spinor test disagree',
            evidence={'failing_index': failing, 'witness': witness},
        )
    logger.debug('%s inside a G2-subgroup: %s', delta.name, witness is not None)
    return SpinContainment(contained=witness is not None, witness=witness, failing_index=failing)


@dataclass(frozen=True)
class SOContainment:
    contained: bool
    preimage: SpinPreimage
    # index into order2_linear_characters of the preimage, with the character and its multiplicity on C
    beta_index: Optional[int] = None
    beta: Optional[LinearCharacter] = None
    beta_multiplicity: int = 0
    # anisotropic spinor fixed by the twisted group {beta(g) g}
    witness: Optional[Vector] = None


def twisted_group(preimage: SpinPreimage, beta: Sequence[int]) -> MatrixGroup:
    """{beta(g) g}: a subgroup of Spin(P) with the same image in SO(P)."""
    gamma = preimage.group
    generators = [m * beta[gamma.index(m)] for m in gamma.generators]
    return MatrixGroup(generators, name=f'{gamma.name} twisted', cap=gamma.cap)


def contained_in_g2_so(group: MatrixGroup, preimage: Optional[SpinPreimage] = None) -> SOContainment:
    """Whether a finite subgroup of SO(P) lies in a G2-subgroup.

    This holds when some order 2 character of the preimage occurs on C.
    """
    preimage = spin_preimage(group) if preimage is None else preimage
    gamma = preimage.group
    chi = character(gamma.elements)
    for k, beta in enumerate(order2_linear_characters(gamma)):
        m = multiplicity(beta, gamma, chi)
        if not m:
            continue
        spin = contained_in_g2_spin(twisted_group(preimage, beta))
        if not spin.contained:
            raise EquivalenceViolation(
                f'{group.name}: character {k} occurs on C but the twisted group fixes no anisotropic spinor',
                evidence={'beta_index': k, 'multiplicity': m},
            )
        logger.debug('%s: character %d occurs %d times', group.name, k, m)
        return SOContainment(
            contained=True, preimage=preimage, beta_index=k, beta=beta, beta_multiplicity=m, witness=spin.witness
        )
    return SOContainment(contained=False, preimage=preimage)


@dataclass(frozen=True)
class EigenSquareReport:
    type_g2: bool
    has_square_root_eigenvalue: bool
    # an eigenvalue of rho(gamma) squaring to nu(gamma), when one was named
    eigenvalue: Optional[Scalar] = None
    # det(t - rho/lambda) = (t - 1) det(t - pi), checked for ``eigenvalue``
    identity_holds: Optional[bool] = None


def _scaled_charpoly_identity(rho: Matrix, pi: Matrix, value: Scalar) -> bool:
    tower = value.tower
    left = charpoly(rho.coerce(tower) * value.inverse())
    right = Poly(tower, [-1, 1]) * charpoly(pi.coerce(tower))
    return left == right


def eigen_square_check(gamma: CliffordElement, seed: int = 0) -> EigenSquareReport:
    """Compare the type G2 test on pi(gamma) with an eigenvalue of rho(gamma) squaring to nu(gamma)."""
    rho = spin_rep(gamma)
    pi = pi_action(gamma)
    norm = nu(gamma)
    type_g2 = poly_is_type_g2(charpoly(pi))
    p = charpoly(rho)
    has_root = p.resultant_with_square(norm).is_zero()
    if type_g2 != has_root:
        raise EquivalenceViolation(
            'type G2 test and eigenvalue test disagree', evidence={'type_g2': type_g2, 'nu': str(norm)}
        )
    if not has_root:
        return EigenSquareReport(type_g2=False, has_square_root_eigenvalue=False)

    try:
        candidates = [r for r, _ in roots_in_tower(p, seed=seed) if r * r == norm]
    except IncompleteSplit as e:
        candidates = [r for r, _ in e.roots if r * r == norm]
    if not candidates:
        tower, root = sqrt_of(norm)
        p = p.coerce(tower)
        candidates = [r for r in (root, -root) if p(r).is_zero()]
    assert candidates, 'resultant vanishes but no eigenvalue squares to nu'
    for value in candidates:
        if _scaled_charpoly_identity(rho, pi, value):
            return EigenSquareReport(True, True, eigenvalue=value, identity_holds=True)
    return EigenSquareReport(True, True, eigenvalue=candidates[0], identity_holds=False)


def _power_traces(m: Matrix) -> Tuple[Scalar, Scalar, Scalar]:
    m2 = m @ m
    return m.trace(), m2.trace(), (m2 @ m).trace()


@dataclass(frozen=True)
class TraceIdentities:
    symmetric: Tuple[Scalar, Scalar]
    exterior: Tuple[Scalar, Scalar]

    @property
    def holds(self) -> bool:
        return self.symmetric[0] == self.symmetric[1] and self.exterior[0] == self.exterior[1]


def spinor_trace_identities(gamma: CliffordElement) -> TraceIdentities:
    """Sym2 W / nu against 1 + L3 E, and L2 W / nu against L2(1 + E), at one element.

    W is C under rho(gamma) and E is P under pi(gamma).
    """
    rho = spin_rep(gamma)
    pi = pi_action(gamma)
    norm = nu(gamma)
    w1, w2, _ = _power_traces(rho)
    e1, e2, e3 = _power_traces(pi.coerce(rho.tower))
    symmetric_w = (w1 * w1 + w2) / 2 / norm
    exterior_w = (w1 * w1 - w2) / 2 / norm
    exterior_cube_e = (e1 * e1 * e1 - e1 * e2 * 3 + e3 * 2) / 6
    exterior_square_e = (e1 * e1 - e2) / 2
    return TraceIdentities(
        symmetric=(symmetric_w, exterior_cube_e + 1),
        exterior=(exterior_w, exterior_square_e + e1),
    )


def spin_group_of(elements: Sequence[CliffordElement], name: str = 'spin group') -> MatrixGroup:
    """The group generated by even Clifford-group elements, as matrices on C."""
    matrices = [spin_rep(x) for x in elements]
    tower = common_tower(matrices)
    return MatrixGroup([m.coerce(tower) for m in matrices], name=name)


@dataclass(frozen=True)
class TwistedContainment:
    # None for the preimage itself, else an index into order2_linear_characters
    beta_index: Optional[int]
    multiplicity: int
    spin: SpinContainment


def twisted_containment(group: MatrixGroup, preimage: Optional[SpinPreimage] = None) -> List[TwistedContainment]:
    """Both containment routes on the preimage of ``group`` and on each of its order 2 twists.

    A twist {beta(g) g} fixes an anisotropic spinor exactly when beta occurs on C.
    """
    preimage = spin_preimage(group) if preimage is None else preimage
    gamma = preimage.group
    untwisted = contained_in_g2_spin(gamma)
    if untwisted.contained:
        raise EquivalenceViolation(f'{gamma.name} contains -1 but fixes an anisotropic spinor')
    rows = [TwistedContainment(beta_index=None, multiplicity=0, spin=untwisted)]
    chi = character(gamma.elements)
    for k, beta in enumerate(order2_linear_characters(gamma)):
        m = multiplicity(beta, gamma, chi)
        spin = contained_in_g2_spin(twisted_group(preimage, beta))
        if spin.contained != bool(m):
            raise EquivalenceViolation(
                f'{group.name}: character {k} has multiplicity {m} on C but the twist says {spin.contained}',
                evidence={'beta_index': k, 'multiplicity': m, 'failing_index': spin.failing_index},
            )
        rows.append(TwistedContainment(beta_index=k, multiplicity=m, spin=spin))
    logger.debug('%s: %d twists, %d contained', group.name, len(rows) - 1, sum(r.spin.contained for r in rows))
    return rows
