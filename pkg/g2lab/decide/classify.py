"""Classification of finite subgroups of SO(P) whose elements are all of type G2.

Such a group either lies in a G2-subgroup (case A) or is one of three
exceptional families, each recognised from the isotypic decomposition
of P: the binary tetrahedral-type groups GL2(F3) and SL2(F3) (case B),
Z/4 x Z/2 acting by its seven nontrivial characters (case C), and
subgroups of the orthogonal similitude group of a plane (case D).
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from g2lab.config import Case
from g2lab.decide.containment import SOContainment, contained_in_g2_so
from g2lab.decide.type_g2 import elementwise_type_g2
from g2lab.errors import EquivalenceViolation, TheoremViolation
from g2lab.groups import (
    Character, IsotypicDatum, MatrixGroup, dual, isotypic_split, multiplicity, over_splitting_field, product,
    repring_identity_check, witt_index
)


logger = logging.getLogger(__name__)

D8_PROFILE = {1: 1, 2: 5, 4: 2}
Z4XZ2_PROFILE = {1: 1, 2: 3, 4: 4}
SL_PROFILE = {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
GL_PROFILE = {1: 1, 2: 13, 3: 8, 4: 6, 6: 8, 8: 12}


@dataclass
class ClassificationReport:
    name: str
    order: int
    order_profile: Dict[int, int]
    elementwise_g2: bool
    failing_index: Optional[int] = None
    witt_index: Optional[int] = None
    case: Optional[Case] = None
    evidence: dict = field(default_factory=dict)
    isotypic: List[dict] = field(default_factory=list)
    tower_extensions: List[str] = field(default_factory=list)


class Constituents:
    """Isotypic data of a group with the character operations the patterns need."""
    def __init__(self, group: MatrixGroup, data: Sequence[IsotypicDatum]) -> None:
        self.group = group
        self.data = list(data)
        self.squares = [group.product(i, i) for i in range(group.order)]

    def shape(self, k: int) -> tuple:
        d = self.data[k]
        return d.dim, d.multiplicity, d.selfdual

    def character(self, k: int) -> Character:
        return self.data[k].character

    def is_trivial(self, k: int) -> bool:
        return self.data[k].dim == 1 and all(x == 1 for x in self.character(k))

    def is_order2(self, k: int) -> bool:
        return (
            self.data[k].dim == 1
            and not self.is_trivial(k)
            and all(x == 1 or x == -1 for x in self.character(k))
        )

    def determinant(self, k: int) -> Character:
        chi = self.character(k)
        assert self.data[k].dim == 2
        return tuple((a * a - chi[j]) / 2 for a, j in zip(chi, self.squares))

    def symmetric_square(self, k: int) -> Character:
        chi = self.character(k)
        return tuple((a * a + chi[j]) / 2 for a, j in zip(chi, self.squares))

    def is_dual_pair(self, k: int, l: int) -> bool:
        return dual(self.group, self.character(k)) == self.character(l)

    def twist_fixes(self, k: int, l: int) -> bool:
        """chi_k chi_l = chi_k."""
        return product(self.character(k), self.character(l)) == self.character(k)

    def occurs_in(self, k: int, chi: Character) -> int:
        return multiplicity(self.character(k), self.group, chi)

    def indices(self, predicate: Callable[[int], bool]) -> List[int]:
        return [k for k in range(len(self.data)) if predicate(k)]


def _is_d8(group: MatrixGroup) -> bool:
    return group.order == 8 and group.order_profile() == D8_PROFILE


def _match_case_c(group: MatrixGroup, parts: Constituents) -> Optional[dict]:
    if group.order != 8 or not group.is_abelian() or group.order_profile() != Z4XZ2_PROFILE:
        return None
    if len(parts.data) != 7 or any(parts.shape(k)[:2] != (1, 1) or parts.is_trivial(k) for k in range(7)):
        return None
    return {'order_profile': group.order_profile(), 'nontrivial_characters': 7}


def _match_case_b(group: MatrixGroup, parts: Constituents) -> Optional[dict]:
    profile = group.order_profile()
    if group.order == 24 and profile == SL_PROFILE:
        j = parts.indices(lambda k: parts.shape(k) == (2, 2, True))
        one = parts.indices(parts.is_trivial)
        cubic = parts.indices(lambda k: parts.shape(k) == (1, 1, False))
        if len(parts.data) != 4 or len(j) != 1 or len(one) != 1 or len(cubic) != 2:
            return None
        if not parts.is_dual_pair(*cubic) or any(x != 1 for x in parts.determinant(j[0])):
            return None
        return {'variant': 'SL', 'order': 24, 'J': j[0], 'trivial': one[0], 'c': cubic}
    if group.order == 48 and profile == GL_PROFILE:
        pair = parts.indices(lambda k: parts.shape(k) == (2, 1, False))
        h = parts.indices(lambda k: parts.shape(k) == (2, 1, True))
        c = parts.indices(parts.is_order2)
        if len(parts.data) != 4 or len(pair) != 2 or len(h) != 1 or len(c) != 1:
            return None
        if not parts.is_dual_pair(*pair):
            return None
        return {'variant': 'GL', 'order': 48, 'P': pair, 'H': h[0], 'c': c[0]}
    return None


def _side_conditions(group: MatrixGroup) -> dict:
    return {'nonabelian': not group.is_abelian(), 'not_d8': not _is_d8(group)}


def _match_case_d_witt3(parts: Constituents) -> List[dict]:
    """1 + 2c + 2J with J selfdual irreducible, det J = 1, J c = J and c in Sym2 J."""
    one = parts.indices(lambda k: parts.is_trivial(k) and parts.shape(k)[1] == 1)
    cs = parts.indices(lambda k: parts.is_order2(k) and parts.shape(k)[1] == 2)
    js = parts.indices(lambda k: parts.shape(k) == (2, 2, True))
    if len(parts.data) != 3 or len(one) != 1:
        return []
    matches = []
    for c, j in itertools.product(cs, js):
        if any(x != 1 for x in parts.determinant(j)) or not parts.twist_fixes(j, c):
            continue
        if parts.occurs_in(c, parts.symmetric_square(j)) < 1:
            continue
        matches.append({'witt': 3, 'J': j, 'c': c, 'similitude': c})
    return matches


def _match_case_d_witt2(parts: Constituents) -> List[dict]:
    """P + P* + c + e + ce with det P = c, P e = P and ce in Sym2 P."""
    ps = parts.indices(lambda k: parts.shape(k) == (2, 1, False))
    chars = parts.indices(lambda k: parts.is_order2(k) and parts.shape(k)[1] == 1)
    if len(parts.data) != 5 or len(ps) != 2 or len(chars) != 3 or not parts.is_dual_pair(*ps):
        return []
    if product(parts.character(chars[0]), parts.character(chars[1])) != parts.character(chars[2]):
        return []
    matches = []
    for p in ps:
        det = parts.determinant(p)
        for c, e in itertools.permutations(chars, 2):
            if det != parts.character(c) or not parts.twist_fixes(p, e):
                continue
            mu = next(k for k in chars if k not in (c, e))
            if parts.occurs_in(mu, parts.symmetric_square(p)) < 1:
                continue
            matches.append({'witt': 2, 'P': p, 'c': c, 'epsilon': e, 'similitude': mu})
    return matches


def _match_case_d(group: MatrixGroup, parts: Constituents) -> Optional[dict]:
    sides = _side_conditions(group)
    if not all(sides.values()):
        return None
    assignments = _match_case_d_witt3(parts) + _match_case_d_witt2(parts)
    if not assignments:
        return None
    return {'assignments': assignments, 'side_conditions': sides}


def _case_a_evidence(containment: SOContainment) -> dict:
    witness = containment.witness
    return {
        'beta_index': containment.beta_index,
        'beta': list(containment.beta),
        'beta_multiplicity': containment.beta_multiplicity,
        'fixed_spinor': [str(x) for x in witness] if witness is not None else None,
    }


def classify(group: MatrixGroup, seed: int = 0) -> ClassificationReport:
    report = ClassificationReport(
        name=group.name, order=group.order, order_profile=group.order_profile(), elementwise_g2=False
    )
    elementwise, failing = elementwise_type_g2(group)
    repring, repring_failing = repring_identity_check(group)
    if elementwise != repring:
        raise EquivalenceViolation(
            f'{group.name}: element test and representation ring test disagree',
            evidence={'failing_index': failing, 'repring_failing_index': repring_failing},
        )
    report.elementwise_g2 = elementwise
    report.failing_index = failing
    if not elementwise:
        logger.info('%s: element %d is not of type G2', group.name, failing)
        return report

    split = over_splitting_field(group)
    data = isotypic_split(split, seed=seed)
    parts = Constituents(split, data)
    report.isotypic = [d.summary() for d in data]
    report.witt_index = witt_index(split, data=data)

    containment = contained_in_g2_so(group)
    report.tower_extensions = [str(x) for x in containment.preimage.tower_extensions]
    matches: Dict[Case, dict] = {}
    if containment.contained:
        matches['A_contained'] = _case_a_evidence(containment)
    for case, matcher in (('B_gl2_or_sl2', _match_case_b), ('C_z4xz2', _match_case_c), ('D_o2pm', _match_case_d)):
        evidence = matcher(split, parts)
        if evidence is not None:
            matches[case] = evidence

    if len(matches) != 1:
        raise TheoremViolation(
            f'{group.name} matches {len(matches)} cases',
            evidence={'cases': sorted(matches), 'isotypic': report.isotypic, 'witt_index': report.witt_index},
        )
    ((report.case, report.evidence),) = matches.items()
    logger.info('%s (order %d, Witt index %d): case %s', group.name, group.order, report.witt_index, report.case)
    return report
