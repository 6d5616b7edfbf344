"""The reproducible verification suite: every check is a deterministic function of the level and the seed."""
import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from g2lab.config import SUITE_SIZES, SuiteLevel
from g2lab.decide import (
    classify, contained_in_g2_so, eigen_square_check, elementwise_type_g2, poly_is_type_g2, roots_are_type_g2,
    spin_preimage, spinor_trace_identities, twisted_containment, type_g2_symbolic_equivalence_check
)
from g2lab.decide.classify import ClassificationReport
from g2lab.errors import EquivalenceViolation, G2LabError, TheoremViolation
from g2lab.gallery import (
    automorphism_pool, build_alpha, build_beta, build_g2_finite_sample, build_gamma, build_torus_subgroup,
    fuzz_subgroups, gamma_preset, gl2_representation_ring, monomial_rotations, random_rotation, sign_pair_group
)
from g2lab.geometry import (
    CliffordAlgebra, CliffordElement, ell_iso_check, g2_spin_lift, nu, octonions, pi_action,
    random_clifford_group_element, reference_space, reflection, spin_lift, spin_rep, torus_spin_element
)
from g2lab.groups import MatrixGroup, repring_identity_check
from g2lab.scalars import FieldTower, Matrix, Poly, charpoly


logger = logging.getLogger(__name__)

Q = FieldTower(1)
COLUMNS = ['check', 'anchor', 'passed', 'detail', 'seconds']

# (name, case, Witt index or None when not pinned)
GALLERY_EXPECTATIONS = {
    'alpha': ('C_z4xz2', 2),
    'beta-gl': ('B_gl2_or_sl2', 2),
    'beta-sl': ('B_gl2_or_sl2', 3),
    'dic16': ('D_o2pm', 3),
    'mixed16': ('D_o2pm', 2),
    'd8': ('A_contained', None),
    'torus(2, 2)': ('A_contained', None),
    'torus(3, 1)': ('A_contained', None),
    'torus(4, 2)': ('A_contained', None),
    'torus(5, 3)': ('A_contained', None),
    'g2sample': ('A_contained', None),
    'g2sample-low': ('A_contained', None),
}


def build_gallery(seed: int = 0) -> Dict[str, MatrixGroup]:
    gallery = {
        'alpha': build_alpha(),
        'beta-gl': build_beta('GL'),
        'beta-sl': build_beta('SL'),
        'dic16': build_gamma(gamma_preset('dic16')),
        'mixed16': build_gamma(gamma_preset('mixed16')),
        'd8': build_gamma(gamma_preset('d8')),
        'g2sample': build_g2_finite_sample(seed=seed),
        'g2sample-low': build_g2_finite_sample(seed=seed, max_witt_index=1),
    }
    for n1, n2 in ((2, 2), (3, 1), (4, 2), (5, 3)):
        group = build_torus_subgroup(n1, n2)
        gallery[group.name] = group
    return gallery


class SuiteContext:
    """Shared state of one suite run: sizes, seeded generators and the groups every check reuses."""
    def __init__(self, level: SuiteLevel = 'fast', seed: int = 0) -> None:
        if level not in SUITE_SIZES:
            raise ValueError(f'``level={level}`` is not supported')
        self.level = level
        self.seed = seed
        self.sizes = SUITE_SIZES[level]
        self._reports: Dict[str, ClassificationReport] = {}

    def rng(self, salt: str) -> random.Random:
        # one independent stream per check, so checks can run in any order
        return random.Random(f'{self.seed}:{salt}')

    @cached_property
    def gallery(self) -> Dict[str, MatrixGroup]:
        return build_gallery(self.seed)

    @cached_property
    def fuzzed(self) -> List[MatrixGroup]:
        count = max(self.sizes['fuzzed_subgroups'], self.sizes['fuzzed_classify'])
        rng = self.rng('fuzzed')
        low = self.gallery['g2sample-low']
        # conjugates of the Witt index <= 1 sample lead every slice
        controls = [low.conjugate(random_rotation(Q, rng), name=f'{low.name} conjugate {i}') for i in range(2)]
        return controls + fuzz_subgroups(self.gallery, seed=self.seed, count=count)

    @cached_property
    def non_g2(self) -> List[MatrixGroup]:
        """Subgroups of SO(E7) that are not elementwise of type G2, alongside some that are."""
        count = max(2, self.sizes['fuzzed_subgroups'] // 2)
        bases = {'monomial': monomial_rotations(Q)}
        return [sign_pair_group(Q)] + fuzz_subgroups(bases, seed=self.seed, count=count)

    @cached_property
    def fuzzed_reports(self) -> List[ClassificationReport]:
        return [
            classify(group, seed=self.seed)
            for group in self.fuzzed[:self.sizes['fuzzed_classify']] if elementwise_type_g2(group)[0]
        ]

    def report(self, name: str) -> ClassificationReport:
        if name not in self._reports:
            self._reports[name] = classify(self.gallery[name], seed=self.seed)
        return self._reports[name]


CheckResult = Tuple[bool, str]
Check = Callable[[SuiteContext], CheckResult]


@dataclass(frozen=True)
class SuiteCheck:
    name: str
    anchor: str
    run: Check


def _nonzero_rational(rng: random.Random, bound: int = 4) -> Fraction:
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value:
            return value


def check_type_g2_symbolic(ctx: SuiteContext) -> CheckResult:
    return type_g2_symbolic_equivalence_check(), 'a^2 - 2b - c - 4 over Q(x, y)'


def check_type_g2_instances(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng('type_g2')
    n = ctx.sizes['type_g2_instances']
    accepted = rejected = agreed = 0
    for _ in range(n):
        x, y = Q(_nonzero_rational(rng)), Q(_nonzero_rational(rng))
        roots = [Q.one(), x, y, x * y, x.inverse(), y.inverse(), (x * y).inverse()]
        accepted += poly_is_type_g2(Poly.from_roots(Q, roots))
    built = 0
    while built < n:
        # antipalindromic, with the third pair pushed off x y
        x, y = Q(_nonzero_rational(rng)), Q(_nonzero_rational(rng))
        z = x * y * Q(rng.choice((2, 3, -2, Fraction(1, 2), Fraction(-1, 3))))
        roots = [Q.one(), x, y, z, x.inverse(), y.inverse(), z.inverse()]
        if roots_are_type_g2(roots):
            continue
        built += 1
        rejected += not poly_is_type_g2(Poly.from_roots(Q, roots))
    for _ in range(n):
        pairs = [Q(_nonzero_rational(rng)) for _ in range(3)]
        roots = [Q.one()] + pairs + [r.inverse() for r in pairs]
        agreed += poly_is_type_g2(Poly.from_roots(Q, roots)) == roots_are_type_g2(roots)
    detail = (
        f'{accepted}/{n} instances accepted, {rejected}/{n} non-instances rejected, '
        f'{agreed}/{n} agree with brute force'
    )
    return accepted == n and rejected == n and agreed == n, detail


def check_ell_iso(ctx: SuiteContext) -> CheckResult:
    report = ell_iso_check()
    return report.passed, f'rank {report.rank}, graded={report.graded}'


def check_spin_lifts(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng('spin_lifts')
    space = reference_space(Q)
    algebra = CliffordAlgebra(space)
    n = ctx.sizes['spin_lifts']
    good = 0
    for _ in range(n):
        g = Matrix.identity(Q, 7)
        for _ in range(2 * rng.randint(1, 3)):
            while True:
                v = [Q(rng.randint(-2, 2)) for _ in range(7)]
                if not space.q(v).is_zero():
                    break
            g = g @ reflection(v, space)
        gamma = spin_lift(g, algebra).element
        good += nu(gamma) == 1 and pi_action(gamma) == g and pi_action(-gamma) == g
    return good == n, f'{good}/{n} lifts project back with norm 1'


def check_torus_elements(ctx: SuiteContext) -> CheckResult:
    rng = ctx.rng('torus')
    n = ctx.sizes['torus_elements']
    good = 0
    for _ in range(n):
        x0, l1, l2, l3 = (Q(_nonzero_rational(rng)) for _ in range(4))
        gamma = torus_spin_element(x0, l1, l2, l3)
        roots = [x0 * l1 ** a * l2 ** b * l3 ** c for a in (1, -1) for b in (1, -1) for c in (1, -1)]
        good += nu(gamma) == x0 * x0 and charpoly(spin_rep(gamma)) == Poly.from_roots(Q, roots)
    return good == n, f'{good}/{n} torus elements match the product formula'


def _random_gspin_elements(ctx: SuiteContext, salt: str, n: int):
    rng = ctx.rng(salt)
    clifford = octonions(Q).pure.clifford
    return [random_clifford_group_element(clifford, rng, factors=2 * rng.randint(1, 2))[0] for _ in range(n)]


def _eigen_square_elements(ctx: SuiteContext, n: int) -> List[CliffordElement]:
    """Elements of GSpin(P) with an eigenvalue on C squaring to nu, from three sources in turn.

    Conjugated torus elements x0 s(l1) s(l2) s((l1 l2)^-1), scalar multiples of lifts of
    automorphisms of C, and scalar multiples of lifts of the elements of the G2 sample.
    """
    rng = ctx.rng('eigen_square')
    clifford = octonions(Q).pure.clifford
    pool = automorphism_pool(Q)
    preimage = spin_preimage(ctx.gallery['g2sample'])
    # the last lift is -1
    sample_lifts = list(preimage.lifts[:-1])
    elements = []
    for i in range(n):
        c = Q(_nonzero_rational(rng))
        if i % 3 == 0:
            l1, l2 = Q(_nonzero_rational(rng)), Q(_nonzero_rational(rng))
            t = torus_spin_element(c, l1, l2, (l1 * l2).inverse())
            g = random_clifford_group_element(clifford, rng, factors=2)[0]
            elements.append(g * t * g.inverse())
        elif i % 3 == 1:
            phi = rng.choice(pool)
            for _ in range(rng.randint(0, 2)):
                phi = phi @ rng.choice(pool)
            elements.append(g2_spin_lift(phi).pure_element * c)
        else:
            lift = rng.choice(sample_lifts)
            elements.append(lift * lift.algebra.tower.coerce(c))
    return elements


def check_eigen_square(ctx: SuiteContext) -> CheckResult:
    n = ctx.sizes['eigen_square']
    with_root = good = 0
    for gamma in _eigen_square_elements(ctx, n):
        report = eigen_square_check(gamma, seed=ctx.seed)
        if report.has_square_root_eigenvalue:
            with_root += 1
            good += bool(report.identity_holds)
    detail = f'{with_root}/{n} elements have an eigenvalue squaring to nu, {good} satisfy the identity'
    return with_root == n and good == n, detail


def check_lambda_identities(ctx: SuiteContext) -> CheckResult:
    n = ctx.sizes['lambda_identities']
    elements = [octonions(Q).pure.clifford.one()] + _random_gspin_elements(ctx, 'lambda', n - 1)
    good = sum(spinor_trace_identities(gamma).holds for gamma in elements)
    return good == len(elements), f'{good}/{len(elements)} elements satisfy both trace identities'


def check_repring_equivalence(ctx: SuiteContext) -> CheckResult:
    groups = list(ctx.gallery.values()) + ctx.fuzzed[:ctx.sizes['fuzzed_subgroups']] + ctx.non_g2
    verdicts = [(g.name, elementwise_type_g2(g)[0], repring_identity_check(g)[0]) for g in groups]
    disagree = [name for name, by_element, by_ring in verdicts if by_element != by_ring]
    rejected = sum(not by_element for _, by_element, _ in verdicts)
    detail = f'{len(groups) - len(disagree)}/{len(groups)} agree, {rejected} rejected by both'
    return not disagree and rejected > 0, detail + (f'; {disagree}' if disagree else '')


SPIN_ROUTE_GROUPS = ('alpha', 'beta-gl', 'dic16', 'mixed16')


def check_spin_routes(ctx: SuiteContext) -> CheckResult:
    groups = [ctx.gallery[name] for name in SPIN_ROUTE_GROUPS] + ctx.fuzzed[:ctx.sizes['fuzzed_subgroups']]
    twists = contained = 0
    mismatched = []
    for group in groups:
        preimage = spin_preimage(group)
        rows = twisted_containment(group, preimage)
        twists += len(rows) - 1
        contained += sum(row.spin.contained for row in rows)
        if any(row.spin.contained for row in rows) != contained_in_g2_so(group, preimage).contained:
            mismatched.append(group.name)
    detail = f'{len(groups)} preimages, {twists} twists, {contained} inside a G2-subgroup'
    return not mismatched, detail + (f'; {mismatched}' if mismatched else '')


def check_gallery_cases(ctx: SuiteContext) -> CheckResult:
    wrong = []
    for name, (case, _) in GALLERY_EXPECTATIONS.items():
        report = ctx.report(name)
        if report.case != case:
            wrong.append(f'{name}: {report.case}')
    n = len(GALLERY_EXPECTATIONS)
    return not wrong, f'{n - len(wrong)}/{n} gallery groups classified as expected' + (f'; {wrong}' if wrong else '')


def check_witt_indices(ctx: SuiteContext) -> CheckResult:
    found = {
        name: ctx.report(name).witt_index
        for name, (_, witt) in GALLERY_EXPECTATIONS.items() if witt is not None
    }
    expected = {name: witt for name, (_, witt) in GALLERY_EXPECTATIONS.items() if witt is not None}
    return found == expected, ', '.join(f'{name}: {witt}' for name, witt in found.items())


def check_gl2_representation_ring(ctx: SuiteContext) -> CheckResult:
    result = gl2_representation_ring(ctx.gallery['beta-gl'])
    return result.passed, f'Lambda3 E = {result.exterior_cube}, E + Sym2 E = {result.first_plus_symmetric}'


def check_fuzzed_classification(ctx: SuiteContext) -> CheckResult:
    reports = ctx.fuzzed_reports
    unclassified = [r.name for r in reports if r.case is None]
    return not unclassified, f'{len(reports)} fuzzed type G2 subgroups classified'


def check_witt_one_escape(ctx: SuiteContext) -> CheckResult:
    reports = ctx.fuzzed_reports
    escapes = [r.name for r in reports if r.witt_index is not None and r.witt_index <= 1 and r.case != 'A_contained']
    low = sum(r.witt_index is not None and r.witt_index <= 1 for r in reports)
    return low > 0 and not escapes, f'{low} fuzzed subgroups of Witt index <= 1, {len(escapes)} outside case A'


CHECKS: Tuple[SuiteCheck, ...] = (
    SuiteCheck('type_g2_symbolic', 'generic roots satisfy a^2 = 2b + c + 4', check_type_g2_symbolic),
    SuiteCheck('type_g2_instances', 'relation test agrees with root assignment', check_type_g2_instances),
    SuiteCheck('ell_iso', '256 monomial images of rank 256', check_ell_iso),
    SuiteCheck('spin_lifts', 'pi(+-gamma) = g and nu = 1', check_spin_lifts),
    SuiteCheck('torus_elements', 'rho spectrum x0 l1^+-1 l2^+-1 l3^+-1, nu = x0^2', check_torus_elements),
    SuiteCheck('eigen_square', 'det(t - rho / lambda) = (t - 1) det(t - pi)', check_eigen_square),
    SuiteCheck('lambda_identities', 'Sym2 W = 1 + L3 E and L2 W = L2(1 + E) up to nu', check_lambda_identities),
    SuiteCheck('repring_equivalence', 'element test iff representation ring test', check_repring_equivalence),
    SuiteCheck('spin_routes', 'eigenvalue 1 everywhere iff fixed anisotropic spinor', check_spin_routes),
    SuiteCheck('gallery_cases', 'alpha C, beta B, gamma D, D8 and tori A', check_gallery_cases),
    SuiteCheck('witt_indices', 'alpha 2, beta-GL 2, beta-SL 3', check_witt_indices),
    SuiteCheck('gl2_representation_ring', '(3, 1, 3, 2, 2, 1, 2, 2)', check_gl2_representation_ring),
    SuiteCheck('fuzzed_classification', 'every type G2 subgroup lands in one case', check_fuzzed_classification),
    SuiteCheck('witt_one_escape', 'Witt index <= 1 forces case A', check_witt_one_escape),
)


def run_check(check: SuiteCheck, ctx: SuiteContext) -> dict:
    start = time.perf_counter()
    try:
        passed, detail = check.run(ctx)
    except (EquivalenceViolation, TheoremViolation) as e:
        passed, detail = False, f'{type(e).__name__}: {e} {e.evidence}'
    except G2LabError as e:
        passed, detail = False, f'{type(e).__name__}: {e}'
    seconds = time.perf_counter() - start
    logger.info('%s: %s (%.2fs) %s', check.name, 'ok' if passed else 'FAILED', seconds, detail)
    return {'check': check.name, 'anchor': check.anchor, 'passed': bool(passed), 'detail': detail,
            'seconds': round(seconds, 3)}


def run_suite(level: SuiteLevel = 'fast', seed: int = 0, only: Optional[Sequence[str]] = None) -> pd.DataFrame:
    ctx = SuiteContext(level, seed)
    checks = CHECKS if only is None else [c for c in CHECKS if c.name in only]
    if only is not None and len(checks) != len(set(only)):
        unknown = sorted(set(only) - {c.name for c in CHECKS})
        raise ValueError(f'unknown checks: {unknown}')
    return pd.DataFrame([run_check(check, ctx) for check in checks], columns=COLUMNS)
