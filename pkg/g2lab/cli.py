import json
import logging
import sys
from argparse import ArgumentParser, Namespace
from fractions import Fraction
from typing import Optional, Sequence

from g2lab.config import (
    EXIT_BAD_INPUT, EXIT_NOT_TYPE_G2, EXIT_OK, EXIT_ORDER_CAP, EXIT_THEOREM_VIOLATION, SUITE_SIZES
)
from g2lab.decide import classify, elementwise_type_g2, type_g2_verdict
from g2lab.errors import (
    ConstructionVerificationFailed, EquivalenceViolation, G2LabError, IncompleteSplit, OrderCapExceeded, SchemaError,
    TheoremViolation
)
from g2lab.gallery import (
    build_alpha, build_beta, build_g2_finite_sample, build_gamma, build_torus_subgroup, gamma_preset
)
from g2lab.gallery.o2pm import PRESET_CASES
from g2lab.geometry import reference_space
from g2lab.groups import MatrixGroup, over_splitting_field, repring_identity_check, witt_index, witt_witness
from g2lab.scalars import FieldTower, Poly
from g2lab.serialization import (
    dumps, group_from_json, group_to_json, o2pm_spec_from_json, report_to_json, scalar_to_json
)
from g2lab.verify import run_suite


logger = logging.getLogger(__name__)

FAMILIES = ('torus', 'alpha', 'beta-gl', 'beta-sl', 'gamma', 'd8', 'g2sample')


def parse_args(argv: Optional[Sequence[str]] = None) -> Namespace:
    parser = ArgumentParser(prog='g2lab', description='Finite subgroups of SO(7) and G2-subgroups.')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    commands = parser.add_subparsers(dest='command', required=True)

    poly = commands.add_parser('poly-g2', help='type G2 test of a degree 7 characteristic polynomial')
    poly.add_argument('coeffs', nargs='+', help='8 rational coefficients, highest degree first')

    cls = commands.add_parser('classify', help='classify a finite subgroup of SO(E7)')
    cls.add_argument('--input', required=True)
    cls.add_argument('--report')
    cls.add_argument('--witnesses', action='store_true')
    cls.add_argument('--seed', type=int, default=0)

    build = commands.add_parser('build', help='write a gallery group')
    build.add_argument('--family', choices=FAMILIES, required=True)
    build.add_argument('--n1', type=int, default=3)
    build.add_argument('--n2', type=int, default=1)
    build.add_argument('--preset', choices=sorted(PRESET_CASES), default='dic16')
    build.add_argument('--spec', help='O2 subgroup JSON for the gamma family')
    build.add_argument('--conductor', type=int)
    build.add_argument('--seed', type=int, default=0)
    build.add_argument('--output')

    witt = commands.add_parser('witt-index', help='Witt index of the invariant form')
    witt.add_argument('--input', required=True)
    witt.add_argument('--witnesses', action='store_true')

    repring = commands.add_parser('repring-check', help='element test against the representation ring test')
    repring.add_argument('--input', required=True)

    suite = commands.add_parser('verify-suite', help='run the verification suite')
    suite.add_argument('--level', choices=sorted(SUITE_SIZES), default='fast')
    suite.add_argument('--seed', type=int, default=0)
    suite.add_argument('--csv')
    suite.add_argument('--only', nargs='+')

    return parser.parse_args(argv)


def _emit(document: dict, path: Optional[str] = None) -> None:
    text = dumps(document)
    if path is None:
        print(text)
    else:
        with open(path, 'w', encoding='utf-8') as file:
            file.write(text + '\n')
        logger.info('wrote %s', path)


def load_json(path: str) -> dict:
    with open(path, encoding='utf-8') as file:
        try:
            return json.load(file)
        except json.JSONDecodeError as e:
            raise SchemaError(f'{path}: invalid JSON: {e}') from e


def _load_group(path: str) -> MatrixGroup:
    return group_from_json(load_json(path))


def cmd_poly_g2(args: Namespace) -> int:
    if len(args.coeffs) != 8:
        raise ValueError(f'expected 8 coefficients, got {len(args.coeffs)}')
    coeffs = [Fraction(c) for c in args.coeffs]
    if not coeffs[0]:
        raise ValueError('the leading coefficient is zero')
    q = FieldTower(1)
    p = Poly(q, [c / coeffs[0] for c in reversed(coeffs)])
    verdict = type_g2_verdict(p)
    _emit({
        'type_g2': verdict.type_g2,
        'abc': [scalar_to_json(x) for x in verdict.abc] if verdict.abc is not None else None,
        'reason': verdict.reason,
    })
    return EXIT_OK


def cmd_classify(args: Namespace) -> int:
    group = _load_group(args.input)
    report = classify(group, seed=args.seed)
    document = report_to_json(report, witnesses=args.witnesses)
    if args.witnesses and report.case is not None:
        document['witt_witness'] = _witness(group)
    _emit(document, args.report)
    if not report.elementwise_g2:
        logger.warning('%s: element %d is not of type G2', group.name, report.failing_index)
        return EXIT_NOT_TYPE_G2
    return EXIT_OK


def _witness(group: MatrixGroup) -> dict:
    split = over_splitting_field(group)
    witness = witt_witness(split, reference_space(split.tower))
    return {
        'index': witness.index,
        'basis': [[scalar_to_json(x) for x in v] for v in witness.basis],
        'tower_extensions': [str(x) for x in witness.tower_extensions],
    }


def cmd_build(args: Namespace) -> int:
    tower = FieldTower(args.conductor) if args.conductor else None
    family = args.family
    if family == 'torus':
        group = build_torus_subgroup(args.n1, args.n2, tower=tower)
    elif family == 'alpha':
        group = build_alpha(tower)
    elif family in ('beta-gl', 'beta-sl'):
        group = build_beta('GL' if family == 'beta-gl' else 'SL', tower)
    elif family == 'gamma':
        spec = o2pm_spec_from_json(load_json(args.spec)) if args.spec else gamma_preset(args.preset, tower)
        group = build_gamma(spec)
    elif family == 'd8':
        group = build_gamma(gamma_preset('d8', tower))
    else:
        group = build_g2_finite_sample(seed=args.seed, tower=tower)
    _emit(group_to_json(group), args.output)
    return EXIT_OK


def cmd_witt_index(args: Namespace) -> int:
    group = over_splitting_field(_load_group(args.input))
    document = {'name': group.name, 'witt_index': witt_index(group)}
    if args.witnesses:
        document['witt_witness'] = _witness(group)
    _emit(document)
    return EXIT_OK


def cmd_repring_check(args: Namespace) -> int:
    group = _load_group(args.input)
    elementwise, failing = elementwise_type_g2(group)
    repring, repring_failing = repring_identity_check(group)
    _emit({
        'name': group.name,
        'elementwise_g2': elementwise,
        'failing_index': failing,
        'repring_identity': repring,
        'repring_failing_index': repring_failing,
    })
    if elementwise != repring:
        return EXIT_THEOREM_VIOLATION
    return EXIT_OK if elementwise else EXIT_NOT_TYPE_G2


def cmd_verify_suite(args: Namespace) -> int:
    table = run_suite(args.level, args.seed, only=args.only)
    print(table.to_string(index=False))
    if args.csv:
        table.to_csv(args.csv, index=False)
    failed = table.loc[~table['passed'], 'check'].tolist()
    if failed:
        logger.error('failed checks: %s', ', '.join(failed))
        return EXIT_THEOREM_VIOLATION
    return EXIT_OK


COMMANDS = {
    'poly-g2': cmd_poly_g2,
    'classify': cmd_classify,
    'build': cmd_build,
    'witt-index': cmd_witt_index,
    'repring-check': cmd_repring_check,
    'verify-suite': cmd_verify_suite,
}


def main(args: Namespace) -> int:
    logging.basicConfig(
        level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    try:
        return COMMANDS[args.command](args)
    except OrderCapExceeded as e:
        logger.error('%s', e)
        return EXIT_ORDER_CAP
    except (TheoremViolation, EquivalenceViolation) as e:
        logger.error('%s: %s %s', type(e).__name__, e, json.dumps(e.evidence, default=str))
        return EXIT_THEOREM_VIOLATION
    except (ConstructionVerificationFailed, IncompleteSplit, AssertionError) as e:
        # failed internal invariants
        logger.error('%s: %s', type(e).__name__, e)
        return EXIT_THEOREM_VIOLATION
    except (G2LabError, ValueError, OSError) as e:
        logger.error('%s: %s', type(e).__name__, e)
        return EXIT_BAD_INPUT


def entrypoint() -> None:
    sys.exit(main(parse_args()))


if __name__ == '__main__':
    entrypoint()
