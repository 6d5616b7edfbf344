import pytest

from g2lab.decide import elementwise_type_g2
from g2lab.verify import (
    CHECKS, COLUMNS, GALLERY_EXPECTATIONS, SuiteContext, build_gallery, check_eigen_square, check_repring_equivalence,
    check_spin_routes, check_type_g2_instances, check_witt_one_escape, run_suite
)


CHEAP = ['type_g2_symbolic', 'type_g2_instances', 'torus_elements', 'lambda_identities']


def test_cheap_checks_pass():
    table = run_suite('fast', seed=0, only=CHEAP)
    assert list(table.columns) == COLUMNS
    assert table['check'].tolist() == CHEAP
    assert table['passed'].all(), table.to_string()


def test_seeded_runs_repeat():
    first = run_suite('fast', seed=7, only=['type_g2_instances', 'eigen_square'])
    second = run_suite('fast', seed=7, only=['type_g2_instances', 'eigen_square'])
    assert first['detail'].tolist() == second['detail'].tolist()
    assert first['passed'].all()


def test_gallery_checks():
    table = run_suite('fast', seed=0, only=['gallery_cases', 'witt_indices', 'gl2_representation_ring'])
    assert table['passed'].all(), table.to_string()


def test_build_gallery_names():
    assert set(build_gallery()) == set(GALLERY_EXPECTATIONS)


def test_check_names_are_unique():
    names = [c.name for c in CHECKS]
    assert len(names) == len(set(names))


def test_unknown_check():
    with pytest.raises(ValueError):
        run_suite('fast', only=['no_such_check'])


def test_unknown_level():
    with pytest.raises(ValueError):
        SuiteContext('medium')


def test_check_streams_are_independent():
    ctx = SuiteContext('fast', seed=1)
    assert ctx.rng('a').random() == ctx.rng('a').random()
    assert ctx.rng('a').random() != ctx.rng('b').random()


@pytest.fixture(scope='module')
def ctx():
    return SuiteContext('fast', seed=0)


def test_eigen_square_elements_all_have_a_root(ctx):
    passed, detail = check_eigen_square(ctx)
    assert passed, detail
    assert detail.startswith('10/10 elements have an eigenvalue squaring to nu, 10 ')


def test_type_g2_instances_include_rejected_non_instances(ctx):
    passed, detail = check_type_g2_instances(ctx)
    assert passed, detail
    assert '100/100 non-instances rejected' in detail


def test_repring_equivalence_sees_non_type_g2_groups(ctx):
    assert not elementwise_type_g2(ctx.non_g2[0])[0]
    passed, detail = check_repring_equivalence(ctx)
    assert passed, detail
    assert 'rejected by both' in detail


def test_spin_routes_run_on_every_twist(ctx):
    passed, detail = check_spin_routes(ctx)
    assert passed, detail
    assert not detail.endswith(' 0 twists, 0 inside a G2-subgroup')


def test_witt_one_escape_sees_low_witt_groups(ctx):
    assert ctx.fuzzed[0].name.endswith('conjugate 0')
    passed, detail = check_witt_one_escape(ctx)
    assert passed, detail
    assert not detail.startswith('0 ')
