import pytest

from g2lab.decide import classify, elementwise_type_g2
from g2lab.decide.classify import GL_PROFILE, SL_PROFILE, Z4XZ2_PROFILE
from g2lab.errors import ConductorTooSmall, NotSimilitude, SimilitudeFactorNotPlusMinusOne
from g2lab.gallery import (
    PRESET_CASES, O2pmGenerator, O2pmSubgroupSpec, build_g2_finite_sample, build_gamma, build_torus_subgroup,
    fuzz_subgroups, gamma_preset, gl2_representation_ring, pairing_permutation, predict_gamma_case,
    monomial_rotations, search_g2_elements, sign_pair_group, similitude_characters, verify_special_orthogonal
)
from g2lab.geometry import is_g2_automorphism, octonions, pi_action, spin_rep
from g2lab.groups import over_splitting_field, repring_identity_check, witt_index
from g2lab.gallery.gl2 import GL_GENERATORS, f3_closure, f3_det
from g2lab.scalars import FieldTower, Matrix, Poly, charpoly


Q = FieldTower(1)
Q4 = FieldTower(4)


@pytest.mark.parametrize('n1, n2, order', [(3, 1, 3), (2, 2, 4), (4, 2, 8), (1, 1, 1)])
def test_torus_orders(n1, n2, order):
    group = build_torus_subgroup(n1, n2)
    assert group.order == order
    assert group.is_abelian()
    verify_special_orthogonal(group.generators)


def test_torus_rejects_small_conductor():
    with pytest.raises(ConductorTooSmall):
        build_torus_subgroup(3, 1, tower=Q4)


def test_alpha(gallery):
    alpha = gallery['alpha']
    assert alpha.order == 8
    assert alpha.is_abelian()
    assert alpha.order_profile() == Z4XZ2_PROFILE
    assert elementwise_type_g2(alpha) == (True, None)


def test_beta(gallery):
    assert gallery['beta-gl'].order_profile() == GL_PROFILE
    assert gallery['beta-sl'].order_profile() == SL_PROFILE
    for name in ('beta-gl', 'beta-sl'):
        verify_special_orthogonal(gallery[name].generators)


def test_gl2_f3():
    elements = f3_closure(GL_GENERATORS)
    assert len(elements) == 48
    assert len(f3_closure(GL_GENERATORS[:2])) == 24
    assert all(f3_det(g) == 1 for g in f3_closure(GL_GENERATORS[:2]))


def test_sl2_acts_on_pairings_by_even_permutations():
    assert pairing_permutation((1, 0, 0, 1)) == [0, 1, 2]
    images = {tuple(pairing_permutation(g)) for g in f3_closure(GL_GENERATORS[:2])}
    assert images == {(0, 1, 2), (1, 2, 0), (2, 0, 1)}
    assert len({tuple(pairing_permutation(g)) for g in f3_closure(GL_GENERATORS)}) == 6


@pytest.mark.parametrize('name', sorted(PRESET_CASES))
def test_presets_predict_their_case(name):
    spec = gamma_preset(name)
    group = build_gamma(spec)
    assert predict_gamma_case(group, similitude_characters(spec)) == PRESET_CASES[name]


def test_preset_orders(gallery):
    assert gallery['d8'].order == 8
    assert gallery['dic16'].order == 16
    assert gallery['mixed16'].order == 16
    assert not gallery['mixed16'].is_abelian()


def test_unknown_preset():
    with pytest.raises(ValueError):
        gamma_preset('d10')


def test_preset_needs_roots_of_unity():
    with pytest.raises(ConductorTooSmall):
        gamma_preset('dic16', tower=Q4)


def _spec(*generators):
    return O2pmSubgroupSpec(tower=Q4, generators=tuple(generators))


def test_declared_similitude_factor_is_checked():
    swap = Matrix(Q4, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        build_gamma(_spec(O2pmGenerator(swap, mu=-1)))


def test_similitude_factor_must_be_a_sign():
    with pytest.raises(SimilitudeFactorNotPlusMinusOne):
        build_gamma(_spec(O2pmGenerator(Matrix(Q4, [[2, 0], [0, 1]]))))


def test_gamma_rejects_non_similitudes():
    with pytest.raises(NotSimilitude):
        build_gamma(_spec(O2pmGenerator(Matrix(Q4, [[1, 1], [0, 1]]))))


def test_g2_sample():
    group = build_g2_finite_sample(seed=3)
    assert group.order > 1
    assert elementwise_type_g2(group) == (True, None)
    verify_special_orthogonal(group.generators)


def test_fuzzed_subgroups(gallery):
    bases = {name: gallery[name] for name in ('alpha', 'd8', 'dic16')}
    subgroups = fuzz_subgroups(bases, seed=1, count=6)
    assert len(subgroups) == 6
    assert all(any(base.order % sub.order == 0 for base in bases.values()) for sub in subgroups)
    assert fuzz_subgroups(bases, seed=1, count=6)[0].name == subgroups[0].name


def test_gl2_representation_ring(gallery):
    check = gl2_representation_ring(gallery['beta-gl'])
    assert check.exterior_cube == (3, 1, 3, 2, 2, 1, 2, 2)
    assert check.first_plus_symmetric == check.exterior_cube
    assert check.symmetric_h and check.v_irreducible
    assert check.passed


@pytest.mark.parametrize('name, index, s', [('d8', 1, 1), ('q8', 1, -1), ('d8-eta1', 0, -1)])
def test_elements_outside_gso2(name, index, s):
    spec = gamma_preset(name)
    group = build_gamma(spec)
    t = Poly.t(group.tower)
    expected = (t * t - s) ** 2 * (t - s) * (t + s) * (t + 1)
    assert charpoly(group.generators[index]) == expected
    assert spec.generators[index].matrix @ spec.generators[index].matrix == Matrix.identity(Q4, 2) * s


def test_fuzzed_subgroups_stay_in_so(gallery):
    for sub in fuzz_subgroups({'alpha': gallery['alpha']}, seed=2, count=3):
        verify_special_orthogonal(sub.generators)
        assert elementwise_type_g2(sub) == (True, None)


def test_search_g2_elements_fix_the_unit():
    elements = search_g2_elements(seed=0, pool_size=6)
    assert elements
    e = octonions(Q).e.coords
    for x in elements:
        assert is_g2_automorphism(x.automorphism)
        assert x.automorphism.apply(e) == e
        assert spin_rep(x.element) == x.automorphism
        assert pi_action(x.element) == x.image
        power = x.automorphism
        for _ in range(x.order - 1):
            power = power @ x.automorphism
        assert power.is_identity()
    assert len({x.automorphism.key() for x in elements}) == len(elements)
    assert [x.automorphism for x in search_g2_elements(seed=0, pool_size=6)] == [x.automorphism for x in elements]


def test_g2_sample_with_low_witt_index():
    group = build_g2_finite_sample(seed=0, max_witt_index=1)
    assert witt_index(over_splitting_field(group)) <= 1
    assert elementwise_type_g2(group) == (True, None)
    assert classify(group).case == 'A_contained'


def test_monomial_rotations_are_not_type_g2():
    group = monomial_rotations(Q)
    assert group.order == 384
    verify_special_orthogonal(group.generators)
    assert not elementwise_type_g2(group)[0]
    assert not repring_identity_check(group)[0]
    sign_pair = sign_pair_group(Q)
    assert elementwise_type_g2(sign_pair) == (False, 1)
    assert repring_identity_check(sign_pair) == (False, 1)


def test_fuzzed_monomial_subgroups_agree_on_both_tests():
    for sub in fuzz_subgroups({'monomial': monomial_rotations(Q)}, seed=4, count=5):
        verify_special_orthogonal(sub.generators)
        assert elementwise_type_g2(sub)[0] == repring_identity_check(sub)[0]
