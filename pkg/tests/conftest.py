from fractions import Fraction

import pytest
from hypothesis import strategies as st

from g2lab.scalars import FieldTower


def scalar_strategy(tower: FieldTower, bound: int = 5):
    """Scalars with small integer numerators and a small denominator."""
    return st.builds(
        lambda num, den: tower.from_coefficients([Fraction(x, den) for x in num]),
        st.lists(st.integers(-bound, bound), min_size=tower.degree, max_size=tower.degree),
        st.integers(1, 4),
    )


@pytest.fixture(scope='session')
def q():
    return FieldTower(1)


@pytest.fixture(scope='session')
def q4():
    return FieldTower(4)


@pytest.fixture(scope='session')
def q8():
    return FieldTower(8)


@pytest.fixture(scope='session')
def q24():
    return FieldTower(24)


@pytest.fixture(scope='session')
def gallery():
    """Gallery groups, built once per session."""
    from g2lab.gallery import build_alpha, build_beta, build_gamma, build_torus_subgroup, gamma_preset

    return {
        'alpha': build_alpha(),
        'beta-gl': build_beta('GL'),
        'beta-sl': build_beta('SL'),
        'd8': build_gamma(gamma_preset('d8')),
        'dic16': build_gamma(gamma_preset('dic16')),
        'mixed16': build_gamma(gamma_preset('mixed16')),
        'torus-3-1': build_torus_subgroup(3, 1),
    }
