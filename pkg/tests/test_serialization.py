import json
import random

import pytest

from g2lab.decide import classify
from g2lab.errors import SchemaError
from g2lab.gallery import gamma_preset
from g2lab.geometry import octonions, random_clifford_group_element, reference_space
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix
from g2lab.serialization import (
    clifford_element_from_json, clifford_element_to_json, dumps, group_from_json, group_to_json, load, loads,
    matrix_to_json, o2pm_spec_from_json, o2pm_spec_to_json, octonion_from_json, octonion_to_json,
    quad_space_from_json, quad_space_to_json, report_from_json, report_to_json, save, scalar_from_json,
    scalar_to_json, tower_from_json, tower_to_json
)


Q = FieldTower(1)
TOWER = FieldTower(4, [3])


def _reparse(document):
    return json.loads(dumps(document))


def test_rational_scalars_are_strings():
    assert scalar_to_json(Q(3)) == '3'
    assert scalar_to_json(TOWER(-1) / 4) == '-1/4'
    assert scalar_from_json(Q, '5/6') == Q(5) / 6
    assert scalar_from_json(Q, 2) == Q(2)


def test_tower_and_scalar():
    assert tower_from_json(_reparse(tower_to_json(TOWER))) == TOWER
    x = TOWER.zeta(1) + TOWER.sqrt_generator(0) / 2
    data = scalar_to_json(x)
    assert isinstance(data, list) and len(data) == TOWER.degree
    assert scalar_from_json(TOWER, data) == x


def test_matrix_group(gallery):
    alpha = gallery['alpha']
    group = group_from_json(_reparse(group_to_json(alpha)))
    assert group.name == 'alpha'
    assert group.tower == alpha.tower
    assert group.generators == alpha.generators


def test_o2pm_spec():
    spec = gamma_preset('dic16')
    parsed = o2pm_spec_from_json(_reparse(o2pm_spec_to_json(spec)))
    assert parsed.tower == spec.tower
    assert [g.matrix for g in parsed.generators] == [g.matrix for g in spec.generators]
    assert [g.mu for g in parsed.generators] == [g.mu for g in spec.generators]


def test_geometry_documents():
    space = reference_space(FieldTower(4))
    assert quad_space_from_json(_reparse(quad_space_to_json(space))) == space

    clifford = octonions(Q).pure.clifford
    gamma, _ = random_clifford_group_element(clifford, random.Random(0), factors=2)
    assert clifford_element_from_json(_reparse(clifford_element_to_json(gamma))) == gamma

    algebra = octonions(Q)
    x = algebra.element([1, -2, 0, 3, 1, 0, 5, 7])
    assert octonion_from_json(_reparse(octonion_to_json(x)), algebra) == x


def test_report(gallery):
    report = classify(gallery['mixed16'])
    document = _reparse(report_to_json(report))
    assert document['case'] == 'D_o2pm'
    assert report_from_json(document) == report


def test_report_without_witnesses():
    report = classify(MatrixGroup([Matrix.identity(Q, 7)], name='trivial'))
    assert report.evidence['fixed_spinor'] is not None
    assert 'fixed_spinor' not in report_to_json(report, witnesses=False)['evidence']


def test_loads_dispatches_on_kind(tmp_path, gallery):
    path = tmp_path / 'group.json'
    save(group_to_json(gallery['d8']), path)
    group = load(path)
    assert isinstance(group, MatrixGroup)
    assert group.generators == gallery['d8'].generators
    assert loads(dumps(o2pm_spec_to_json(gamma_preset('d8')))).name == 'd8'


def _group_document(**changes):
    document = group_to_json(MatrixGroup([Matrix.identity(Q, 7)]))
    document.update(changes)
    return document


@pytest.mark.parametrize('document', [
    [],
    _group_document(schema='g2lab/0'),
    _group_document(kind='polynomial'),
    _group_document(generators=[]),
    _group_document(generators=[[['1', '0'], ['0', '1']]]),
    _group_document(generators=[[['x'] * 7] * 7]),
    _group_document(tower={'conductor': 0, 'sqrts': []}),
    {'schema': 'g2lab/1'},
])
def test_schema_errors(document):
    with pytest.raises(SchemaError):
        loads(json.dumps(document))


def test_invalid_json():
    with pytest.raises(SchemaError):
        loads('{"schema": ')


def test_similitude_factor_must_be_a_sign():
    document = o2pm_spec_to_json(gamma_preset('d8'))
    document['generators'][0]['mu'] = 2
    with pytest.raises(SchemaError):
        o2pm_spec_from_json(document)


def test_o2pm_generators_are_planar():
    document = o2pm_spec_to_json(gamma_preset('d8'))
    document['generators'][0]['mat'] = matrix_to_json(Matrix.identity(FieldTower(8), 3))
    with pytest.raises(SchemaError):
        o2pm_spec_from_json(document)
