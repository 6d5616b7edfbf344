"""JSON documents of the ``g2lab/1`` schema.

Scalars are written as a rational string when rational and as the list of
their rational coefficients in the tower basis otherwise. A tower is
``{"conductor": m, "sqrts": [...]}`` with each radicand written over the
level below it. Every top level document carries ``schema`` and ``kind``.
"""
import json
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from g2lab.config import SCHEMA
from g2lab.decide.classify import ClassificationReport
from g2lab.errors import SchemaError
from g2lab.gallery.o2pm import O2pmGenerator, O2pmSubgroupSpec
from g2lab.geometry import CliffordAlgebra, CliffordElement, Octonion, OctonionAlgebra, QuadSpace
from g2lab.groups import MatrixGroup
from g2lab.scalars import FieldTower, Matrix, Scalar


ScalarJson = Union[str, List[str]]
PathLike = Union[str, Path]


# scalars and towers

def scalar_to_json(x: Scalar) -> ScalarJson:
    if x.is_rational():
        return str(x.to_fraction())
    return [str(c) for c in x.coefficients()]


def scalar_from_json(tower: FieldTower, data: Any) -> Scalar:
    try:
        if isinstance(data, (int, str)):
            return tower(Fraction(data))
        if isinstance(data, list):
            return tower.from_coefficients([Fraction(c) for c in data])
    except (ValueError, ZeroDivisionError) as e:
        raise SchemaError(f'bad scalar {data!r}: {e}') from e
    raise SchemaError(f'bad scalar {data!r}')


def tower_to_json(tower: FieldTower) -> dict:
    return {'conductor': tower.conductor, 'sqrts': [scalar_to_json(d) for d in tower.sqrts]}


def tower_from_json(data: Any) -> FieldTower:
    _require(data, ('conductor', 'sqrts'), 'tower')
    conductor, sqrts = data['conductor'], data['sqrts']
    if not isinstance(conductor, int) or conductor < 1 or not isinstance(sqrts, list):
        raise SchemaError(f'bad tower {data!r}')
    radicands: List[Scalar] = []
    for d in sqrts:
        radicands.append(scalar_from_json(FieldTower(conductor, radicands), d))
    return FieldTower(conductor, radicands)


# linear algebra

def matrix_to_json(m: Matrix) -> List[List[ScalarJson]]:
    return [[scalar_to_json(x) for x in row] for row in m.entries]


def matrix_from_json(tower: FieldTower, data: Any) -> Matrix:
    if not isinstance(data, list) or not data or not all(isinstance(row, list) for row in data):
        raise SchemaError(f'bad matrix {data!r}')
    if len({len(row) for row in data}) != 1:
        raise SchemaError('matrix rows have different lengths')
    return Matrix(tower, [[scalar_from_json(tower, x) for x in row] for row in data])


def group_to_json(group: MatrixGroup) -> dict:
    return {
        'schema': SCHEMA,
        'kind': 'matrix_group',
        'name': group.name,
        'tower': tower_to_json(group.tower),
        'generators': [matrix_to_json(g) for g in group.generators],
    }


def group_from_json(data: Any) -> MatrixGroup:
    _check_header(data, 'matrix_group')
    _require(data, ('tower', 'generators'), 'matrix group')
    tower = tower_from_json(data['tower'])
    generators = data['generators']
    if not isinstance(generators, list) or not generators:
        raise SchemaError('a matrix group needs at least one generator')
    matrices = [matrix_from_json(tower, g) for g in generators]
    if any(m.rows != 7 or m.cols != 7 for m in matrices):
        raise SchemaError('generators must be 7x7 matrices')
    return MatrixGroup(matrices, name=data.get('name', 'group'))


def o2pm_spec_to_json(spec: O2pmSubgroupSpec) -> dict:
    generators = []
    for g in spec.generators:
        entry: Dict[str, Any] = {'mat': matrix_to_json(g.matrix)}
        if g.mu is not None:
            entry['mu'] = g.mu
        generators.append(entry)
    return {
        'schema': SCHEMA,
        'kind': 'o2pm_subgroup',
        'name': spec.name,
        'tower': tower_to_json(spec.tower),
        'generators': generators,
    }


def o2pm_spec_from_json(data: Any) -> O2pmSubgroupSpec:
    _check_header(data, 'o2pm_subgroup')
    _require(data, ('tower', 'generators'), 'O2 subgroup')
    tower = tower_from_json(data['tower'])
    if not isinstance(data['generators'], list) or not data['generators']:
        raise SchemaError('an O2 subgroup needs at least one generator')
    generators = []
    for entry in data['generators']:
        _require(entry, ('mat',), 'O2 generator')
        mu = entry.get('mu')
        if mu not in (None, 1, -1):
            raise SchemaError(f'``mu={mu}`` is not supported')
        matrix = matrix_from_json(tower, entry['mat'])
        if matrix.rows != 2 or matrix.cols != 2:
            raise SchemaError('O2 generators must be 2x2 matrices')
        generators.append(O2pmGenerator(matrix, mu=mu))
    return O2pmSubgroupSpec(tower=tower, generators=tuple(generators), name=data.get('name', 'gamma'))


# geometry

def quad_space_to_json(space: QuadSpace) -> dict:
    return {'schema': SCHEMA, 'kind': 'quad_space', 'tower': tower_to_json(space.tower),
            'gram': matrix_to_json(space.gram)}


def quad_space_from_json(data: Any) -> QuadSpace:
    _check_header(data, 'quad_space')
    _require(data, ('tower', 'gram'), 'quadratic space')
    try:
        return QuadSpace(matrix_from_json(tower_from_json(data['tower']), data['gram']))
    except ValueError as e:
        raise SchemaError(str(e)) from e


def clifford_element_to_json(x: CliffordElement) -> dict:
    algebra = x.algebra
    return {
        'schema': SCHEMA,
        'kind': 'clifford_element',
        'tower': tower_to_json(algebra.tower),
        'gram': matrix_to_json(algebra.space.gram),
        'basis': [[scalar_to_json(c) for c in b] for b in algebra.basis],
        'terms': {str(mask): scalar_to_json(c) for mask, c in sorted(x.terms.items())},
    }


def clifford_element_from_json(data: Any) -> CliffordElement:
    _check_header(data, 'clifford_element')
    _require(data, ('tower', 'gram', 'basis', 'terms'), 'Clifford element')
    tower = tower_from_json(data['tower'])
    try:
        space = QuadSpace(matrix_from_json(tower, data['gram']))
        basis = [[scalar_from_json(tower, c) for c in b] for b in data['basis']]
        algebra = CliffordAlgebra(space, basis)
        terms = {int(mask): scalar_from_json(tower, c) for mask, c in data['terms'].items()}
    except (ValueError, AttributeError, TypeError) as e:
        raise SchemaError(f'bad Clifford element: {e}') from e
    if any(mask < 0 or mask >= 1 << algebra.n for mask in terms):
        raise SchemaError('Clifford monomial out of range')
    return CliffordElement(algebra, terms)


def octonion_to_json(x: Octonion) -> dict:
    return {'schema': SCHEMA, 'kind': 'octonion', 'tower': tower_to_json(x.algebra.tower),
            'coords': [scalar_to_json(c) for c in x.coords]}


def octonion_from_json(data: Any, algebra: Optional[OctonionAlgebra] = None) -> Octonion:
    """Octonions only compare within one algebra, so callers may pass the algebra to read into."""
    _check_header(data, 'octonion')
    _require(data, ('tower', 'coords'), 'octonion')
    tower = tower_from_json(data['tower'])
    if algebra is None:
        algebra = OctonionAlgebra(tower)
    elif algebra.tower != tower:
        raise SchemaError(f'octonion over {tower!r} read into an algebra over {algebra.tower!r}')
    coords = data['coords']
    if not isinstance(coords, list) or len(coords) != 8:
        raise SchemaError('an octonion has 8 coordinates')
    return algebra.element([scalar_from_json(tower, c) for c in coords])


# reports

def report_to_json(report: ClassificationReport, witnesses: bool = True) -> dict:
    data = asdict(report)
    data['order_profile'] = {str(k): v for k, v in report.order_profile.items()}
    if not witnesses:
        data['evidence'] = {k: v for k, v in data['evidence'].items() if k != 'fixed_spinor'}
    return {'schema': SCHEMA, 'kind': 'classification_report', **data}


def report_from_json(data: Any) -> ClassificationReport:
    _check_header(data, 'classification_report')
    _require(data, ('name', 'order', 'order_profile', 'elementwise_g2'), 'classification report')
    fields = {k: v for k, v in data.items() if k not in ('schema', 'kind')}
    try:
        fields['order_profile'] = {int(k): v for k, v in fields['order_profile'].items()}
        return ClassificationReport(**fields)
    except (TypeError, ValueError, AttributeError) as e:
        raise SchemaError(f'bad classification report: {e}') from e


# files

READERS: Dict[str, Callable[[Any], Any]] = {
    'matrix_group': group_from_json,
    'o2pm_subgroup': o2pm_spec_from_json,
    'quad_space': quad_space_from_json,
    'clifford_element': clifford_element_from_json,
    'octonion': octonion_from_json,
    'classification_report': report_from_json,
}


def dumps(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True)


def loads(text: str) -> Any:
    """Parse a document of any known kind."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f'invalid JSON: {e}') from e
    _check_header(data)
    if data['kind'] not in READERS:
        raise SchemaError(f'``kind={data["kind"]}`` is not supported')
    return READERS[data['kind']](data)


def save(document: dict, path: PathLike) -> None:
    Path(path).write_text(dumps(document) + '\n')


def load(path: PathLike) -> Any:
    return loads(Path(path).read_text())


def _check_header(data: Any, kind: Optional[str] = None) -> None:
    if not isinstance(data, dict):
        raise SchemaError(f'expected a JSON object, got {type(data).__name__}')
    if data.get('schema') != SCHEMA:
        raise SchemaError(f'``schema={data.get("schema")}`` is not supported, expected {SCHEMA}')
    if 'kind' not in data:
        raise SchemaError('document has no kind')
    if kind is not None and data['kind'] != kind:
        raise SchemaError(f'expected a {kind} document, got {data["kind"]}')


def _require(data: Any, keys: Sequence[str], what: str) -> None:
    if not isinstance(data, dict):
        raise SchemaError(f'{what} must be a JSON object')
    missing = [k for k in keys if k not in data]
    if missing:
        raise SchemaError(f'{what} is missing {", ".join(missing)}')
