import json

import numpy as np
import pytest

from biortho.errors import ParseError, SchemaError, ValidationError
from biortho.families import PairFamily, generate
from biortho.io import dumps, load_pair, pair_to_dict, save_pair


def test_identity_round_trip(tmp_path):
    path = save_pair(generate('identity', 3), tmp_path / 'id.json')
    pair = load_pair(path)
    assert np.array_equal(pair.phi, np.eye(3))
    assert pair.label == 'identity d=3'


def test_golden_round_trip_bit_exact(tmp_path, golden):
    pair = load_pair(save_pair(golden, tmp_path / 'g.json'))
    assert pair.phi.tobytes() == golden.phi.tobytes()
    assert pair.psi.tobytes() == golden.psi.tobytes()


@pytest.mark.parametrize('family', [PairFamily('random-regular', {'kappa': 77.0}),
                                    PairFamily('bounded-perturbation'),
                                    PairFamily('shifted-non-regular')])
def test_random_round_trip_bit_exact(tmp_path, family):
    src = generate(family, 11)
    pair = load_pair(save_pair(src, tmp_path / 'p.json'))
    assert pair.phi.tobytes() == src.phi.tobytes()
    assert pair.psi.tobytes() == src.psi.tobytes()


def test_file_layout(golden):
    data = pair_to_dict(golden)
    assert data['schema_version'] == 1
    assert (data['dim'], data['count']) == (2, 2)
    # row-major d x n of [re, im]
    assert data['phi'][0][1] == [1.0, 0.0]
    assert data['psi'][1][0] == [-1.0, 0.0]


def _write(tmp_path, data):
    p = tmp_path / 'x.json'
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return p


def test_shape_disagrees_with_dim(tmp_path, golden):
    data = pair_to_dict(golden)
    data['dim'] = 3
    with pytest.raises(SchemaError):
        load_pair(_write(tmp_path, data))


def test_wrong_version(tmp_path, golden):
    data = pair_to_dict(golden)
    data['schema_version'] = 2
    with pytest.raises(SchemaError):
        load_pair(_write(tmp_path, data))


def test_missing_field(tmp_path, golden):
    data = pair_to_dict(golden)
    del data['psi']
    with pytest.raises(SchemaError):
        load_pair(_write(tmp_path, data))


def test_malformed_json(tmp_path):
    with pytest.raises(ParseError):
        load_pair(_write(tmp_path, '{"dim": 2,'))


def test_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load_pair(tmp_path / 'absent.json')


def test_non_finite_entries(tmp_path, golden):
    text = dumps(pair_to_dict(golden)).replace('-1.0', 'NaN', 1)
    with pytest.raises(ValidationError):
        load_pair(_write(tmp_path, text))


def test_dumps_is_stable():
    obj = {'b': 1.5, 'a': [np.float64(2.0), np.int64(3)], 'c': float('inf')}
    assert dumps(obj) == dumps(obj)
    assert json.loads(dumps(obj)) == {'b': 1.5, 'a': [2.0, 3], 'c': 'inf'}
