"""PairFile reading and writing, and deterministic JSON output.

A PairFile is a JSON object::

    {"schema_version": 1, "dim": d, "count": n, "label": "...",
     "phi": [[[re, im], ...n entries], ...d rows],
     "psi": same shape}

Complex entries are always ``[re, im]``.  Python's float repr round-trips,
so ``load_pair(save_pair(p))`` reproduces every entry bit for bit.
"""

import json
import math
from pathlib import Path

import numpy as np

from .errors import ParseError, SchemaError, ValidationError
from .pair import TruncatedPair

__all__ = ['SCHEMA_VERSION', 'pair_to_dict', 'pair_from_dict', 'save_pair',
           'load_pair', 'complex_to_json', 'dumps']

SCHEMA_VERSION = 1


def complex_to_json(a):
    """Complex array -> nested lists with ``[re, im]`` leaves."""
    a = np.asarray(a, dtype=np.complex128)
    return np.stack([a.real, a.imag], axis=-1).tolist()


def pair_to_dict(pair):
    return {
        'schema_version': SCHEMA_VERSION,
        'dim': pair.dim,
        'count': pair.count,
        'label': pair.label,
        'phi': complex_to_json(pair.phi),
        'psi': complex_to_json(pair.psi),
    }


def _matrix(data, key, d, n):
    try:
        a = np.array(data[key], dtype=float)
    except KeyError:
        raise SchemaError(f'missing field {key!r}') from None
    except (TypeError, ValueError) as exc:
        raise SchemaError(f'{key}: entries must be [re, im] numbers '
                          f'({exc})') from None
    if a.shape != (d, n, 2):
        raise SchemaError(f'{key} has shape {a.shape[:-1] if a.ndim else ()} '
                          f'but dim={d}, count={n}')
    if not np.all(np.isfinite(a)):
        raise ValidationError(f'{key} has non-finite entries')
    return a[..., 0] + 1j * a[..., 1]


def pair_from_dict(data):
    if not isinstance(data, dict):
        raise SchemaError('PairFile must be a JSON object')
    version = data.get('schema_version')
    if version != SCHEMA_VERSION:
        raise SchemaError(f'unsupported schema_version {version!r}')
    d, n = data.get('dim'), data.get('count')
    if not (isinstance(d, int) and isinstance(n, int)) or d < 1 or n < 1:
        raise SchemaError('dim and count must be positive integers')
    if n > d:
        raise SchemaError(f'count {n} exceeds dim {d}')
    label = data.get('label') or ''
    if not isinstance(label, str):
        raise SchemaError('label must be a string')
    phi = _matrix(data, 'phi', d, n)
    psi = _matrix(data, 'psi', d, n)
    try:
        return TruncatedPair(phi, psi, label=label)
    except ValidationError:
        raise
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def save_pair(pair, path):
    Path(path).write_text(dumps(pair_to_dict(pair)))
    return path


def load_pair(path):
    """Read a PairFile.

    Raises
    ------
    ParseError
        Unreadable file or malformed JSON.
    SchemaError
        Wrong version, missing fields or inconsistent shapes.
    ValidationError
        Non-finite entries.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f'cannot read {path}: {exc}') from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f'{path}: {exc}') from exc
    return pair_from_dict(data)


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if hasattr(obj, 'value'):
        return obj.value
    return obj


def dumps(obj):
    """Stable JSON: insertion key order, 2-space indent, trailing newline.

    Non-finite floats become the strings ``'inf'``/``'nan'`` so the output
    is strict JSON.
    """
    return json.dumps(_clean(obj), indent=2, allow_nan=False) + '\n'
