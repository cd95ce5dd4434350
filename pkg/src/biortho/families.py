"""Deterministic generators of truncated pairs.

Every regular family is built the same way: pick a non-singular ``T`` and
set ``phi_k = T e_k``, ``psi_k = (T^{-1})^H e_k`` in the standard basis.
The one non-regular family is the classic example ``phi_n = e_{n+1} + e_1``,
``psi_n = e_{n+1}`` (``n >= 1``), reindexed here from 0:
``phi_k = e_{k+1} + e_0``, ``psi_k = e_{k+1}`` for ``k = 0 .. d-2``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import BadParameter
from .numerics import dagger, random_unitary
from .pair import TruncatedPair

__all__ = ['PairFamily', 'FAMILIES', 'generate', 'parse_params']

# name -> (parameter names with defaults, regular?)
FAMILIES = {
    'identity': ({}, True),
    'diag-power': ({'alpha': 1.0}, True),
    'diag-exp': ({'beta': 0.1}, True),
    'diag-mixed': ({}, True),
    'bounded-perturbation': ({'eps': 0.3, 'seed': 0}, True),
    'shifted-non-regular': ({}, False),
    'random-regular': ({'kappa': 10.0, 'seed': 0}, True),
}


@dataclass(frozen=True)
class PairFamily:
    """A family name plus its parameters, e.g. ``PairFamily('diag-power',
    {'alpha': 1.0})``.  Missing parameters take the defaults in
    :data:`FAMILIES`."""
    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise BadParameter(f'unknown family {self.kind!r}; choose from '
                               f'{", ".join(FAMILIES)}')
        defaults, _ = FAMILIES[self.kind]
        unknown = set(self.params) - set(defaults)
        if unknown:
            raise BadParameter(f'{self.kind} takes no parameter(s) '
                               f'{sorted(unknown)}')
        merged = dict(defaults)
        for k, v in self.params.items():
            merged[k] = type(defaults[k])(v)
        for k, v in merged.items():
            if not np.isfinite(v):
                raise BadParameter(f'{k} must be finite')
        if self.kind == 'bounded-perturbation' and not 0 <= merged['eps'] < 1:
            raise BadParameter('eps must lie in [0, 1)')
        if self.kind == 'random-regular' and merged['kappa'] < 1:
            raise BadParameter('kappa must be >= 1')
        object.__setattr__(self, 'params', merged)

    @property
    def regular(self):
        return FAMILIES[self.kind][1]

    @property
    def description(self):
        if not self.params:
            return self.kind
        args = ','.join(f'{k}={v!r}' for k, v in sorted(self.params.items()))
        return f'{self.kind}({args})'


def parse_params(items):
    """``['alpha=1.5', 'seed=3']`` -> ``{'alpha': '1.5', 'seed': '3'}``."""
    out = {}
    for item in items or ():
        key, sep, value = item.partition('=')
        if not sep or not key:
            raise BadParameter(f'expected key=value, got {item!r}')
        out[key.strip()] = value.strip()
    return out


def _diagonal_pair(t, label):
    t = np.asarray(t, dtype=np.complex128)
    return TruncatedPair(np.diag(t), np.diag(1.0 / t), label=label)


def _from_operator(T, T_inv, label):
    return TruncatedPair(T, dagger(T_inv), label=label)


def generate(family, d):
    """Truncated pair of `family` at dimension `d` (``d >= 2``)."""
    if isinstance(family, str):
        family = PairFamily(family)
    d = int(d)
    if d < 2:
        raise BadParameter(f'd must be >= 2, got {d}')
    p = family.params
    label = f'{family.description} d={d}'
    k = np.arange(d)

    if family.kind == 'identity':
        return _diagonal_pair(np.ones(d), label)
    if family.kind == 'diag-power':
        return _diagonal_pair((k + 1.0) ** p['alpha'], label)
    if family.kind == 'diag-exp':
        return _diagonal_pair(np.exp(p['beta'] * k), label)
    if family.kind == 'diag-mixed':
        j = k // 2 + 1.0
        return _diagonal_pair(np.where(k % 2 == 0, j, 1.0 / j), label)
    if family.kind == 'bounded-perturbation':
        # unitary S: ||S|| = 1 and all singular values of T in [1-eps, 1+eps]
        S = random_unitary(d, [p['seed'], d])
        T = np.eye(d) + p['eps'] * S
        return _from_operator(T, np.linalg.inv(T), label)
    if family.kind == 'random-regular':
        Q1 = random_unitary(d, [p['seed'], d, 1])
        Q2 = random_unitary(d, [p['seed'], d, 2])
        s = np.geomspace(1.0, p['kappa'], d)
        T = (Q1 * s) @ Q2
        T_inv = (dagger(Q2) / s) @ dagger(Q1)
        return _from_operator(T, T_inv, label)
    if family.kind == 'shifted-non-regular':
        n = d - 1
        phi = np.zeros((d, n), dtype=np.complex128)
        psi = np.zeros((d, n), dtype=np.complex128)
        phi[k[1:], k[:-1]] = 1.0
        psi[k[1:], k[:-1]] = 1.0
        phi[0, :] = 1.0
        return TruncatedPair(phi, psi, label=label)
    raise AssertionError(family.kind)
