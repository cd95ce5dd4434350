import numpy as np
import pytest

from biortho.canonical import canonical_form
from biortho.families import PairFamily, generate
from biortho.ladder import build_ladder_set
from biortho.pair import TruncatedPair

CORPUS_DIMS = (4, 8, 16, 32)
CORPUS_PER_DIM = 25

_acceptance_lines = []


def record_acceptance(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section('acceptance criteria')
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def golden_pair():
    """Phi = [[1,1],[0,1]], Psi = [[1,0],[-1,1]]; Phi Phi^H = [[2,1],[1,1]]."""
    return TruncatedPair(np.array([[1, 1], [0, 1]]),
                         np.array([[1, 0], [-1, 1]]), label='golden')


def diag_pair(t):
    t = np.asarray(t, dtype=float)
    return TruncatedPair(np.diag(t), np.diag(1 / t), label=f'diag{tuple(t)}')


def identity_pair(d):
    return TruncatedPair(np.eye(d), np.eye(d), label=f'identity{d}')


@pytest.fixture
def golden():
    return golden_pair()


@pytest.fixture(scope='session')
def corpus():
    """100 RandomRegular pairs, 25 per dimension, kappa_target in [1, 1e3].

    Each entry is ``(pair, canonical_form, ladder_set)``.
    """
    out = []
    for d in CORPUS_DIMS:
        for i, kappa in enumerate(np.geomspace(1.0, 1e3, CORPUS_PER_DIM)):
            fam = PairFamily('random-regular', {'kappa': kappa, 'seed': 1000 + i})
            pair = generate(fam, d)
            cf = canonical_form(pair)
            out.append((pair, cf, build_ladder_set(cf)))
    return out
