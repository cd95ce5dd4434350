import math

import numpy as np
import pytest

from biortho.canonical import (canonical_form, transition_factorization,
                               verify_onb_invariance)
from biortho.errors import ConditioningExceeded, NotRegular
from biortho.families import PairFamily, generate
from biortho.numerics import random_unitary, sqrtm_psd
from biortho.pair import TruncatedPair

from conftest import diag_pair, golden_pair, identity_pair

GOLDEN = (1 + math.sqrt(5)) / 2


def test_identity_pair():
    cf = canonical_form(identity_pair(3))
    np.testing.assert_allclose(cf.Tf, np.eye(3), atol=1e-15)
    np.testing.assert_allclose(np.abs(cf.F), np.eye(3), atol=1e-15)


def test_positive_diagonal_is_canonical():
    cf = canonical_form(diag_pair([1, 2, 3]))
    np.testing.assert_allclose(cf.Tf, np.diag([1, 2, 3]), atol=1e-14)
    np.testing.assert_allclose(np.abs(cf.F), np.eye(3), atol=1e-14)
    np.testing.assert_allclose(cf.spectrum, [1, 2, 3], rtol=1e-14)


def test_golden_pair(golden):
    cf = canonical_form(golden)
    # Phi Phi^H = [[2,1],[1,1]]
    np.testing.assert_allclose(cf.Tf, sqrtm_psd([[2, 1], [1, 1]]), atol=1e-14)
    np.testing.assert_allclose(cf.spectrum, [1 / GOLDEN, GOLDEN], rtol=1e-14)
    np.testing.assert_allclose(cf.Tf @ cf.F, golden.phi, atol=1e-14)
    np.testing.assert_allclose(cf.Tf_inv @ cf.F, golden.psi, atol=1e-14)


def test_result_independent_of_onb(golden):
    a = canonical_form(golden)
    b = canonical_form(golden, random_unitary(2, 17))
    np.testing.assert_allclose(a.Tf, b.Tf, atol=1e-14)
    np.testing.assert_allclose(a.F, b.F, atol=1e-14)


def test_refuses_non_regular():
    with pytest.raises(NotRegular):
        canonical_form(generate('shifted-non-regular', 6))


def test_refuses_extreme_conditioning():
    with pytest.raises(ConditioningExceeded):
        canonical_form(diag_pair([1.0, 1e13]))


def test_onb_invariance_identity():
    assert verify_onb_invariance(identity_pair(5), [1, 2, 3]) <= 1e-12


def test_onb_invariance_diag():
    assert verify_onb_invariance(diag_pair([1, 2, 3]), [1, 2, 3]) <= 1e-10


def test_onb_invariance_golden(golden):
    assert verify_onb_invariance(golden, [7, 11]) <= 1e-10


def test_onb_invariance_needs_two_seeds(golden):
    with pytest.raises(ValueError):
        verify_onb_invariance(golden, [1])


def test_factorization_same_onb(golden):
    E = random_unitary(2, 4)
    assert transition_factorization(golden, E, E) == pytest.approx(0, abs=1e-15)


def test_factorization_identity_pair():
    E, G = random_unitary(6, 1), random_unitary(6, 2)
    assert transition_factorization(identity_pair(6), E, G) <= 1e-12


def test_factorization_golden_fourier(golden):
    G = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert transition_factorization(golden, np.eye(2), G) <= 1e-12


# -- properties over families ----------------------------------------------

FAMILIES = [PairFamily('random-regular', {'kappa': k, 'seed': s})
            for k, s in [(3.0, 1), (50.0, 2), (900.0, 3)]] + [
    PairFamily('bounded-perturbation', {'eps': 0.4, 'seed': 5}),
    PairFamily('diag-mixed'),
    PairFamily('diag-power', {'alpha': 2.0}),
]


@pytest.mark.parametrize('family', FAMILIES, ids=lambda f: f.description)
@pytest.mark.parametrize('d', [3, 8, 20])
def test_reconstruction_and_uniqueness(family, d):
    pair = generate(family, d)
    forms = [canonical_form(pair, random_unitary(d, s)) for s in range(5)]
    ref = forms[0]
    kappa = ref.kappa
    Phi, Psi = pair.phi, pair.psi
    for cf in forms:
        assert np.linalg.norm(Phi - cf.Tf @ cf.F) <= 1e-10 * d * np.linalg.norm(Phi)
        assert (np.linalg.norm(Psi - cf.Tf_inv @ cf.F)
                <= 1e-10 * d * kappa * np.linalg.norm(Psi))
        assert np.abs(cf.F.conj().T @ cf.F - np.eye(d)).max() <= 1e-11 * d
        assert np.all(cf.spectrum > 0)
        assert np.abs(cf.Tf @ cf.Tf_inv - np.eye(d)).max() <= 1e-10 * d * kappa
        # F is pinned by f_n = Tf^{-1} phi_n, so it is comparable directly
        assert np.linalg.norm(cf.F - ref.F) <= 1e-9 * d
        assert np.linalg.norm(cf.Tf - ref.Tf) <= 1e-9 * d * np.linalg.norm(ref.Tf)
    s = np.linalg.svd(Phi, compute_uv=False)[::-1]
    np.testing.assert_allclose(ref.spectrum, s, rtol=1e-10)


@pytest.mark.parametrize('family', FAMILIES, ids=lambda f: f.description)
def test_self_duality(family):
    pair = generate(family, 9)
    cf = canonical_form(pair)
    dual = canonical_form(TruncatedPair(pair.psi, pair.phi))
    tol = 1e-9 * 9 * cf.kappa
    assert np.linalg.norm(dual.F - cf.F) <= tol
    assert np.linalg.norm(dual.Tf - cf.Tf_inv) <= tol * np.linalg.norm(cf.Tf_inv)


def test_degenerate_spectrum_keeps_pair_ordering():
    # Tf = 2 I: every ONB diagonalizes it, F must still be Phi / 2
    U = random_unitary(4, 21)
    pair = TruncatedPair(2 * U, U / 2)
    cf = canonical_form(pair, random_unitary(4, 3))
    np.testing.assert_allclose(cf.F, U, atol=1e-14)
    np.testing.assert_allclose(cf.Tf, 2 * np.eye(4), atol=1e-14)
