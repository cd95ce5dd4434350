"""Canonical orthonormal basis and metric operator of a regular pair.

For a regular pair there is exactly one ONB ``f`` and one positive
non-singular ``Tf`` with ``phi_n = Tf f_n`` and ``psi_n = Tf^{-1} f_n``.
Starting from any ONB ``e`` they are obtained from the polar decomposition
``T_e^H = U |T_e^H|``: ``Tf = |T_e^H|`` and ``f_n = U^H e_n``.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import ConditioningExceeded, DimensionMismatch
from .numerics import (as_matrix, dagger, hermitian_eig, polar_left,
                       random_unitary, svd)
from .pair import build_transition, require_regular

__all__ = ['CanonicalForm', 'canonical_form', 'verify_onb_invariance',
           'transition_factorization', 'KAPPA_MAX']

#: pairs whose metric operator is worse conditioned than this are refused
KAPPA_MAX = 1e12


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    """``F`` unitary (column n is ``f_n``) and ``Tf`` Hermitian positive."""
    F: np.ndarray
    Tf: np.ndarray
    Tf_inv: np.ndarray
    spectrum: np.ndarray

    @property
    def dim(self):
        return self.F.shape[0]

    @property
    def kappa(self):
        return float(self.spectrum[-1] / self.spectrum[0])


def canonical_form(pair, onb=None):
    """Canonical form of a regular pair, computed through the ONB `onb`.

    The result does not depend on `onb` (up to rounding).  After the polar
    step ``F`` is recomputed as ``Tf^{-1} Phi``: when ``Tf`` has repeated
    eigenvalues this pins ``f_n`` to the pair's own ordering instead of
    whatever mixing the eigensolver happened to return.

    Raises
    ------
    NotRegular
        If ``n < d``.
    SingularInput
        If ``T_e`` is numerically singular.
    ConditioningExceeded
        If ``kappa(Tf) > KAPPA_MAX``.
    """
    require_regular(pair)
    tr = build_transition(pair, onb)
    s = svd(tr.T_e).sigma
    if s[-1] <= s[0] / KAPPA_MAX:
        raise ConditioningExceeded(
            f'kappa(Tf) = {s[0] / s[-1]:.3e} exceeds {KAPPA_MAX:.0e}')
    _, H = polar_left(dagger(tr.T_e))
    w, V = hermitian_eig(H)
    if w[0] <= 0 or w[-1] / w[0] > KAPPA_MAX:
        raise ConditioningExceeded(
            f'kappa(Tf) = {w[-1] / w[0]:.3e} exceeds {KAPPA_MAX:.0e}')
    Tf = 0.5 * (H + dagger(H))
    Tf_inv = (V / w) @ dagger(V)
    F = Tf_inv @ pair.phi
    return CanonicalForm(F, Tf, Tf_inv, w)


def verify_onb_invariance(pair, seeds):
    """Largest relative spread of ``Tf`` over random ONBs.

    One canonical form is computed per seed, each through the ONB
    ``random_unitary(d, seed)``; returns
    ``max_{i,j} ||Tf_i - Tf_j||_F / ||Tf_0||_F``.
    """
    seeds = list(seeds)
    if len(seeds) < 2:
        raise ValueError('need at least two seeds')
    d = pair.dim
    tfs = [canonical_form(pair, random_unitary(d, s)).Tf for s in seeds]
    ref = np.linalg.norm(tfs[0])
    return max(float(np.linalg.norm(a - b) / ref)
               for a, b in combinations(tfs, 2))


def transition_factorization(pair, onb_e, onb_g):
    """Relative residual of ``T_e = T_g U_{e,g}`` with ``U_{e,g} = G E^H``."""
    E = as_matrix(onb_e, 'onb_e', square=True)
    G = as_matrix(onb_g, 'onb_g', square=True)
    if E.shape != G.shape:
        raise DimensionMismatch('onb_e and onb_g differ in size')
    T_e = build_transition(pair, E).T_e
    T_g = build_transition(pair, G).T_e
    U_eg = G @ dagger(E)
    return float(np.linalg.norm(T_e - T_g @ U_eg) / np.linalg.norm(T_e))
