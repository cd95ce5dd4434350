"""Pseudo-bosonic ladder and number operators of a regular pair.

With the canonical form ``(f, Tf)`` and the truncated shift
``a = sum_k sqrt(k+1) e_k (x) conj(e_{k+1})`` moved into the ``f`` basis,
``a_f = F a F^H``, the six operators are

    A    = Tf a_f   Tf^{-1}        (lowers phi_n)
    B    = Tf a_f^H Tf^{-1}        (raises phi_n)
    Adag = Tf^{-1} a_f^H Tf        (raises psi_n)
    Bdag = Tf^{-1} a_f   Tf        (lowers psi_n)
    N    = Tf a_f^H a_f Tf^{-1},   Ndag = Tf^{-1} a_f^H a_f Tf

Since ``Tf F = Phi`` and ``Tf^{-1} F = Psi`` these equal ``Phi a Psi^H``
and friends.  The number operators use ``a^H a = diag(0, 1, .., d-1)``, i.e.
the coefficient ``(k+1)`` on ``f_{k+1} (x) conj(f_{k+1})``.

Truncation moves one identity off the top level: ``B phi_{d-1} = 0`` and
``[a, a^H] = I - d E_{d-1,d-1}``.  Those edge values are reported, never
folded into the residuals.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .canonical import CanonicalForm
from .errors import ConditioningExceeded, DimensionMismatch, DimensionTooSmall
from .numerics import dagger, random_unitary, solve
from .pair import build_transition

__all__ = ['LadderSet', 'LadderResiduals', 'CommutatorCheck',
           'VacuumResiduals', 'NumberResiduals', 'standard_ladder',
           'build_ladder_set', 'ladder_invariants', 'verify_ladder_action',
           'verify_commutators', 'build_from_vacuum',
           'verify_number_operators', 'ladder_in_basis',
           'verify_basis_independence', 'LADDER_KAPPA_MAX']

#: above this kappa(Tf), kappa^2 * eps leaves no significant digits
LADDER_KAPPA_MAX = 1e7


def standard_ladder(d):
    """Truncated annihilation operator: ``M[k, k+1] = sqrt(k+1)``."""
    if d < 2:
        raise DimensionTooSmall(f'd must be >= 2, got {d}')
    return np.diag(np.sqrt(np.arange(1, d, dtype=float)), 1).astype(
        np.complex128)


@dataclass(frozen=True, eq=False)
class LadderSet:
    A: np.ndarray
    B: np.ndarray
    Adag: np.ndarray
    Bdag: np.ndarray
    N: np.ndarray
    Ndag: np.ndarray
    a_std: np.ndarray
    cf: CanonicalForm

    @property
    def dim(self):
        return self.A.shape[0]

    @property
    def phi(self):
        return self.cf.Tf @ self.cf.F

    @property
    def psi(self):
        return self.cf.Tf_inv @ self.cf.F


def build_ladder_set(cf):
    """All six operators from one canonical form.

    Raises
    ------
    ConditioningExceeded
        If ``kappa(Tf) > 1e7``.
    """
    if cf.kappa > LADDER_KAPPA_MAX:
        raise ConditioningExceeded(f'kappa(Tf) = {cf.kappa:.3e} exceeds '
                                   f'{LADDER_KAPPA_MAX:.0e}')
    d = cf.dim
    a = standard_ladder(d)
    F, Fh = cf.F, dagger(cf.F)
    a_f = F @ a @ Fh
    n_f = F @ (dagger(a) @ a) @ Fh
    T, Ti = cf.Tf, cf.Tf_inv
    return LadderSet(
        A=T @ a_f @ Ti,
        B=T @ dagger(a_f) @ Ti,
        Adag=Ti @ dagger(a_f) @ T,
        Bdag=Ti @ a_f @ T,
        N=T @ n_f @ Ti,
        Ndag=Ti @ n_f @ T,
        a_std=a,
        cf=cf,
    )


def _rel(X, Y):
    return float(np.linalg.norm(X - Y) / (np.linalg.norm(Y) or 1.0))


def ladder_invariants(ls):
    """Relative residuals of ``Adag = A^H``, ``Bdag = B^H``, ``BA = N``,
    ``Adag Bdag = Ndag`` and ``AB = Tf a_f a_f^H Tf^{-1}``."""
    F = ls.cf.F
    a = ls.a_std
    ab = ls.cf.Tf @ F @ (a @ dagger(a)) @ dagger(F) @ ls.cf.Tf_inv
    return {
        'Adag_vs_A_H': _rel(ls.Adag, dagger(ls.A)),
        'Bdag_vs_B_H': _rel(ls.Bdag, dagger(ls.B)),
        'BA_vs_N': _rel(ls.B @ ls.A, ls.N),
        'AdagBdag_vs_Ndag': _rel(ls.Adag @ ls.Bdag, ls.Ndag),
        'AB_vs_conjugated_aaH': _rel(ls.A @ ls.B, ab),
    }


def _check_dim(ls, pair):
    if pair.dim != ls.dim or pair.count != ls.dim:
        raise DimensionMismatch(f'ladder set has d={ls.dim}, pair is '
                                f'{pair.dim}x{pair.count}')


def _col_norms(M):
    return np.linalg.norm(M, axis=0)


class LadderResiduals(NamedTuple):
    """Worst relative residual of each ladder relation.

    Every entry is ``||lhs - rhs|| / ||input vector||``; `edge_raise_phi`
    is ``||B phi_{d-1}|| / ||phi_{d-1}||`` and is expected to be 0 at
    truncation.
    """
    lower_phi: float
    raise_phi: float
    raise_psi: float
    lower_psi: float
    vacuum_phi: float
    vacuum_psi: float
    edge_raise_phi: float

    @property
    def worst(self):
        return max(self[:6])


def verify_ladder_action(pair, ls):
    """Check ``A phi_n = sqrt(n) phi_{n-1}``, ``B phi_n = sqrt(n+1)
    phi_{n+1}``, ``Adag psi_n = sqrt(n+1) psi_{n+1}`` and ``Bdag psi_n =
    sqrt(n) psi_{n-1}`` on the columns of `pair`."""
    _check_dim(ls, pair)
    Phi, Psi = pair.phi, pair.psi
    d = ls.dim
    n = np.arange(d)
    np_phi, np_psi = _col_norms(Phi), _col_norms(Psi)

    def worst(lhs, rhs, norms):
        return float(np.max(_col_norms(lhs - rhs) / norms))

    sq = np.sqrt(n[1:])
    AP, BP = ls.A @ Phi, ls.B @ Phi
    AdP, BdP = ls.Adag @ Psi, ls.Bdag @ Psi
    return LadderResiduals(
        lower_phi=worst(AP[:, 1:], Phi[:, :-1] * sq, np_phi[1:]),
        raise_phi=worst(BP[:, :-1], Phi[:, 1:] * sq, np_phi[:-1]),
        raise_psi=worst(AdP[:, :-1], Psi[:, 1:] * sq, np_psi[:-1]),
        lower_psi=worst(BdP[:, 1:], Psi[:, :-1] * sq, np_psi[1:]),
        vacuum_phi=float(np.linalg.norm(AP[:, 0]) / np_phi[0]),
        vacuum_psi=float(np.linalg.norm(BdP[:, 0]) / np_psi[0]),
        edge_raise_phi=float(np.linalg.norm(BP[:, -1]) / np_phi[-1]),
    )


class CommutatorCheck(NamedTuple):
    lower_block_residual: float
    edge_norm: float


def verify_commutators(ls):
    """``AB - BA = I`` and ``Bdag Adag - Adag Bdag = I`` below the top level.

    `lower_block_residual` is the worst of ``||(C - I) phi_n|| / ||phi_n||``
    and ``||(C' - I) psi_n|| / ||psi_n||`` over ``n <= d-2``; `edge_norm` is
    ``||(C - I) phi_{d-1}|| / ||phi_{d-1}||``, which equals ``d`` at exact
    arithmetic.
    """
    d = ls.dim
    if d < 2:
        raise DimensionTooSmall('d must be >= 2')
    eye = np.eye(d)
    C = ls.A @ ls.B - ls.B @ ls.A - eye
    Cp = ls.Bdag @ ls.Adag - ls.Adag @ ls.Bdag - eye
    Phi, Psi = ls.phi, ls.psi
    r_phi = _col_norms(C @ Phi) / _col_norms(Phi)
    r_psi = _col_norms(Cp @ Psi) / _col_norms(Psi)
    lower = float(max(r_phi[:-1].max(), r_psi[:-1].max()))
    return CommutatorCheck(lower, float(r_phi[-1]))


class VacuumResiduals(NamedTuple):
    phi: float
    psi: float

    @property
    def worst(self):
        return max(self)


def build_from_vacuum(ls, pair):
    """Rebuild ``phi_n = B^n phi_0 / sqrt(n!)`` and ``psi_n = Adag^n psi_0 /
    sqrt(n!)``.

    The factorial is applied one factor per step (divide by ``sqrt(n)`` at
    step ``n``), so nothing overflows for large ``d``.  Returns the worst
    relative column deviation for each sequence.
    """
    _check_dim(ls, pair)
    d = ls.dim
    v, w = pair.phi[:, 0].copy(), pair.psi[:, 0].copy()
    dev_phi = dev_psi = 0.0
    for n in range(1, d):
        v = ls.B @ v / np.sqrt(n)
        w = ls.Adag @ w / np.sqrt(n)
        dev_phi = max(dev_phi, np.linalg.norm(v - pair.phi[:, n])
                      / np.linalg.norm(pair.phi[:, n]))
        dev_psi = max(dev_psi, np.linalg.norm(w - pair.psi[:, n])
                      / np.linalg.norm(pair.psi[:, n]))
    return VacuumResiduals(float(dev_phi), float(dev_psi))


class NumberResiduals(NamedTuple):
    phi: float
    psi: float
    eigenvalue_error: float
    eigenvalues: tuple

    @property
    def worst(self):
        return max(self.phi, self.psi)


def verify_number_operators(ls, pair):
    """``N phi_n = n phi_n``, ``Ndag psi_n = n psi_n`` and the spectrum of N.

    `eigenvalue_error` is ``max_k |lambda_k - k|`` with the eigenvalues of
    ``N`` sorted by real part.
    """
    _check_dim(ls, pair)
    n = np.arange(ls.dim)
    Phi, Psi = pair.phi, pair.psi
    r_phi = _col_norms(ls.N @ Phi - Phi * n) / _col_norms(Phi)
    r_psi = _col_norms(ls.Ndag @ Psi - Psi * n) / _col_norms(Psi)
    lam = np.linalg.eigvals(ls.N)
    lam = lam[np.argsort(lam.real, kind='stable')]
    return NumberResiduals(float(r_phi.max()), float(r_psi.max()),
                           float(np.abs(lam - n).max()),
                           tuple(float(x) for x in lam.real))


def ladder_in_basis(pair, onb):
    """``(A_e, B_e)`` built from the transition operator of an arbitrary ONB:
    ``A_e = T_e (E a E^H) T_e^{-1}``, ``B_e = T_e (E a^H E^H) T_e^{-1}``."""
    tr = build_transition(pair, onb)
    E = tr.onb_e
    a = standard_ladder(pair.dim)
    T_inv = solve(tr.T_e, np.eye(pair.dim))
    A_e = tr.T_e @ E @ a @ dagger(E) @ T_inv
    B_e = tr.T_e @ E @ dagger(a) @ dagger(E) @ T_inv
    return A_e, B_e


def verify_basis_independence(pair, ls, seeds):
    """Worst relative deviation of ``A_e``, ``B_e`` from the canonical
    ``A``, ``B`` over random ONBs ``random_unitary(d, seed)``."""
    worst = 0.0
    for s in seeds:
        A_e, B_e = ladder_in_basis(pair, random_unitary(pair.dim, s))
        worst = max(worst, _rel(A_e, ls.A), _rel(B_e, ls.B))
    return worst
