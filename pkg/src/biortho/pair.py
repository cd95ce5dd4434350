"""Truncated biorthogonal pairs, regularity and transition operators.

A pair is stored as two ``d x n`` matrices whose columns are the vectors
``phi_0 .. phi_{n-1}`` and ``psi_0 .. psi_{n-1}`` of a ``d``-dimensional
truncation.  Indices are 0-based throughout.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import (DimensionMismatch, NotBiorthogonal, NotRegular,
                     NotUnitary, ValidationError)
from .numerics import as_matrix, cond, dagger, svd, unitarity_defect

__all__ = ['TruncatedPair', 'Regularity', 'RegularityVerdict',
           'TransitionOperators', 'biorthogonality_residual',
           'regularity_check', 'build_transition', 'require_regular',
           'RANK_RTOL', 'BIORTHO_RTOL', 'UNITARY_RTOL']

#: singular values above ``RANK_RTOL * sigma_max`` count towards the rank
RANK_RTOL = 1e-10
#: per-column biorthogonality tolerance; multiplied by n
BIORTHO_RTOL = 1e-10
#: per-dimension unitarity tolerance for caller-supplied ONBs
UNITARY_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class TruncatedPair:
    """Pair of sequences ``(phi_k)``, ``(psi_k)`` as columns of `phi`, `psi`.

    Biorthogonality is *not* enforced on construction, so that defective
    pairs can still be built and measured; see
    :func:`biorthogonality_residual`.
    """
    phi: np.ndarray
    psi: np.ndarray
    label: str = ''

    def __post_init__(self):
        phi = as_matrix(self.phi, 'phi')
        psi = as_matrix(self.psi, 'psi')
        if phi.shape != psi.shape:
            raise DimensionMismatch(f'phi has shape {phi.shape} but psi has '
                                    f'shape {psi.shape}')
        d, n = phi.shape
        if n > d:
            raise DimensionMismatch(f'count n={n} exceeds dimension d={d}')
        for name, M in (('phi', phi), ('psi', psi)):
            zero = np.flatnonzero(np.linalg.norm(M, axis=0) == 0)
            if zero.size:
                raise ValidationError(f'{name} column {zero[0]} is zero')
        phi.flags.writeable = False
        psi.flags.writeable = False
        object.__setattr__(self, 'phi', phi)
        object.__setattr__(self, 'psi', psi)

    @property
    def dim(self):
        return self.phi.shape[0]

    @property
    def count(self):
        return self.phi.shape[1]

    def swapped(self):
        """The pair ``(psi, phi)``; biorthogonality is symmetric."""
        return TruncatedPair(self.psi, self.phi, label=f'swap({self.label})')


class Regularity(str, Enum):
    REGULAR = 'Regular'
    INDETERMINATE = 'Indeterminate'


@dataclass(frozen=True)
class RegularityVerdict:
    status: Regularity
    rank_phi: int
    rank_psi: int
    witness_phi: Optional[np.ndarray] = None
    witness_psi: Optional[np.ndarray] = None

    @property
    def regular(self):
        return self.status is Regularity.REGULAR


@dataclass(frozen=True, eq=False)
class TransitionOperators:
    """``T_e e_k = phi_k`` and ``K_e e_k = psi_k`` for the ONB `onb_e`."""
    T_e: np.ndarray
    K_e: np.ndarray
    onb_e: np.ndarray
    identity_residual: float = field(default=0.0)


def biorthogonality_residual(pair):
    """``max_{k,m} |(phi_k|psi_m) - delta_km|``.

    Inner products are linear in the first slot, so the Gram matrix is
    ``Psi^H Phi``.
    """
    if pair.phi.shape != pair.psi.shape:
        raise DimensionMismatch('phi and psi shapes differ')
    G = dagger(pair.psi) @ pair.phi
    return float(np.abs(G - np.eye(pair.count)).max())


def _rank(M):
    s = svd(M).sigma
    return int(np.count_nonzero(s > RANK_RTOL * s[0]))


def _witness(M):
    """Unit vector orthogonal to the column span of `M` (n < d).

    The last left-singular vector, with its largest entry rotated to be
    real and positive so the result is phase-deterministic.
    """
    w = svd(M).left[:, -1].copy()
    i = int(np.argmax(np.abs(w)))
    return w / (w[i] / abs(w[i]))


def regularity_check(pair, tol=None):
    """Decide regularity at this truncation.

    With ``n == d`` biorthogonality makes both matrices invertible, so the
    spans are the whole space and the pair is regular.  With ``n < d``
    nothing can be said about the infinite-dimensional limit: the verdict
    is ``Indeterminate`` and carries witness vectors orthogonal to each
    span.

    Raises
    ------
    NotBiorthogonal
        If the biorthogonality residual exceeds `tol`
        (default ``1e-10 * n``).
    """
    if tol is None:
        tol = BIORTHO_RTOL * pair.count
    res = biorthogonality_residual(pair)
    if res > tol:
        raise NotBiorthogonal(f'biorthogonality residual {res:.3e} exceeds '
                              f'{tol:.3e}')
    r_phi, r_psi = _rank(pair.phi), _rank(pair.psi)
    if pair.count == pair.dim:
        return RegularityVerdict(Regularity.REGULAR, r_phi, r_psi)
    return RegularityVerdict(Regularity.INDETERMINATE, r_phi, r_psi,
                             witness_phi=_witness(pair.phi),
                             witness_psi=_witness(pair.psi))


def require_regular(pair, tol=None):
    verdict = regularity_check(pair, tol)
    if not verdict.regular:
        raise NotRegular(f'pair {pair.label!r} is {verdict.status.value} '
                         f'(n={pair.count} < d={pair.dim})')
    return verdict


def build_transition(pair, onb=None):
    """Transition operators ``T_e = Phi E^H`` and ``K_e = Psi E^H``.

    `onb` is a unitary matrix whose columns are the basis ``e_k``; the
    standard basis is used when omitted.  The identity ``K_e^H T_e = I`` is
    checked to ``1e-10 * d * kappa(Phi)``.
    """
    require_regular(pair)
    d = pair.dim
    E = np.eye(d, dtype=np.complex128) if onb is None else as_matrix(
        onb, 'onb', square=True)
    if E.shape[0] != d:
        raise DimensionMismatch(f'onb is {E.shape[0]}x{E.shape[0]}, pair has '
                                f'd={d}')
    defect = unitarity_defect(E)
    if defect > UNITARY_RTOL * d:
        raise NotUnitary(f'onb unitarity defect {defect:.3e}')
    Eh = dagger(E)
    T_e = pair.phi @ Eh
    K_e = pair.psi @ Eh
    res = float(np.abs(dagger(K_e) @ T_e - np.eye(d)).max())
    if res > 1e-10 * d * cond(pair.phi):
        raise NotBiorthogonal(f'K_e^H T_e deviates from I by {res:.3e}')
    return TransitionOperators(T_e, K_e, E, res)
