"""Dense complex linear-algebra kernels.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``; vectors
are stored as columns. All tolerances are relative: they scale with the
dimension and with a norm of the input, never absolute.
"""

from typing import NamedTuple

import numpy as np

from .errors import (DimensionMismatch, NotHermitian, NotPSD, NumericalFailure,
                     SingularInput, ValidationError)

__all__ = ['HermitianEig', 'SVD', 'as_matrix', 'dagger', 'hermitian_eig',
           'polar_left', 'sqrtm_psd', 'svd', 'random_unitary', 'cond',
           'solve', 'unitarity_defect', 'PSD_CLAMP', 'SINGULAR_RTOL']

#: eigenvalues above ``-PSD_CLAMP * ||M||`` are clamped to zero
PSD_CLAMP = 1e-12
#: default relative singular-value floor for :func:`polar_left`
SINGULAR_RTOL = 1e-12


class HermitianEig(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


class SVD(NamedTuple):
    """``M = left @ diag(sigma) @ right^H``, sigma descending."""
    left: np.ndarray
    sigma: np.ndarray
    right: np.ndarray


def as_matrix(M, name='matrix', square=False):
    """Return `M` as a finite 2-d complex128 array (a copy is not forced)."""
    A = np.asarray(M, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise DimensionMismatch(f'{name} must be a non-empty 2-d array, '
                                f'got shape {A.shape}')
    if square and A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f'{name} must be square, got {A.shape}')
    if not np.all(np.isfinite(A)):
        raise ValidationError(f'{name} has non-finite entries')
    return A


def dagger(M):
    return np.conj(M).T


def hermitian_eig(M, tol=None):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    M : (d, d) array_like
        Hermitian matrix.
    tol : float, optional
        Allowed ``max|M - M^H|``; defaults to ``1e-10 * max|M|``.

    Returns
    -------
    HermitianEig
        Ascending real eigenvalues and a unitary matrix of eigenvectors
        (columns).
    """
    M = as_matrix(M, 'M', square=True)
    scale = np.abs(M).max()
    if tol is None:
        tol = 1e-10 * scale
    skew = np.abs(M - dagger(M)).max()
    if skew > tol:
        raise NotHermitian(f'max|M - M^H| = {skew:.3e} exceeds {tol:.3e}')
    try:
        w, V = np.linalg.eigh(0.5 * (M + dagger(M)))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    return HermitianEig(w, V)


def sqrtm_psd(M):
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues in ``[-1e-12 ||M||, 0)`` are rounding noise and are clamped
    to zero; anything more negative raises :class:`NotPSD`.
    """
    w, V = hermitian_eig(M)
    norm = np.abs(w).max()
    if w[0] < -PSD_CLAMP * norm:
        raise NotPSD(f'eigenvalue {w[0]:.3e} below clamp floor '
                     f'{-PSD_CLAMP * norm:.3e}')
    r = np.sqrt(np.clip(w, 0.0, None))
    return (V * r) @ dagger(V)


def svd(M):
    """Singular value decomposition with descending singular values."""
    M = as_matrix(M, 'M')
    try:
        U, s, Vh = np.linalg.svd(M)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    return SVD(U, s, dagger(Vh))


def cond(M):
    """2-norm condition number; ``inf`` for a numerically singular matrix."""
    s = svd(M).sigma
    return np.inf if s[-1] == 0 else float(s[0] / s[-1])


def polar_left(M, rtol=SINGULAR_RTOL):
    """Polar decomposition ``M = U H`` of a non-singular square matrix.

    Both factors come from the SVD ``M = W diag(s) V^H``: ``H = V diag(s)
    V^H`` (which equals ``(M^H M)^{1/2}``) and ``U = W V^H``.  Forming
    ``M^H M`` explicitly would square the condition number.

    Raises
    ------
    SingularInput
        If ``sigma_min(M) <= rtol * sigma_max(M)``.
    """
    M = as_matrix(M, 'M', square=True)
    W, s, V = svd(M)
    if s[-1] <= rtol * s[0]:
        raise SingularInput(f'sigma_min/sigma_max = {s[-1] / s[0]:.3e} '
                            f'<= {rtol:.1e}')
    H = (V * s) @ dagger(V)
    return W @ dagger(V), 0.5 * (H + dagger(H))


def solve(A, B):
    """Solve ``A X = B``; singular `A` raises :class:`SingularInput`."""
    A = as_matrix(A, 'A', square=True)
    try:
        return np.linalg.solve(A, np.asarray(B, dtype=np.complex128))
    except np.linalg.LinAlgError as exc:
        raise SingularInput(str(exc)) from exc


def random_unitary(d, seed):
    """Haar-distributed unitary matrix, deterministic in ``(d, seed)``.

    QR factorization of a complex Gaussian matrix drawn from
    ``numpy.random.default_rng(seed)``, with the phases of R's diagonal
    moved into Q.
    """
    if d < 1:
        raise DimensionMismatch(f'd must be >= 1, got {d}')
    rng = np.random.default_rng(seed)
    Z = (rng.standard_normal((d, d))
         + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    Q, R = np.linalg.qr(Z)
    ph = np.diag(R) / np.abs(np.diag(R))
    return Q * ph


def unitarity_defect(U):
    """``max|U^H U - I|``."""
    U = as_matrix(U, 'U', square=True)
    return float(np.abs(dagger(U) @ U - np.eye(U.shape[0])).max())
