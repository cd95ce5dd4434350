"""Frame operators, Bessel bounds and Riesz / semi-Riesz classification.

``S_phi = sum_k phi_k (x) conj(phi_k)`` acts as ``x -> sum_k (x|phi_k) phi_k``,
which at truncation is the matrix ``Phi Phi^H``.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BadParameter, FamilyNotRegular
from .families import PairFamily, generate
from .numerics import dagger, hermitian_eig, random_unitary, solve, svd
from .pair import build_transition, regularity_check, require_regular

__all__ = ['FrameData', 'FrameResiduals', 'BesselProbe', 'Verdict',
           'Classification', 'frame_operators', 'verify_frame_identities',
           'bessel_check', 'classify_sweep', 'trace_behaviour',
           'GROWTH_TOL']

GROWTH_TOL = 0.05


@dataclass(frozen=True, eq=False)
class FrameData:
    S_phi: np.ndarray
    S_psi: np.ndarray
    r_phi: float
    r_psi: float
    sigma_max: float
    sigma_min: float


@dataclass(frozen=True)
class FrameResiduals:
    """Relative residuals of the frame-operator identities."""
    S_phi_vs_TeTeH: float
    S_psi_vs_TeinvHTeinv: float
    S_phi_S_psi: float
    S_psi_S_phi: float
    S_phi_psi_k: float
    S_psi_phi_k: float

    @property
    def worst(self):
        return max(vars(self).values())


class BesselProbe(tuple):
    """``(max_phi_ratio, max_psi_ratio)`` from :func:`bessel_check`."""
    __slots__ = ()

    def __new__(cls, max_phi_ratio, max_psi_ratio):
        return super().__new__(cls, (max_phi_ratio, max_psi_ratio))

    max_phi_ratio = property(lambda self: self[0])
    max_psi_ratio = property(lambda self: self[1])


class Verdict(str, Enum):
    RIESZ = 'Riesz'
    SEMI_RIESZ_PHI_BESSEL = 'SemiRieszPhiBessel'
    SEMI_RIESZ_PSI_BESSEL = 'SemiRieszPsiBessel'
    NON_RIESZ = 'NonRiesz'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    dims: list
    sigma_max_trace: list
    sigma_min_trace: list
    growth_tol: float
    phi_bessel: object = None
    psi_bessel: object = None
    family: str = ''


def frame_operators(pair):
    """Frame operators and Bessel bounds of any pair (regular or not).

    ``r_phi = lambda_max(S_phi) = sigma_max(Phi)^2`` and
    ``r_psi = lambda_max(S_psi)``; for a square biorthogonal pair the latter
    equals ``1 / sigma_min(Phi)^2``.
    """
    Phi, Psi = pair.phi, pair.psi
    S_phi = Phi @ dagger(Phi)
    S_psi = Psi @ dagger(Psi)
    s = svd(Phi).sigma
    sigma_max = float(s[0])
    sigma_min = float(s[min(pair.count, pair.dim) - 1])
    r_phi = float(hermitian_eig(S_phi).eigenvalues[-1])
    r_psi = float(hermitian_eig(S_psi).eigenvalues[-1])
    return FrameData(S_phi, S_psi, r_phi, r_psi, sigma_max, sigma_min)


def _rel(diff, ref):
    return float(np.linalg.norm(diff) / np.linalg.norm(ref))


def _col_rel(diff, ref):
    return float(np.max(np.linalg.norm(diff, axis=0)
                        / np.linalg.norm(ref, axis=0)))


def verify_frame_identities(pair, onb=None):
    """Residuals of ``S_phi = T_e T_e^H``, ``S_psi = (T_e^{-1})^H T_e^{-1}``,
    ``S_phi S_psi = S_psi S_phi = I``, ``S_phi psi_k = phi_k`` and
    ``S_psi phi_k = psi_k``.

    Matrix residuals are Frobenius norms relative to the reference side;
    vector residuals are the worst column relative to ``||phi_k||`` (resp.
    ``||psi_k||``).
    """
    require_regular(pair)
    d = pair.dim
    fd = frame_operators(pair)
    T_e = build_transition(pair, onb).T_e
    T_e_inv = solve(T_e, np.eye(d))
    eye = np.eye(d)
    return FrameResiduals(
        S_phi_vs_TeTeH=_rel(fd.S_phi - T_e @ dagger(T_e), fd.S_phi),
        S_psi_vs_TeinvHTeinv=_rel(fd.S_psi - dagger(T_e_inv) @ T_e_inv,
                                  fd.S_psi),
        S_phi_S_psi=_rel(fd.S_phi @ fd.S_psi - eye, eye),
        S_psi_S_phi=_rel(fd.S_psi @ fd.S_phi - eye, eye),
        S_phi_psi_k=_col_rel(fd.S_phi @ pair.psi - pair.phi, pair.phi),
        S_psi_phi_k=_col_rel(fd.S_psi @ pair.phi - pair.psi, pair.psi),
    )


def bessel_check(pair, probes, seed):
    """Largest sampled Bessel sums ``sum_k |(x|phi_k)|^2`` over unit `x`.

    Probes are normalized complex Gaussian vectors from
    ``default_rng(seed)``; the result never exceeds ``r_phi`` (resp.
    ``r_psi``) beyond rounding.
    """
    if probes < 1:
        raise BadParameter('probes must be >= 1')
    rng = np.random.default_rng(seed)
    d = pair.dim
    X = rng.standard_normal((d, probes)) + 1j * rng.standard_normal((d, probes))
    X /= np.linalg.norm(X, axis=0)
    phi_sums = np.sum(np.abs(dagger(pair.phi) @ X) ** 2, axis=0)
    psi_sums = np.sum(np.abs(dagger(pair.psi) @ X) ** 2, axis=0)
    return BesselProbe(float(phi_sums.max()), float(psi_sums.max()))


def trace_behaviour(values, growth_tol=GROWTH_TOL):
    """Classify the tail of a trace as ``'plateau'``, ``'grows'``,
    ``'decays'`` or ``None`` (undecided).

    Only the last three points (two consecutive ratios) are looked at.  A
    plateau needs both ratios within ``1 +- growth_tol``; growth (decay)
    needs both ratios above ``1 + growth_tol`` (below ``1 - growth_tol``).
    """
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        raise BadParameter('need at least 3 points')
    ratios = v[-2:] / v[-3:-1]
    if np.all(np.abs(ratios - 1.0) <= growth_tol):
        return 'plateau'
    if np.all(ratios > 1.0 + growth_tol):
        return 'grows'
    if np.all(ratios < 1.0 - growth_tol):
        return 'decays'
    return None


def _singular_extremes(family, d, onb_seed):
    pair = generate(family, d)
    try:
        verdict = regularity_check(pair)
    except Exception as exc:
        raise FamilyNotRegular(f'{pair.label}: {exc}') from exc
    if not verdict.regular:
        raise FamilyNotRegular(f'{pair.label} is not regular')
    onb = None if onb_seed is None else random_unitary(d, [onb_seed, d])
    s = svd(build_transition(pair, onb).T_e).sigma
    return float(s[0]), float(s[-1])


def classify_sweep(family, dims, growth_tol=GROWTH_TOL, onb_seed=None,
                   workers=None):
    """Riesz / semi-Riesz verdict for `family` from a dimension sweep.

    ``phi`` is Bessel iff ``sigma_max(T_e)`` stays bounded and ``psi`` is
    Bessel iff ``1 / sigma_min(T_e)`` stays bounded.  Boundedness is read
    off the tail of the traces with :func:`trace_behaviour`; the raw traces
    are returned so the heuristic can be overridden.  Singular values of
    ``T_e`` do not depend on the ONB, so `onb_seed` (a random ONB per
    dimension) must not change the verdict.

    Parameters
    ----------
    family : PairFamily or str
    dims : sequence of int
        Strictly ascending, at least three.
    growth_tol : float
    onb_seed : int, optional
    workers : int, optional
        Evaluate dimensions in a thread pool; output order is unaffected.
    """
    dims = [int(x) for x in dims]
    if len(dims) < 3 or any(b <= a for a, b in zip(dims, dims[1:])):
        raise BadParameter('dims must be strictly ascending with >= 3 entries')
    if isinstance(family, str):
        family = PairFamily(family)
    if not family.regular:
        raise FamilyNotRegular(f'{family.description} is not a regular family')

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            extremes = list(pool.map(
                lambda d: _singular_extremes(family, d, onb_seed), dims))
    else:
        extremes = [_singular_extremes(family, d, onb_seed) for d in dims]
    smax = [e[0] for e in extremes]
    smin = [e[1] for e in extremes]

    top = trace_behaviour(smax, growth_tol)
    bottom = trace_behaviour(smin, growth_tol)
    # a shrinking sigma_max or a rising sigma_min is still bounded
    phi_bessel = {'plateau': True, 'decays': True, 'grows': False}.get(top)
    psi_bessel = {'plateau': True, 'grows': True, 'decays': False}.get(bottom)

    if phi_bessel is None or psi_bessel is None:
        verdict = Verdict.INCONCLUSIVE
    elif phi_bessel and psi_bessel:
        verdict = Verdict.RIESZ
    elif phi_bessel:
        verdict = Verdict.SEMI_RIESZ_PHI_BESSEL
    elif psi_bessel:
        verdict = Verdict.SEMI_RIESZ_PSI_BESSEL
    else:
        verdict = Verdict.NON_RIESZ
    return Classification(verdict, dims, smax, smin, growth_tol,
                           phi_bessel, psi_bessel, family.description)
