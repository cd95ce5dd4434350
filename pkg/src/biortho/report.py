"""Analysis pipeline: every check on one pair, collected into a report.

Stages run in order and stop early when a later stage would be undefined:

    biorthogonality -> regularity -> canonical -> frames -> ladder

Errors raised inside a stage are recorded in the report instead of
propagating.  Each numeric check carries the tolerance it was judged
against; tolerances are the per-module defaults (scaled by ``d`` and
``kappa(Tf)``) times a user multiplier `tol_scale`.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .canonical import canonical_form, transition_factorization, \
    verify_onb_invariance
from .errors import BiorthoError, ConditioningExceeded, SingularInput
from .families import PairFamily, generate
from .frames import (GROWTH_TOL, bessel_check, classify_sweep,
                     frame_operators, verify_frame_identities)
from .io import complex_to_json, dumps
from .ladder import (build_from_vacuum, build_ladder_set, ladder_invariants,
                     verify_basis_independence, verify_commutators,
                     verify_ladder_action, verify_number_operators)
from .numerics import random_unitary, svd, unitarity_defect
from .pair import BIORTHO_RTOL, biorthogonality_residual, regularity_check

__all__ = ['AnalysisReport', 'analyze', 'sweep', 'EXIT_OK', 'EXIT_FAILED',
           'EXIT_INDETERMINATE', 'EXIT_INPUT', 'EXIT_CONDITIONING',
           'NUMBER_OPERATOR_NOTE']

EXIT_OK = 0
EXIT_FAILED = 2
EXIT_INDETERMINATE = 3
EXIT_INPUT = 4
EXIT_CONDITIONING = 5

NUMBER_OPERATOR_NOTE = (
    'N and Ndag are built with coefficient (k+1) on f_{k+1} (x) f_{k+1}, '
    'i.e. N = Tf (a^H a)_f Tf^{-1}. A sqrt(k+1) coefficient would '
    'contradict N phi_n = n phi_n and B A = N; the (k+1) form satisfies both.'
)

STAGES = ('biorthogonality', 'regularity', 'canonical', 'frames', 'ladder')
N_PROBES = 1000
N_ONBS = 5


@dataclass
class AnalysisReport:
    data: dict
    exit_code: int

    def to_json(self):
        return dumps(self.data)

    @property
    def passed(self):
        return self.exit_code == EXIT_OK


class _Checks:
    def __init__(self, scale):
        self.scale = scale
        self.failed = []
        self.count = 0

    def __call__(self, name, value, tol, scaled=True):
        tol = tol * self.scale if scaled else tol
        ok = bool(value <= tol)
        self.count += 1
        if not ok:
            self.failed.append(name)
        return {'value': float(value), 'tol': float(tol), 'pass': ok}


def _error(exc):
    return f'{type(exc).__name__}: {exc}'


def analyze(pair, tol_scale=1.0, seed=0, provenance=None):
    """Run every applicable check on `pair`.

    Exit codes: 0 all pass, 2 some check failed, 3 regularity is
    indeterminate at this truncation, 5 conditioning too poor to proceed.

    Parameters
    ----------
    pair : TruncatedPair
    tol_scale : float
        Multiplier on every default tolerance.
    seed : int
        Seeds the Bessel probes and the random ONBs.
    provenance : str, optional
        Free-text origin of the pair (e.g. a file path).
    """
    check = _Checks(tol_scale)
    d, n = pair.dim, pair.count
    stages = {}
    skipped = {}
    errors = {}
    data = {
        'tool': 'biortho',
        'version': __version__,
        'input': {'provenance': provenance or '', 'label': pair.label,
                  'dim': d, 'count': n},
        'settings': {'tol_scale': float(tol_scale), 'seed': int(seed),
                     'bessel_probes': N_PROBES, 'random_onbs': N_ONBS},
        'note': NUMBER_OPERATOR_NOTE,
        'stages': stages,
        'skipped': skipped,
        'errors': errors,
    }

    def finish(code, status):
        data['summary'] = {'status': status, 'checks': check.count,
                           'failed': check.failed, 'exit_code': code}
        return AnalysisReport(data, code)

    def skip_rest(reason):
        for name in STAGES:
            if name not in stages:
                skipped[name] = reason

    # biorthogonality
    bio = biorthogonality_residual(pair)
    bio_tol = BIORTHO_RTOL * n
    stages['biorthogonality'] = {'residual': check('biorthogonality', bio,
                                                   bio_tol)}
    if check.failed:
        skip_rest('pair is not biorthogonal')
        return finish(EXIT_FAILED, 'fail')

    # regularity
    verdict = regularity_check(pair, tol=bio_tol * tol_scale)
    reg = {'status': verdict.status.value, 'rank_phi': verdict.rank_phi,
           'rank_psi': verdict.rank_psi}
    if not verdict.regular:
        for name, w, M in (('phi', verdict.witness_phi, pair.phi),
                           ('psi', verdict.witness_psi, pair.psi)):
            reg[f'witness_{name}'] = complex_to_json(w)
            reg[f'witness_{name}_residual'] = check(
                f'witness_{name}', np.linalg.norm(M.conj().T @ w), 1e-10)
        stages['regularity'] = reg
        skip_rest('regularity is Indeterminate at this '
                  'truncation (n < d); the canonical form needs a regular '
                  'pair')
        return finish(EXIT_INDETERMINATE, 'indeterminate')
    stages['regularity'] = reg

    rng = np.random.default_rng(seed)
    onb_seeds = [int(s) for s in rng.integers(0, 2**31, size=N_ONBS)]
    probe_seed = int(rng.integers(0, 2**31))

    # canonical form
    try:
        cf = canonical_form(pair)
    except (ConditioningExceeded, SingularInput) as exc:
        errors['canonical'] = _error(exc)
        skip_rest('canonical form unavailable')
        return finish(EXIT_CONDITIONING, 'conditioning')
    kappa = cf.kappa
    k2 = kappa ** 2
    Phi, Psi = pair.phi, pair.psi
    s_phi = svd(Phi).sigma[::-1]
    E, G = random_unitary(d, onb_seeds[0]), random_unitary(d, onb_seeds[1])
    stages['canonical'] = {
        'spectrum': cf.spectrum.tolist(),
        'kappa': kappa,
        'reconstruct_phi': check(
            'reconstruct_phi',
            np.linalg.norm(Phi - cf.Tf @ cf.F) / np.linalg.norm(Phi),
            1e-10 * d),
        'reconstruct_psi': check(
            'reconstruct_psi',
            np.linalg.norm(Psi - cf.Tf_inv @ cf.F) / np.linalg.norm(Psi),
            1e-10 * d * kappa),
        'F_unitarity': check('F_unitarity', unitarity_defect(cf.F),
                             1e-11 * d),
        'Tf_inverse': check(
            'Tf_inverse', np.abs(cf.Tf @ cf.Tf_inv - np.eye(d)).max(),
            1e-10 * d * kappa),
        'spectrum_vs_singular_values': check(
            'spectrum_vs_singular_values',
            np.max(np.abs(cf.spectrum - s_phi) / s_phi), 1e-10),
        'onb_invariance': check(
            'onb_invariance', verify_onb_invariance(pair, onb_seeds),
            1e-9 * d * kappa),
        'transition_factorization': check(
            'transition_factorization',
            transition_factorization(pair, E, G), 1e-11 * d),
    }

    # frames
    fd = frame_operators(pair)
    fr = verify_frame_identities(pair)
    probe = bessel_check(pair, N_PROBES, probe_seed)
    stages['frames'] = {
        'r_phi': fd.r_phi,
        'r_psi': fd.r_psi,
        'sigma_max': fd.sigma_max,
        'sigma_min': fd.sigma_min,
        'identities': {name: check(f'frame.{name}', value, 1e-9 * d * k2)
                       for name, value in vars(fr).items()},
        'bessel_phi_excess': check('bessel_phi_excess',
                                   probe.max_phi_ratio - fd.r_phi,
                                   1e-10 * max(1.0, fd.r_phi)),
        'bessel_psi_excess': check('bessel_psi_excess',
                                   probe.max_psi_ratio - fd.r_psi,
                                   1e-10 * max(1.0, fd.r_psi)),
    }

    # ladder
    try:
        ls = build_ladder_set(cf)
    except ConditioningExceeded as exc:
        errors['ladder'] = _error(exc)
        skip_rest('ladder operators unavailable')
        return finish(EXIT_CONDITIONING, 'conditioning')
    inv = ladder_invariants(ls)
    act = verify_ladder_action(pair, ls)
    comm = verify_commutators(ls)
    vac = build_from_vacuum(ls, pair)
    num = verify_number_operators(ls, pair)
    t_lad = 1e-9 * d * k2
    stages['ladder'] = {
        'invariants': {
            'Adag_vs_A_H': check('Adag_vs_A_H', inv['Adag_vs_A_H'],
                                 1e-11 * d * k2),
            'Bdag_vs_B_H': check('Bdag_vs_B_H', inv['Bdag_vs_B_H'],
                                 1e-11 * d * k2),
            'BA_vs_N': check('BA_vs_N', inv['BA_vs_N'], 1e-10 * d * k2),
            'AdagBdag_vs_Ndag': check('AdagBdag_vs_Ndag',
                                      inv['AdagBdag_vs_Ndag'],
                                      1e-10 * d * k2),
            'AB_vs_conjugated_aaH': check('AB_vs_conjugated_aaH',
                                          inv['AB_vs_conjugated_aaH'],
                                          1e-10 * d * k2),
        },
        'action': {name: check(f'action.{name}', getattr(act, name), t_lad)
                   for name in act._fields if name != 'edge_raise_phi'},
        'action_edge_raise_phi': act.edge_raise_phi,
        'commutator_lower_block': check('commutator_lower_block',
                                        comm.lower_block_residual, t_lad),
        'commutator_edge_norm': comm.edge_norm,
        'commutator_edge_vs_d': check('commutator_edge_vs_d',
                                      abs(comm.edge_norm - d) / d, 1e-6),
        'vacuum_phi': check('vacuum_phi', vac.phi, 1e-8 * d * k2),
        'vacuum_psi': check('vacuum_psi', vac.psi, 1e-8 * d * k2),
        'number_phi': check('number_phi', num.phi, t_lad),
        'number_psi': check('number_psi', num.psi, t_lad),
        'number_eigenvalues': list(num.eigenvalues),
        'number_eigenvalue_error': check('number_eigenvalue_error',
                                         num.eigenvalue_error, 1e-8),
        'basis_independence': check(
            'basis_independence',
            verify_basis_independence(pair, ls, onb_seeds), t_lad),
    }

    if check.failed:
        return finish(EXIT_FAILED, 'fail')
    return finish(EXIT_OK, 'pass')


def _summary(family, d, tol_scale, seed):
    try:
        rep = analyze(generate(family, d), tol_scale=tol_scale, seed=seed)
    except BiorthoError as exc:
        return {'dim': d, 'status': 'error', 'error': _error(exc)}
    s = rep.data['summary']
    out = {'dim': d, 'status': s['status'], 'exit_code': s['exit_code'],
           'checks': s['checks'], 'failed': s['failed']}
    canon = rep.data['stages'].get('canonical')
    if canon:
        out['kappa'] = canon['kappa']
    return out


def sweep(family, dims, growth_tol=GROWTH_TOL, tol_scale=1.0, seed=0,
          workers=None):
    """Classify a family over `dims` and analyze each dimension.

    Per-dimension work is independent and may run in a thread pool;
    results are always listed in `dims` order.
    """
    if isinstance(family, str):
        family = PairFamily(family)
    cls = classify_sweep(family, dims, growth_tol, workers=workers)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            per_dim = list(pool.map(
                lambda d: _summary(family, d, tol_scale, seed), cls.dims))
    else:
        per_dim = [_summary(family, d, tol_scale, seed) for d in cls.dims]
    return {
        'tool': 'biortho',
        'version': __version__,
        'family': family.description,
        'classification': {
            'verdict': cls.verdict.value,
            'dims': cls.dims,
            'sigma_max_trace': cls.sigma_max_trace,
            'sigma_min_trace': cls.sigma_min_trace,
            'phi_bessel': cls.phi_bessel,
            'psi_bessel': cls.psi_bessel,
            'growth_tol': cls.growth_tol,
        },
        'per_dim': per_dim,
    }
