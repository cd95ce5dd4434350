"""
Frame bounds and Riesz classification
=====================================

The frame operators S_phi = Phi Phi^H and S_psi = Psi Psi^H give the
Bessel bounds of the two sequences.  Watching how the extreme singular
values of Phi evolve with the truncation size tells us which of the
sequences stay Bessel.
"""

import numpy as np

from biortho import PairFamily, classify_sweep, frame_operators, generate
from biortho.frames import bessel_check

pair = generate(PairFamily('diag-power', {'alpha': 1.0}), 16)
fd = frame_operators(pair)
print('r_phi =', fd.r_phi, ' r_psi =', fd.r_psi)

# random unit vectors never beat the bound
probe = bessel_check(pair, 1000, seed=0)
print('largest sampled Bessel sum:', probe.max_phi_ratio)

# the bound is attained at the last basis vector
x = np.zeros(16)
x[-1] = 1
print('sum |(x|phi_k)|^2 at e_15:', np.sum(np.abs(pair.phi.conj().T @ x) ** 2))

dims = [8, 16, 32, 64]
for fam in [PairFamily('diag-power', {'alpha': 0.0}),
            PairFamily('diag-power', {'alpha': 1.0}),
            PairFamily('diag-power', {'alpha': -1.0}),
            PairFamily('diag-mixed'),
            PairFamily('bounded-perturbation', {'eps': 0.3})]:
    cls = classify_sweep(fam, dims)
    print(f'{fam.description:40s} {cls.verdict.value:20s}',
          'sigma_max', np.round(cls.sigma_max_trace, 3),
          'sigma_min', np.round(cls.sigma_min_trace, 3))
