"""
A biorthogonal pair that is not a basis
=======================================

phi_k = e_{k+1} + e_0 and psi_k = e_{k+1} are biorthogonal, but no psi_k
sees e_0.  With only d-1 vectors in dimension d the pair cannot be
regular, and the check reports vectors orthogonal to each span.
"""

import numpy as np

from biortho import analyze, generate, regularity_check
from biortho.pair import biorthogonality_residual

pair = generate('shifted-non-regular', 5)
print('Phi =\n', pair.phi.real)
print('Psi^H Phi - I:', biorthogonality_residual(pair))

v = regularity_check(pair)
print(v.status.value, 'ranks', v.rank_phi, v.rank_psi)
print('psi witness:', v.witness_psi.real)
print('phi witness:', np.round(v.witness_phi.real, 4))

# the full analysis stops after the regularity stage
rep = analyze(pair)
print('exit code', rep.exit_code, 'skipped', list(rep.data['skipped']))
