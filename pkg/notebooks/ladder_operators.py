"""
Deformed ladder operators
=========================

Conjugating the truncated annihilation operator by the metric operator
gives lowering and raising operators A and B that walk along the phi
sequence, with their adjoints walking along psi.
"""

import numpy as np

from biortho import PairFamily, build_ladder_set, canonical_form, generate
from biortho.ladder import (build_from_vacuum, verify_commutators,
                            verify_ladder_action, verify_number_operators)

pair = generate(PairFamily('random-regular', {'kappa': 30.0, 'seed': 2}), 8)
ls = build_ladder_set(canonical_form(pair))

# A phi_3 = sqrt(3) phi_2
print(np.linalg.norm(ls.A @ pair.phi[:, 3] - np.sqrt(3) * pair.phi[:, 2]))
print(verify_ladder_action(pair, ls))

# AB - BA = I except on the top level, where truncation leaves -d
lower, edge = verify_commutators(ls)
print('commutator residual below the top:', lower, ' top level:', edge)

# every phi_n grows out of phi_0
print(build_from_vacuum(ls, pair))

# N = BA has eigenvalues 0, 1, ..., d-1 with eigenvectors phi_n
res = verify_number_operators(ls, pair)
print('eigenvalues of N:', np.round(res.eigenvalues, 10))
