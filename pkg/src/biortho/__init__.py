"""Regular biorthogonal pairs at finite truncation.

Canonical ONB and metric operator via polar decomposition, frame operators
and Riesz / semi-Riesz classification, and the pseudo-bosonic ladder and
number operators with their algebraic identities as checkable matrix
properties.
"""

__version__ = '0.1.0'

from .errors import *  # noqa: E402,F401,F403
from .numerics import (hermitian_eig, polar_left, random_unitary,  # noqa: E402
                       sqrtm_psd, svd)
from .pair import (TruncatedPair, biorthogonality_residual,  # noqa: E402
                   build_transition, regularity_check)
from .canonical import (CanonicalForm, canonical_form,  # noqa: E402
                        transition_factorization, verify_onb_invariance)
from .families import PairFamily, generate  # noqa: E402
from .frames import (bessel_check, classify_sweep, frame_operators,  # noqa: E402
                     verify_frame_identities)
from .ladder import (LadderSet, build_from_vacuum,  # noqa: E402
                     build_ladder_set, standard_ladder, verify_commutators,
                     verify_ladder_action, verify_number_operators)
from .io import load_pair, save_pair  # noqa: E402
from .report import analyze, sweep  # noqa: E402
