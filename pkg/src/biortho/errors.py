"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`BiorthoError`
so callers (the report pipeline in particular) can catch them in one place.
"""

import numpy as np

__all__ = ['BiorthoError', 'NotHermitian', 'NotPSD', 'NumericalFailure',
           'SingularInput', 'NotUnitary', 'DimensionMismatch',
           'DimensionTooSmall', 'NotBiorthogonal', 'NotRegular',
           'ConditioningExceeded', 'BadParameter', 'FamilyNotRegular',
           'ParseError', 'SchemaError', 'ValidationError']


class BiorthoError(Exception):
    """Base class for all package errors."""


# -- kernels ---------------------------------------------------------------

class NotHermitian(BiorthoError, ValueError):
    pass


class NotPSD(BiorthoError, ValueError):
    pass


class NumericalFailure(BiorthoError, np.linalg.LinAlgError):
    """A LAPACK routine did not converge."""


class SingularInput(BiorthoError, np.linalg.LinAlgError):
    """Smallest singular value below the singularity tolerance.

    For a transition operator this means the pair is not regular at the
    working truncation/precision.
    """


class NotUnitary(BiorthoError, ValueError):
    pass


class DimensionMismatch(BiorthoError, ValueError):
    pass


class DimensionTooSmall(BiorthoError, ValueError):
    pass


# -- pairs -----------------------------------------------------------------

class NotBiorthogonal(BiorthoError, ValueError):
    pass


class NotRegular(BiorthoError, ValueError):
    pass


class ConditioningExceeded(BiorthoError, ValueError):
    """kappa(Tf) too large for the identities to keep any significant digits."""


class BadParameter(BiorthoError, ValueError):
    pass


class FamilyNotRegular(BiorthoError, ValueError):
    pass


# -- file io ---------------------------------------------------------------

class ParseError(BiorthoError, ValueError):
    pass


class SchemaError(BiorthoError, ValueError):
    pass


class ValidationError(BiorthoError, ValueError):
    pass
