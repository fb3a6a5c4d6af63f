"""Exception types shared across the package."""


class GPEdimError(Exception):
    """Base class for all gpedim errors."""


class GraphParameterError(GPEdimError, ValueError):
    """A graph parameter or graph element is outside its domain."""


class UnsupportedRangeError(GPEdimError, ValueError):
    """The requested n lies outside the validity range of a closed form."""


class SearchBudgetError(GPEdimError, RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class VerificationError(GPEdimError, RuntimeError):
    """An internal re-verification failed; indicates an inconsistency."""


class CertificateError(GPEdimError, ValueError):
    """A certificate failed integrity or re-verification checks on load."""
