# src/common/errors.py
"""Exception hierarchy shared by every koblab package.

Each error also derives from the closest builtin so callers that only know
``ValueError`` or ``ArithmeticError`` still catch it.
"""


class KoblabError(Exception):
    """Base class for all koblab failures."""


# --- Parameters and shapes ---

class ParameterError(KoblabError, ValueError):
    """A constructor or function received parameters outside its domain."""


class InfeasibleParametersError(ParameterError):
    """Parameters are well formed but violate a feasibility condition."""


class DimensionError(KoblabError, ValueError):
    """A point or disc has the wrong number of components."""


class OutOfRangeError(KoblabError, IndexError):
    """A derivative or coefficient index lies beyond the stored data."""


# --- Analytic failures ---

class PoleError(KoblabError, ZeroDivisionError):
    """Evaluation hit a pole of a rational map."""


class BranchError(KoblabError, ArithmeticError):
    """A holomorphic branch (log, root, power) could not be continued."""


class AnchorError(BranchError):
    """The requested branch value at 0 is not a root of f(0)."""


class SingularityError(KoblabError, ArithmeticError):
    """A gradient was requested at a non-differentiable point."""


# --- Workflow ---

class PreconditionError(KoblabError):
    """An operation was called on input that fails its precondition."""


class SingularTraceError(PreconditionError, SingularityError):
    """A boundary trace is singular on too much of the circle to be usable."""


class SearchFailureError(KoblabError):
    """The disc optimizer found no certified candidate."""


class InvalidSampleError(KoblabError, ValueError):
    """A sampled map does not satisfy the hypotheses of the lemma under test."""


class UsageError(KoblabError):
    """Command-line usage problem (bad range, unknown name, bad config)."""
