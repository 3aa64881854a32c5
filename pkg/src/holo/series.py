# src/holo/series.py
import math
from dataclasses import dataclass

import numpy as np

from common import settings
from common.errors import OutOfRangeError, ParameterError


@dataclass(frozen=True)
class ComplexSeries:
    """Truncated power series c_0 + c_1 ζ + ... + c_N ζ^N."""

    coefficients: np.ndarray

    def __post_init__(self):
        coeffs = np.atleast_1d(np.asarray(self.coefficients, dtype=complex))
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ParameterError(f"series needs a non-empty 1-D coefficient list, got shape {coeffs.shape}")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self):
        return self.coefficients.size - 1

    def __call__(self, zeta):
        return eval_series(self, zeta)

    def shifted(self, power):
        """Series of ζ^power · s."""
        return ComplexSeries(np.concatenate([np.zeros(power, dtype=complex), self.coefficients]))


@dataclass(frozen=True)
class VanishingOrder:
    """ν(f) of f − f(0); ``order is None`` stands for the zero function."""

    order: int | None

    @property
    def infinite(self):
        return self.order is None

    def at_least(self, k):
        return self.infinite or self.order >= k

    def __str__(self):
        return "infinite" if self.infinite else str(self.order)


def eval_series(s, zeta):
    """Horner evaluation; ζ may be a scalar or an array."""
    z = np.asarray(zeta, dtype=complex)
    value = np.full(z.shape, s.coefficients[-1], dtype=complex)
    for c in s.coefficients[-2::-1]:
        value = value * z + c
    if value.ndim == 0:
        return complex(value)
    return value


def kth_derivative_at_zero(s, k):
    if k < 0 or k > s.degree:
        raise OutOfRangeError(f"derivative order {k} outside 0..{s.degree}")
    return math.factorial(k) * complex(s.coefficients[k])


def vanishing_order(coefficients, tol=settings.VANISHING_TOL):
    """Vanishing order of f − f(0) from Taylor rows c_0..c_N.

    ``coefficients`` is either a 1-D array or an (N+1, n) matrix for a vector
    valued map, in which case the order is the minimum over components. A
    coefficient counts as zero below ``tol · max(1, max |c|)``.
    """
    coeffs = np.asarray(coefficients, dtype=complex)
    if coeffs.ndim == 1:
        coeffs = coeffs[:, None]
    if coeffs.shape[0] == 0:
        raise ParameterError("empty coefficient list")
    threshold = tol * max(1.0, float(np.max(np.abs(coeffs))))
    magnitudes = np.max(np.abs(coeffs[1:]), axis=1) if coeffs.shape[0] > 1 else np.zeros(0)
    nonzero = np.nonzero(magnitudes >= threshold)[0]
    if nonzero.size == 0:
        return VanishingOrder(None)
    return VanishingOrder(int(nonzero[0]) + 1)
