# src/holo/discs.py
import math

import numpy as np

from common import settings
from common.errors import DimensionError, OutOfRangeError, ParameterError
from holo.fourier import cauchy_taylor
from holo.series import vanishing_order


class AnalyticDisc:
    """Holomorphic map from the unit disc to C^n.

    ``evaluator`` maps an array of ζ to an array of shape ζ.shape + (n,).
    ``taylor`` optionally holds coded Taylor rows c_0.. (one column per
    component); rows not coded are recovered by Cauchy quadrature on
    |ζ| = 0.5. ``closed`` marks discs that extend continuously to the closed
    disc and may be sampled on |ζ| = 1. ``logarithm`` optionally evaluates a
    holomorphic branch g with f = exp(g) for a one-dimensional disc; such a
    disc is zero-free by construction.
    """

    def __init__(self, evaluator, dimension, taylor=None, closed=False, name="disc", logarithm=None):
        if dimension < 1:
            raise DimensionError(f"disc dimension must be positive, got {dimension}")
        self.evaluator = evaluator
        self.dimension = int(dimension)
        self.closed = bool(closed)
        self.name = name
        if logarithm is not None and self.dimension != 1:
            raise DimensionError(f"a logarithm is only defined for one-dimensional discs, got dimension {self.dimension}")
        self.logarithm = logarithm
        self._taylor = None
        if taylor is not None:
            rows = np.asarray(taylor, dtype=complex)
            if rows.ndim == 1:
                rows = rows[:, None]
            if rows.shape[1] != self.dimension:
                raise DimensionError(f"taylor rows have {rows.shape[1]} columns, disc has dimension {self.dimension}")
            self._taylor = rows

    def __call__(self, zeta):
        z = np.asarray(zeta, dtype=complex)
        values = np.asarray(self.evaluator(z), dtype=complex)
        if values.shape != z.shape + (self.dimension,):
            values = values.reshape(z.shape + (self.dimension,))
        return values

    def __repr__(self):
        return f"{type(self).__name__}(name={self.name!r}, dimension={self.dimension})"

    # --- Jets ---

    def quadrature_taylor(self, count):
        return cauchy_taylor(self, 0.0, settings.TAYLOR_RADIUS, settings.TAYLOR_NODES, count)

    def taylor_coefficients(self, count):
        """Rows c_0..c_{count−1}, coded rows first, quadrature for the rest."""
        coded = self._taylor if self._taylor is not None else np.zeros((0, self.dimension), dtype=complex)
        if coded.shape[0] >= count:
            return coded[:count].copy()
        if count > settings.TAYLOR_NODES // 2:
            raise OutOfRangeError(f"only {settings.TAYLOR_NODES // 2} Taylor rows are recoverable, asked for {count}")
        recovered = self.quadrature_taylor(count)
        recovered[: coded.shape[0]] = coded
        return recovered

    def jet(self, k):
        """f^{(k)}(0) as a vector."""
        if k < 0:
            raise OutOfRangeError(f"negative derivative order {k}")
        return math.factorial(k) * self.taylor_coefficients(k + 1)[k]

    def value_at_zero(self):
        return self.taylor_coefficients(1)[0]

    def vanishing_order(self, count=settings.TAYLOR_LENGTH):
        return vanishing_order(self.taylor_coefficients(count))

    def component(self, index):
        if not 0 <= index < self.dimension:
            raise DimensionError(f"component {index} outside 0..{self.dimension - 1}")
        return lambda zeta: self(zeta)[..., index]


class SeriesDisc(AnalyticDisc):
    """Polynomial disc given by its coefficient matrix (N+1, n)."""

    def __init__(self, coefficients, name="series"):
        coeffs = np.asarray(coefficients, dtype=complex)
        if coeffs.ndim == 1:
            coeffs = coeffs[:, None]
        if coeffs.ndim != 2 or coeffs.shape[0] == 0:
            raise ParameterError(f"series disc needs an (N+1, n) matrix, got shape {coeffs.shape}")
        self.coefficients = coeffs
        super().__init__(self._evaluate, coeffs.shape[1], taylor=coeffs, closed=True, name=name)

    @property
    def degree(self):
        return self.coefficients.shape[0] - 1

    def _evaluate(self, zeta):
        z = np.asarray(zeta, dtype=complex)
        value = np.broadcast_to(self.coefficients[-1], z.shape + (self.dimension,)).astype(complex)
        for row in self.coefficients[-2::-1]:
            value = value * z[..., None] + row
        return value

    def taylor_coefficients(self, count):
        rows = np.zeros((count, self.dimension), dtype=complex)
        used = min(count, self.coefficients.shape[0])
        rows[:used] = self.coefficients[:used]
        return rows


def constant_disc(point, name="constant"):
    return SeriesDisc(np.asarray(point, dtype=complex)[None, :], name=name)


def compose_power(f, k):
    """g(ζ) = f(ζ^k); Taylor rows are reindexed exactly."""
    if int(k) != k or k < 1:
        raise ParameterError(f"power must be a positive integer, got {k!r}")
    k = int(k)
    if k == 1:
        return f
    name = f"{f.name}(z^{k})"
    if isinstance(f, SeriesDisc):
        rows = np.zeros((f.degree * k + 1, f.dimension), dtype=complex)
        rows[::k] = f.coefficients
        return SeriesDisc(rows, name=name)
    source = f.taylor_coefficients(settings.TAYLOR_LENGTH)
    rows = np.zeros(((source.shape[0] - 1) * k + 1, f.dimension), dtype=complex)
    rows[::k] = source
    logarithm = None
    if f.logarithm is not None:
        def logarithm(zeta):
            return f.logarithm(np.asarray(zeta, dtype=complex) ** k)
    return AnalyticDisc(lambda zeta: f(np.asarray(zeta, dtype=complex) ** k), f.dimension,
                        taylor=rows, closed=f.closed, name=name, logarithm=logarithm)
