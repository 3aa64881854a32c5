# src/holo/fourier.py
"""Boundary lattices and discrete Fourier analysis on circles |ζ| = r."""
from dataclasses import dataclass

import numpy as np

from common import settings
from common.errors import ParameterError


def is_power_of_two(size):
    return size >= 2 and (size & (size - 1)) == 0


def lattice(size, radius=1.0):
    """Points r·e^{2πij/M}, j = 0..M−1."""
    if not is_power_of_two(size):
        raise ParameterError(f"grid size must be a power of two, got {size!r}")
    if not 0.0 < radius <= 1.0:
        raise ParameterError(f"grid radius must lie in (0, 1], got {radius!r}")
    return radius * np.exp(2j * np.pi * np.arange(size) / size)


@dataclass(frozen=True)
class BoundaryGrid:
    """Samples of a map on one circle; axis 0 runs over the M nodes."""

    size: int
    radius: float
    samples: np.ndarray

    def __post_init__(self):
        if not is_power_of_two(self.size):
            raise ParameterError(f"grid size must be a power of two, got {self.size!r}")
        samples = np.asarray(self.samples, dtype=complex)
        if samples.shape[0] != self.size:
            raise ParameterError(f"expected {self.size} samples, got {samples.shape[0]}")
        object.__setattr__(self, "samples", samples)

    @property
    def nodes(self):
        return lattice(self.size, self.radius)


@dataclass(frozen=True)
class FourierCoefficients:
    """Coefficients for frequencies −M/2..M/2−1 (axis 0)."""

    frequencies: np.ndarray
    values: np.ndarray
    radius: float = 1.0

    def at(self, frequency):
        size = self.frequencies.size
        if not -size // 2 <= frequency < size // 2:
            raise ParameterError(f"frequency {frequency} outside the grid band")
        return self.values[frequency + size // 2]

    def band(self, low, high):
        """Values for frequencies low..high inclusive."""
        size = self.frequencies.size
        return self.values[low + size // 2: high + size // 2 + 1]

    def negative(self, cutoff=None):
        """Frequencies −cutoff..−1 (default cutoff M/4, the aliasing guard)."""
        size = self.frequencies.size
        cutoff = size // 4 if cutoff is None else min(cutoff, size // 2)
        return self.band(-cutoff, -1)

    def taylor(self, count):
        """Nonnegative coefficients rescaled from radius r back to radius 1."""
        size = self.frequencies.size
        count = min(count, size // 2)
        powers = self.radius ** -np.arange(count, dtype=float)
        block = self.band(0, count - 1)
        return block * powers.reshape((-1,) + (1,) * (block.ndim - 1))


def sample_boundary(f, size=settings.GRID_SIZE, radius=1.0):
    nodes = lattice(size, radius)
    return BoundaryGrid(size, radius, np.asarray(f(nodes), dtype=complex))


def fourier_coefficients(grid):
    """DFT normalised so that Σ c_n ζ^n at r = 1 returns c_n."""
    values = np.fft.fftshift(np.fft.fft(grid.samples, axis=0) / grid.size, axes=0)
    frequencies = np.fft.fftshift(np.fft.fftfreq(grid.size, d=1.0 / grid.size)).astype(int)
    return FourierCoefficients(frequencies, values, grid.radius)


def inverse_fourier(coefficients):
    """Samples reproduced from shifted coefficients."""
    values = np.fft.ifftshift(coefficients.values, axes=0)
    return np.fft.ifft(values, axis=0) * values.shape[0]


def cauchy_taylor(f, center=0.0, radius=settings.TAYLOR_RADIUS, nodes=settings.CAUCHY_NODES, count=None):
    """Taylor coefficients of f at ``center`` by trapezoidal Cauchy quadrature.

    Returns rows c_0..c_{count−1}; vector-valued maps give one column per
    component. Spectrally accurate while f is holomorphic on a disc slightly
    larger than |ζ − center| ≤ radius.
    """
    center = complex(center)
    count = nodes // 2 if count is None else count
    if count > nodes // 2:
        raise ParameterError(f"cannot recover {count} coefficients from {nodes} nodes")
    omega = lattice(nodes, 1.0)
    samples = np.asarray(f(center + radius * omega), dtype=complex)
    coeffs = np.fft.fft(samples, axis=0)[:count] / nodes
    powers = radius ** -np.arange(count, dtype=float)
    return coeffs * powers.reshape((-1,) + (1,) * (coeffs.ndim - 1))
