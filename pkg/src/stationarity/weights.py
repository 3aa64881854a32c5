# src/stationarity/weights.py
"""k-stationarity of boundary-attached discs.

A disc f attached to bΩ is k-stationary when some positive weight c on the
circle makes ζ^k c(ζ) ∂ρ(f(ζ)) extend holomorphically. The weight is
searched among real trigonometric polynomials of mean one; the map from its
coefficients to the negative Fourier modes of the weighted trace is linear,
so the search is a real least-squares problem.
"""
import logging
from dataclasses import dataclass

import numpy as np

from catalog.ellipsoid import ellipsoid_kind1
from common import settings
from common.errors import ParameterError, PreconditionError, SingularTraceError
from domains.containment import ATTACHED, GridConfig, contains_disc
from domains.model import Ellipsoid
from holo.discs import compose_power
from holo.fourier import BoundaryGrid, fourier_coefficients, lattice

LOGGER = logging.getLogger(__name__)

STATIONARY = "stationary"
NON_STATIONARY = "non-stationary"
NON_STATIONARY_WEIGHT = "non-stationary-weight"


@dataclass(frozen=True)
class BoundaryTraces:
    """ζ^k ∂ρ(f(ζ)) on the boundary lattice, one column per coordinate."""

    values: np.ndarray
    k: int
    radius: float
    excluded: int

    @property
    def size(self):
        return self.values.shape[0]


@dataclass(frozen=True)
class StationarityReport:
    residual: float
    weights: np.ndarray
    margin: float
    cutoff: int
    excluded: int
    verdict: str
    k: int
    coefficients: np.ndarray

    @property
    def mean(self):
        return float(np.mean(self.weights))

    @property
    def stationary(self):
        return self.verdict == STATIONARY

    def to_record(self):
        return {
            "verdict": self.verdict,
            "k": self.k,
            "residual": self.residual,
            "margin": self.margin,
            "mean": self.mean,
            "cutoff": self.cutoff,
            "excluded": self.excluded,
            "grid": int(self.weights.shape[0]),
        }


def boundary_covector(domain, disc, k, grid=None):
    grid = grid or GridConfig()
    report = contains_disc(domain, disc, grid)
    if report.verdict != ATTACHED:
        raise PreconditionError(f"{disc.name} is not attached to the boundary of {domain.identifier} "
                                f"(verdict {report.verdict}, max rho {report.max_rho:.3e})")
    radius = 1.0 if disc.closed else grid.ladder[-1]
    values = disc(lattice(grid.size, radius))
    singular = domain.singular_mask(values, tol=settings.TRACE_EXCLUSION)
    excluded = int(np.count_nonzero(singular))
    if excluded > grid.size // 2:
        raise SingularTraceError(f"∂ρ is singular at {excluded} of {grid.size} boundary points of {disc.name}")
    if excluded:
        LOGGER.info("%s: excluding %d singular boundary points", disc.name, excluded)
        values = np.where(singular[:, None], 1.0, values)
    gradient = domain.grad_rho(values)
    gradient[singular] = 0.0
    traces = lattice(grid.size)[:, None] ** k * gradient
    return BoundaryTraces(traces, int(k), radius, excluded)


def default_cutoff(k, blaschke_degree=1):
    return 2 * k * max(1, blaschke_degree) + 8


def _design(coefficients, size, cutoff):
    """Negative-mode columns for cos jθ and sin jθ, j = 1..cutoff."""
    values = coefficients.values
    offset = size // 2
    window = np.arange(-(size // 4), 0)
    base = values[window + offset].reshape(-1)
    columns = []
    for j in range(1, cutoff + 1):
        lower = values[window - j + offset]
        upper = values[window + j + offset]
        columns.append(((lower + upper) / 2.0).reshape(-1))
        columns.append(((lower - upper) / 2j).reshape(-1))
    return base, np.stack(columns, axis=1) if columns else np.zeros((base.size, 0), dtype=complex)


def weight_samples(coefficients, size):
    theta = 2.0 * np.pi * np.arange(size) / size
    weights = np.ones(size)
    for j, (u, w) in enumerate(coefficients.reshape(-1, 2), start=1):
        weights += u * np.cos(j * theta) + w * np.sin(j * theta)
    return weights


def solve_weight(traces, k, cutoff):
    """Least-squares weight c = 1 + Σ u_j cos jθ + w_j sin jθ and its verdict."""
    size = traces.size
    if not 0 <= cutoff < size // 4:
        raise ParameterError(f"frequency cutoff must lie in [0, {size // 4}), got {cutoff!r}")
    modes = fourier_coefficients(BoundaryGrid(size, 1.0, traces.values))
    base, design = _design(modes, size, cutoff)
    if design.shape[1]:
        real_design = np.concatenate([design.real, design.imag])
        real_base = np.concatenate([base.real, base.imag])
        solution = np.linalg.lstsq(real_design, -real_base, rcond=None)[0]
    else:
        solution = np.zeros(0)
    residual = float(np.linalg.norm(base + design @ solution))
    weights = weight_samples(solution, size)
    margin = float(np.min(weights))
    if residual >= settings.STATIONARY_RESIDUAL:
        verdict = NON_STATIONARY
    elif margin <= settings.STATIONARY_MARGIN:
        verdict = NON_STATIONARY_WEIGHT
    else:
        verdict = STATIONARY
    LOGGER.debug("weight solve k=%d F=%d: residual=%.3e margin=%.3e", k, cutoff, residual, margin)
    return StationarityReport(residual, weights, margin, int(cutoff), traces.excluded, verdict, int(k), solution)


def check_stationary(domain, disc, k, grid=None, cutoff=None):
    grid = grid or GridConfig()
    cutoff = default_cutoff(k) if cutoff is None else cutoff
    return solve_weight(boundary_covector(domain, disc, k, grid), k, cutoff)


def verify_k_stationary(params, k, grid=None, cutoff=None):
    """Stationarity of ζ ↦ φ(ζ^k) for a first-form ellipsoid map φ."""
    disc = compose_power(ellipsoid_kind1(params), k)
    if cutoff is None:
        cutoff = default_cutoff(k, params.r1 + params.r2)
    return check_stationary(Ellipsoid(params.m), disc, k, grid, cutoff)


def expected_weight(alpha0, k, size):
    """|ζ^k − α₀|²/(1 + |α₀|²) on the lattice."""
    zeta = lattice(size) ** k
    return np.abs(zeta - alpha0) ** 2 / (1.0 + abs(alpha0) ** 2)
