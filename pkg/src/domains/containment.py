# src/domains/containment.py
import logging
from dataclasses import dataclass

import numpy as np

from common import settings
from common.errors import DimensionError, ParameterError
from holo.fourier import is_power_of_two, lattice

LOGGER = logging.getLogger(__name__)

CONTAINED = "contained"
ATTACHED = "attached"
VIOLATED = "violated"


@dataclass(frozen=True)
class GridConfig:
    size: int = settings.GRID_SIZE
    ladder: tuple = settings.LADDER
    margin: float = settings.CONTAINMENT_MARGIN
    attach_tol: float = settings.ATTACH_TOL

    def __post_init__(self):
        if not is_power_of_two(self.size):
            raise ParameterError(f"grid size must be a power of two, got {self.size!r}")
        ladder = tuple(float(r) for r in self.ladder)
        if not ladder or any(not 0.0 < r <= 1.0 for r in ladder):
            raise ParameterError(f"ladder radii must lie in (0, 1], got {self.ladder!r}")
        object.__setattr__(self, "ladder", tuple(sorted(ladder)))
        if self.margin < 0.0 or self.attach_tol < 0.0:
            raise ParameterError("margin and attachment tolerance must be nonnegative")

    def radii_for(self, disc):
        """Ladder radii, plus the unit circle for discs continuous up to it."""
        if disc.closed and self.ladder[-1] < 1.0:
            return self.ladder + (1.0,)
        return self.ladder

    def with_size(self, size):
        return GridConfig(size, self.ladder, self.margin, self.attach_tol)


@dataclass(frozen=True)
class ContainmentReport:
    max_rho: float
    margin: float
    ladder: tuple
    radius_maxima: tuple
    outer_abs_rho: float
    verdict: str
    min_modulus: float | None = None
    winding: int | None = None

    @property
    def contained(self):
        return self.verdict == CONTAINED

    @property
    def inside(self):
        return self.verdict in (CONTAINED, ATTACHED)

    def to_record(self):
        return {
            "max_rho": self.max_rho,
            "margin": self.margin,
            "ladder": list(self.ladder),
            "radius_maxima": list(self.radius_maxima),
            "outer_abs_rho": self.outer_abs_rho,
            "verdict": self.verdict,
            "min_modulus": self.min_modulus,
            "winding": self.winding,
        }


def winding_number(values):
    """Winding of closed lattice samples around 0."""
    turns = np.angle(np.roll(values, -1) / values)
    return int(np.rint(np.sum(turns) / (2.0 * np.pi)))


def lattice_violation(domain, values):
    """Scalar constraint value on sampled points: negative means inside."""
    rho = domain.rho(values)
    if not np.all(np.isfinite(rho)):
        return float("inf")
    worst = float(np.max(rho))
    modulus = domain.excluded_modulus(values)
    if modulus is not None:
        worst = max(worst, settings.PUNCTURE_MIN_MODULUS - float(np.min(modulus)))
        if worst < 0.0 and winding_number(values[..., 0]) != 0:
            worst = 1.0
    return worst


def rho_on_lattice(domain, disc, size, radius):
    values = disc(lattice(size, radius))
    if values.shape[-1] != domain.dimension:
        raise DimensionError(f"disc of dimension {values.shape[-1]} tested against {domain.identifier}")
    return values, domain.rho(values)


def _puncture_data(disc, values, modulus, size, radius):
    """(min |f|, winding, zero-free by construction) on one lattice."""
    if disc.logarithm is None:
        lowest = float(np.min(modulus))
        winding = winding_number(values[..., 0]) if lowest > 0.0 else None
        return lowest, winding, False
    exponent = np.asarray(disc.logarithm(lattice(size, radius)), dtype=complex)
    if not np.all(np.isfinite(exponent)):
        return 0.0, None, False
    return float(np.exp(np.min(exponent.real))), 0, True


def contains_disc(domain, disc, config=None):
    """Sup of ρ∘f over every ladder lattice with a verdict.

    For plurisubharmonic ρ the outermost radius controls the interior, so the
    inner radii act as a consistency check rather than a certificate.
    Discs marked ``closed`` are also sampled on |ζ| = 1, so a polynomial disc
    touching the boundary there, such as ζ ↦ (ζ², ζ³) in the bidisc, reports
    "attached": the open disc still maps into the domain.
    In the punctured disc, a disc carrying a logarithm is zero-free by
    construction; otherwise min |f| must exceed the puncture threshold and f
    must not wind around 0.
    """
    config = config or GridConfig()
    radii = config.radii_for(disc)
    maxima = []
    min_modulus = None
    winding = None
    zero_free = True
    outer_abs = 0.0
    for radius in radii:
        values, rho = rho_on_lattice(domain, disc, config.size, radius)
        if not np.all(np.isfinite(rho)):
            maxima.append(float("inf"))
            continue
        maxima.append(float(np.max(rho)))
        outer_abs = float(np.max(np.abs(rho)))
        modulus = domain.excluded_modulus(values)
        if modulus is not None:
            lowest, turns, exact = _puncture_data(disc, values, modulus, config.size, radius)
            min_modulus = lowest if min_modulus is None else min(min_modulus, lowest)
            zero_free = zero_free and exact
            if turns is not None:
                winding = turns
    max_rho = max(maxima)
    punctured_ok = (min_modulus is None or zero_free
                    or (min_modulus > settings.PUNCTURE_MIN_MODULUS and winding == 0))
    if max_rho < -config.margin and punctured_ok:
        verdict = CONTAINED
    elif max_rho <= config.attach_tol and outer_abs <= config.attach_tol and punctured_ok:
        verdict = ATTACHED
    else:
        verdict = VIOLATED
    LOGGER.debug("%s in %s: max_rho=%.3e verdict=%s", disc.name, domain.identifier, max_rho, verdict)
    return ContainmentReport(max_rho, config.margin, radii, tuple(maxima), outer_abs, verdict, min_modulus, winding)
