# src/catalog/yu.py
"""Explicit discs in the Yu domain {Re z₃ + |z₁² − z₂³|² < 0}.

All discs here have the shape (ζ^a(A + ζφ), ζ^b h₂, const) with h₂³ = φ(2A + ζφ),
so that z₁² − z₂³ collapses to a monomial and ρ∘f is explicit.
"""
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from common import settings
from common.errors import InfeasibleParametersError, ParameterError
from holo.discs import AnalyticDisc
from holo.fourier import cauchy_taylor, lattice
from holo.maps import exprel
from holo.roots import zero_free_root
from metrics.targets import EXACT, UPPER, JetTarget

LOGGER = logging.getLogger(__name__)

PARAM_TOL = 1e-12
NORM_TOL = 1e-12
YU_BASE = (0.0, 0.0, -1.0)
YU_DIRECTION = (0.0, 1.0, 0.0)
OPTIMAL_ALPHA = 2.0 / (1.0 - math.exp(-2.0 * math.pi))
OPTIMAL_BETA = 2.0 * math.pi


@dataclass
class CatalogDisc:
    """A constructed disc together with the jet it certifies."""

    name: str
    disc: AnalyticDisc
    domain_id: str
    target: JetTarget
    r: float
    kind: str = UPPER
    parts: dict = field(default_factory=dict)

    @property
    def value(self):
        return 1.0 / self.r


# --- Parameters ---

@dataclass(frozen=True)
class YuDiscParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.beta > 0.0):
            raise ParameterError(f"alpha and beta must be positive, got alpha={self.alpha!r} beta={self.beta!r}")
        if self.beta > 2.0 * math.pi + PARAM_TOL:
            raise ParameterError(f"beta = {self.beta!r} exceeds 2π; the disc would leave the domain")
        if self.alpha > 2.0 and math.log((self.alpha - 2.0) / self.alpha) > -self.beta + PARAM_TOL:
            raise ParameterError(f"log((α−2)/α) ≤ −β fails for alpha={self.alpha!r} beta={self.beta!r}")

    @property
    def r(self):
        return (2.0 * self.alpha * self.beta) ** (1.0 / 3.0)


@dataclass(frozen=True)
class ExactKobayashiParams:
    t: float
    a: complex
    b: complex

    def __post_init__(self):
        if not 0.0 < self.t < 1.0:
            raise ParameterError(f"t must lie in (0, 1), got {self.t!r}")
        if self.a == 0:
            raise ParameterError("a must be nonzero")
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ParameterError(f"|a|² + |b|² must equal 1, got {norm!r}")

    @property
    def ratio(self):
        return abs(self.b) / abs(self.a)

    @property
    def lam(self):
        """Exponential rate b³√t / (2a|a|²) of the auxiliary map."""
        return complex(self.b) ** 3 * math.sqrt(self.t) / (2.0 * complex(self.a) * abs(self.a) ** 2)

    @property
    def point(self):
        return (0.0, 0.0, -self.t)

    @property
    def direction(self):
        return (complex(self.a), complex(self.b), 0.0)

    @property
    def value(self):
        return abs(self.a) * self.t ** -0.25


def feasibility_ratio_bound(t):
    """Largest |b|/|a| allowed by the feasibility condition at level t."""
    cap = min(2.0 * math.pi, math.log(1.0 + 2.0 * t ** 0.25))
    return (2.0 / math.sqrt(t) * cap) ** (1.0 / 3.0)


def feasibility_condition(t, a, b):
    """|b|³/|a|³ ≤ (2/√t)·min{2π, log(1 + 2 t^{1/4})}."""
    return (abs(b) / abs(a)) ** 3 <= 2.0 / math.sqrt(t) * min(2.0 * math.pi, math.log(1.0 + 2.0 * t ** 0.25)) + PARAM_TOL


def rouche_condition(params):
    """e^{|λ|} − 1 ≤ 2 t^{1/4}: the shifted factor 2A + ζφ has no zero in the disc."""
    return math.expm1(abs(params.lam)) <= 2.0 * params.t ** 0.25 + PARAM_TOL


# --- Building blocks ---

def exponential_phi(scale, rate):
    """φ(ζ) = scale·(e^{rate ζ} − 1)/ζ."""
    return lambda zeta: scale * rate * exprel(rate * np.asarray(zeta, dtype=complex))


def key_base(phi, lead):
    """ζ ↦ φ(ζ)(2·lead + ζφ(ζ)); its cube root is h₂."""
    def base(zeta):
        z = np.asarray(zeta, dtype=complex)
        values = phi(z)
        return values * (2.0 * lead + z * values)
    return base


def key_equation_residual(entry, size=settings.GRID_SIZE, radius=settings.LADDER[-1]):
    """sup |φ(2A+ζφ) − h₂³| on a lattice, relative to max(1, sup |φ(2A+ζφ)|)."""
    nodes = lattice(size, radius)
    base = entry.parts["base"](nodes)
    h2 = entry.parts["h2"](nodes)
    return float(np.max(np.abs(base - h2 ** 3)) / max(1.0, float(np.max(np.abs(base)))))


def _yu_disc(name, phi, lead, anchor, shift1, shift2, third, lead_rows):
    base = key_base(phi, lead)
    h2 = zero_free_root(base, 3, anchor)

    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        values = phi(z)
        return np.stack([z ** shift1 * (lead + z * values), z ** shift2 * h2(z),
                         np.full(z.shape, third, dtype=complex)], axis=-1)

    rows = np.zeros((settings.TAYLOR_LENGTH, 3), dtype=complex)
    rows[: len(lead_rows), 0] = lead_rows
    h2_rows = cauchy_taylor(h2, 0.0, settings.TAYLOR_RADIUS, settings.TAYLOR_NODES, settings.TAYLOR_LENGTH - shift2)
    h2_rows[0] = anchor
    rows[shift2:, 1] = h2_rows
    rows[0, 2] = third
    disc = AnalyticDisc(evaluate, 3, taylor=rows, closed=False, name=name)
    return disc, {"phi": phi, "h2": h2, "base": base}


def _exponential_rows(scale, rate, shift, lead):
    """Coded Taylor rows of ζ^shift (lead + ζφ) with φ = scale(e^{rate ζ} − 1)/ζ."""
    rows = np.zeros(settings.TAYLOR_LENGTH, dtype=complex)
    rows[shift] = lead
    for j in range(1, settings.TAYLOR_LENGTH - shift):
        rows[shift + j] = scale * rate ** j / math.factorial(j)
    return rows


# --- Catalog constructors ---

def yu_parametric_disc(params, name=None):
    """(ζ⁴(1 + ζφ), ζ³h₂, −1) with φ = α(e^{βζ} − 1)/ζ and h₂³ = φ(2 + ζφ).

    Here z₁² − z₂³ = ζ⁸, so ρ∘f = −1 + |ζ|¹⁶; the parameter conditions keep
    φ(2 + ζφ) zero-free so that the cube root exists.
    """
    phi = exponential_phi(params.alpha, params.beta)
    r = params.r
    rows = _exponential_rows(params.alpha, params.beta, 4, 1.0)
    name = name or f"yu-param:{params.alpha!r},{params.beta!r}"
    disc, parts = _yu_disc(name, phi, 1.0, r, 4, 3, -1.0, rows)
    target = JetTarget(YU_BASE, YU_DIRECTION, 3)
    LOGGER.info("%s: r = %.12g, bound 1/r = %.12g", name, r, 1.0 / r)
    return CatalogDisc(name, disc, "yu_domain", target, r, UPPER, dict(parts, params=params))


def yu_simple_disc():
    """(ζ⁴e^ζ, ζ³h₂, −1), the α = β = 1 member of the family."""
    return yu_parametric_disc(YuDiscParams(1.0, 1.0), name="yu-simple")


def yu_optimal_disc():
    return yu_parametric_disc(YuDiscParams(OPTIMAL_ALPHA, OPTIMAL_BETA), name="yu-optimal")


def exact_kobayashi_disc(params):
    """(ζ(A + ζφ), ζh₂, −t) with A = (a/|a|) t^{1/4} and h₂³ = φ(2A + ζφ).

    z₁² − z₂³ = A²ζ², hence ρ∘f = −t + t|ζ|⁴, and f'(0) = X t^{1/4}/|a|.
    """
    if not feasibility_condition(params.t, params.a, params.b) or not rouche_condition(params):
        raise InfeasibleParametersError(
            f"|b|/|a| = {params.ratio:.6g} exceeds the feasible bound {feasibility_ratio_bound(params.t):.6g} at t = {params.t!r}")
    t4 = params.t ** 0.25
    lead = complex(params.a) / abs(params.a) * t4
    anchor = complex(params.b) * t4 / abs(params.a)
    name = f"exact-kob:{params.t!r},{complex(params.a)!r},{complex(params.b)!r}"
    lam = params.lam
    rows = _exponential_rows(1.0, lam, 1, lead)
    if params.b == 0:
        disc = _degenerate_exact_disc(name, lead, params.t, rows)
        parts = {}
    else:
        phi = exponential_phi(1.0, lam)
        disc, parts = _yu_disc(name, phi, lead, anchor, 1, 1, -params.t, rows)
    target = JetTarget(params.point, params.direction, 1)
    return CatalogDisc(name, disc, "yu_domain", target, t4 / abs(params.a), EXACT, dict(parts, params=params))


def _degenerate_exact_disc(name, lead, t, rows):
    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        return np.stack([lead * z, np.zeros(z.shape, dtype=complex), np.full(z.shape, -t, dtype=complex)], axis=-1)

    taylor = np.zeros((settings.TAYLOR_LENGTH, 3), dtype=complex)
    taylor[:, 0] = rows
    taylor[0, 2] = -t
    return AnalyticDisc(evaluate, 3, taylor=taylor, closed=False, name=name)


def odd_order_lift(f):
    """g = (ζ³f₁, ζ²f₂, f₃): raises the odd order 2n−1 to 2n+1 with the same r.

    ρ∘g = Re f₃ + |ζ|¹²|f₁² − f₂³|² ≤ ρ∘f.
    """
    entry = f if isinstance(f, CatalogDisc) else None
    disc = entry.disc if entry else f

    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        values = disc(z)
        return np.stack([z ** 3 * values[..., 0], z ** 2 * values[..., 1], values[..., 2]], axis=-1)

    source = disc.taylor_coefficients(settings.TAYLOR_LENGTH)
    rows = np.zeros((settings.TAYLOR_LENGTH + 3, 3), dtype=complex)
    rows[3:, 0] = source[:, 0]
    rows[2: settings.TAYLOR_LENGTH + 2, 1] = source[:, 1]
    rows[: settings.TAYLOR_LENGTH, 2] = source[:, 2]
    lifted = AnalyticDisc(evaluate, 3, taylor=rows, closed=disc.closed, name=f"lift({disc.name})")
    if entry is None:
        return lifted
    target = entry.target.with_order(entry.target.k + 2)
    return CatalogDisc(lifted.name, lifted, entry.domain_id, target, entry.r, UPPER, dict(entry.parts, source=entry))


def yu_reference_constants():
    """Reference values at z = (0,0,−1), X = (0,1,0) used as acceptance constants."""
    return {
        "kobayashi_order1": 1.0,
        "order3_cubed_upper": 1.0,
        "optimal_order3_bound": (8.0 * math.pi / (1.0 - math.exp(-2.0 * math.pi))) ** (-1.0 / 3.0),
        "simple_order3_bound": 2.0 ** (-1.0 / 3.0),
    }


def random_exact_params(rng, feasible=True):
    """Seeded (t, a, b) on either side of the feasibility curve."""
    t = float(rng.uniform(0.05, 0.95))
    bound = feasibility_ratio_bound(t)
    ratio = bound * (float(rng.uniform(0.0, 0.95)) if feasible else float(rng.uniform(1.05, 3.0)))
    modulus_a = 1.0 / math.sqrt(1.0 + ratio ** 2)
    phases = rng.uniform(0.0, 2.0 * math.pi, size=2)
    a = modulus_a * np.exp(1j * phases[0])
    b = ratio * modulus_a * np.exp(1j * phases[1])
    return ExactKobayashiParams(t, complex(a), complex(b))
