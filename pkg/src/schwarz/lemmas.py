# src/schwarz/lemmas.py
"""Oracles for the higher-order Schwarz, Schwarz–Pick and punctured-disc bounds.

Derivatives are compared in Taylor-coefficient form, c_k = f^{(k)}/k!, so
every bound reads |c_k| ≤ (explicit constant).
"""
import math
from dataclasses import dataclass

import numpy as np

from common import settings
from common.errors import InvalidSampleError
from holo.fourier import cauchy_taylor
from holo.maps import blaschke
from schwarz.samples import pick_equality_map, punctured_equality_map, schwarz_equality_map

STRICT = "strict"
EQUALITY = "equality"
NEAR_EQUALITY = "near_equality_unconfirmed"
HYPOTHESIS_TOL = 1e-8
POINT_RADII = np.linspace(0.05, 0.99, 10)
POINT_ANGLES = 100


@dataclass(frozen=True)
class SchwarzReport:
    lemma: str
    k: int
    center: complex
    coefficient: float
    bound: float
    max_violation: float
    equality_gap: float
    status: str
    theta: float | None = None
    reconstruction_error: float | None = None

    def to_record(self):
        return {
            "lemma": self.lemma,
            "k": self.k,
            "center": [self.center.real, self.center.imag],
            "coefficient": self.coefficient,
            "bound": self.bound,
            "max_violation": self.max_violation,
            "equality_gap": self.equality_gap,
            "status": self.status,
            "theta": self.theta,
            "reconstruction_error": self.reconstruction_error,
        }


def sample_points():
    """1000 points on ten circles inside the disc."""
    angles = 2.0 * np.pi * np.arange(POINT_ANGLES) / POINT_ANGLES
    return (POINT_RADII[:, None] * np.exp(1j * angles)[None, :]).reshape(-1)


def cauchy_radius(center):
    return min(0.3, (1.0 - abs(center)) / 2.0)


def _values(sample, points):
    values = np.asarray(sample(points), dtype=complex)
    if not np.all(np.isfinite(values)) or np.max(np.abs(values)) >= 1.0 - settings.CONTAINMENT_MARGIN:
        raise InvalidSampleError(f"sample is not a self-map of the disc (max |f| = {np.max(np.abs(values))!r})")
    return values


def _coefficients(sample, center, k):
    return cauchy_taylor(sample, center, cauchy_radius(center), settings.CAUCHY_NODES, k + 1)


def _require_vanishing(coeffs, first, k, lemma):
    if k > first and np.max(np.abs(coeffs[first:k])) > HYPOTHESIS_TOL:
        raise InvalidSampleError(f"{lemma}: derivatives of order {first}..{k - 1} do not vanish "
                                 f"(max coefficient {np.max(np.abs(coeffs[first:k])):.3e})")


def _classify(gap, reconstruct, points, values):
    if abs(gap) > settings.EQUALITY_DETECT:
        return STRICT, None
    error = float(np.max(np.abs(values - reconstruct(points))))
    return (EQUALITY if error <= settings.EQUALITY_CONFIRM else NEAR_EQUALITY), error


def check_higher_schwarz(sample, k):
    """|f(ζ)| ≤ |ζ|^k and |f^{(k)}(0)| ≤ k! for f vanishing to order k at 0."""
    points = sample_points()
    values = _values(sample, points)
    coeffs = _coefficients(sample, 0j, k)
    _require_vanishing(coeffs, 0, k, "higher Schwarz")
    ck = complex(coeffs[k])
    pointwise = float(np.max(np.abs(values) - np.abs(points) ** k))
    violation = max(0.0, pointwise, abs(ck) - 1.0)
    gap = 1.0 - abs(ck)
    theta = math.atan2(ck.imag, ck.real)
    status, error = _classify(gap, schwarz_equality_map(k, theta), points, values)
    return SchwarzReport("basic", k, 0j, abs(ck), 1.0, violation, gap, status,
                         theta if status != STRICT else None, error)


def check_schwarz_pick_higher(sample, center, k):
    """|f^{(k)}(ζ₀)| ≤ k!(1 − |f(ζ₀)|²)/(1 − |ζ₀|²)^k and the invariant quotient bound."""
    center = complex(center)
    points = sample_points()
    values = _values(sample, points)
    coeffs = _coefficients(sample, center, k)
    _require_vanishing(coeffs, 1, k, "Schwarz–Pick")
    b = complex(coeffs[0])
    ck = complex(coeffs[k])
    bound = (1.0 - abs(b) ** 2) / (1.0 - abs(center) ** 2) ** k
    quotient = np.abs((b - values) / (1.0 - np.conj(b) * values))
    invariant = float(np.max(quotient - np.abs(blaschke(center, points)) ** k))
    violation = max(0.0, invariant, abs(ck) / bound - 1.0)
    gap = 1.0 - abs(ck) / bound
    phase = ck / bound
    theta = math.atan2(phase.imag, phase.real)
    status, error = _classify(gap, pick_equality_map(center, k, theta, b), points, values)
    return SchwarzReport("pick", k, center, abs(ck), bound, violation, gap, status,
                         theta if status != STRICT else None, error)


def check_punctured(sample, k):
    """|f^{(k)}(0)| ≤ −2k!|f(0)| log|f(0)| for f into the punctured disc."""
    points = sample_points()
    values = _values(sample, points)
    if np.min(np.abs(values)) == 0.0:
        raise InvalidSampleError("sample vanishes on the test grid")
    coeffs = _coefficients(sample, 0j, k)
    _require_vanishing(coeffs, 1, k, "punctured Schwarz")
    c0 = complex(coeffs[0])
    if abs(c0) < HYPOTHESIS_TOL:
        raise InvalidSampleError(f"sample vanishes at 0 (|f(0)| = {abs(c0):.3e})")
    ck = complex(coeffs[k])
    log_modulus = math.log(abs(c0))
    bound = -2.0 * abs(c0) * log_modulus
    violation = max(0.0, abs(ck) - bound)
    gap = bound - abs(ck)
    phase = ck / (2.0 * log_modulus * c0)
    theta = math.atan2(phase.imag, phase.real)
    status, error = _classify(gap, punctured_equality_map(k, theta, c0), points, values)
    return SchwarzReport("punctured", k, 0j, abs(ck), bound, violation, gap, status,
                         theta if status != STRICT else None, error)


def check_composition_bound(disc, self_map, k):
    """|(g∘f)^{(k)}(0)| ≤ k! when g(f(0)) = 0 and ν(f − f(0)) ≥ k."""
    points = sample_points()
    inner = _values(disc, points)
    _values(self_map, inner)
    coeffs = _coefficients(disc, 0j, k)
    _require_vanishing(coeffs, 1, k, "composition")
    if abs(self_map(np.asarray([coeffs[0]]))[0]) > HYPOTHESIS_TOL:
        raise InvalidSampleError("outer map does not vanish at f(0)")
    composed = _coefficients(lambda z: self_map(disc(z)), 0j, k)
    ck = complex(composed[k])
    return SchwarzReport("composition", k, 0j, abs(ck), 1.0, max(0.0, abs(ck) - 1.0), 1.0 - abs(ck), STRICT)
