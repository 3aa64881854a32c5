# src/schwarz/samples.py
import math
from dataclasses import dataclass, field

import numpy as np

from common.errors import ParameterError
from holo.fourier import lattice
from holo.maps import blaschke

KINDS = ("blaschke", "polynomial", "punctured")
ZERO_RADIUS = 0.95
VALUE_RADIUS = 0.8
NORM_NODES = 1024


@dataclass(frozen=True)
class SelfMapProfile:
    kind: str = "blaschke"
    k: int = 1
    factor_count: int = 2
    rotate: bool = True
    center: complex = 0j

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"profile kind must be one of {KINDS}, got {self.kind!r}")
        if int(self.k) != self.k or self.k < 1:
            raise ParameterError(f"vanishing order must be a positive integer, got {self.k!r}")
        if self.factor_count < 0:
            raise ParameterError(f"factor count must be nonnegative, got {self.factor_count!r}")
        if abs(self.center) >= 1.0:
            raise ParameterError(f"center must lie in the unit disc, got {self.center!r}")


@dataclass
class SelfMapSample:
    """Holomorphic self-map of the disc with prescribed vanishing at ``center``."""

    kind: str
    seed: int | None
    k: int
    evaluate: object
    center: complex = 0j
    params: dict = field(default_factory=dict)

    def __call__(self, zeta):
        return self.evaluate(np.asarray(zeta, dtype=complex))


def _disc_points(rng, count, radius):
    return radius * np.sqrt(rng.uniform(size=count)) * np.exp(2j * np.pi * rng.uniform(size=count))


def blaschke_product(zeros, phase=0.0):
    zeros = [complex(a) for a in zeros]

    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        value = np.full(z.shape, np.exp(1j * phase), dtype=complex)
        for a in zeros:
            value = value * blaschke(a, z)
        return value

    return evaluate


def _conjugate(inner, center, value):
    """w ↦ B_{−b}(inner(B_{ζ₀}(w))), so that ζ₀ ↦ b with the vanishing of ``inner`` at 0."""
    def evaluate(zeta):
        return blaschke(-value, inner(blaschke(center, np.asarray(zeta, dtype=complex))))
    return evaluate


def sample_self_map(seed, profile):
    """Deterministic sample for ``seed``; vanishing of order k at the profile center."""
    rng = np.random.default_rng(seed)
    k = profile.k
    params = {"k": k}
    if profile.kind == "punctured":
        sigma = float(rng.uniform(0.2, 3.0))
        shrink = float(rng.uniform(0.05, 0.9))
        alpha = float(rng.uniform(0.0, 2.0 * math.pi))
        zeros = _disc_points(rng, profile.factor_count, ZERO_RADIUS)
        phase = float(rng.uniform(0.0, 2.0 * math.pi)) if profile.rotate else 0.0
        inner = blaschke_product(zeros, phase)
        params.update(sigma=sigma, shrink=shrink, alpha=alpha, zeros=zeros.tolist(), phase=phase)

        def evaluate(zeta):
            w = shrink * zeta ** k * inner(zeta)
            return np.exp(1j * alpha) * np.exp(-sigma * (1.0 + w) / (1.0 - w))

        return SelfMapSample("punctured", seed, k, evaluate, 0j, params)
    if profile.kind == "blaschke":
        zeros = _disc_points(rng, profile.factor_count, ZERO_RADIUS)
        phase = float(rng.uniform(0.0, 2.0 * math.pi)) if profile.rotate else 0.0
        product = blaschke_product(zeros, phase)
        params.update(zeros=zeros.tolist(), phase=phase)

        def inner(zeta):
            return zeta ** k * product(zeta)
    else:
        coeffs = rng.standard_normal(profile.factor_count + 1) + 1j * rng.standard_normal(profile.factor_count + 1)
        norm = float(np.max(np.abs(np.polynomial.polynomial.polyval(lattice(NORM_NODES), coeffs))))
        params.update(coefficients=coeffs.tolist(), norm=norm)

        def inner(zeta):
            return zeta ** k * np.polynomial.polynomial.polyval(zeta, coeffs) / (1.0 + norm)
    center = complex(profile.center)
    if center == 0:
        return SelfMapSample(profile.kind, seed, k, inner, 0j, params)
    value = complex(_disc_points(rng, 1, VALUE_RADIUS)[0])
    params.update(value=value)
    return SelfMapSample(profile.kind, seed, k, _conjugate(inner, center, value), center, params)


def sample_composition_pair(seed, k, factor_count=2):
    """(f, g) with ν(f − f(0)) ≥ k and g(f(0)) = 0, both self-maps of the disc."""
    rng = np.random.default_rng(seed)
    value = complex(_disc_points(rng, 1, VALUE_RADIUS)[0])
    inner = blaschke_product(_disc_points(rng, factor_count, ZERO_RADIUS), float(rng.uniform(0.0, 2.0 * math.pi)))
    disc = SelfMapSample("blaschke", seed, k, _conjugate(lambda z: z ** k * inner(z), 0j, value), 0j,
                         {"value": value})
    outer_zeros = np.concatenate(([value], _disc_points(rng, factor_count, ZERO_RADIUS)))
    outer = SelfMapSample("blaschke", seed, 1, blaschke_product(outer_zeros, float(rng.uniform(0.0, 2.0 * math.pi))),
                          value, {"zeros": outer_zeros.tolist()})
    return disc, outer


# --- Equality witnesses ---

def schwarz_equality_map(k, theta=0.0):
    """e^{iθ} ζ^k."""
    return SelfMapSample("equality", None, k, lambda z: np.exp(1j * theta) * z ** k, 0j, {"theta": theta})


def pick_equality_map(center, k, theta, value):
    """B_{−b}(e^{iθ} B_{ζ₀}^k) with b = f(ζ₀)."""
    center, value = complex(center), complex(value)

    def rotated_power(w):
        return np.exp(1j * theta) * w ** k

    return SelfMapSample("equality", None, k, _conjugate(rotated_power, center, value), center,
                         {"theta": theta, "value": value})


def punctured_equality_map(k, theta, c):
    """e^{iα} exp(log|c| (1 + e^{iθ}ζ^k)/(1 − e^{iθ}ζ^k)) with α = arg c."""
    c = complex(c)
    if not 0.0 < abs(c) < 1.0:
        raise ParameterError(f"base value must satisfy 0 < |c| < 1, got {c!r}")
    log_modulus = math.log(abs(c))
    alpha = math.atan2(c.imag, c.real)

    def evaluate(zeta):
        w = np.exp(1j * theta) * zeta ** k
        return np.exp(1j * alpha) * np.exp(log_modulus * (1.0 + w) / (1.0 - w))

    return SelfMapSample("equality", None, k, evaluate, 0j, {"theta": theta, "value": c})
