# src/catalog/ellipsoid.py
"""Extremal map families of the complex ellipsoid E(1, m) = {|z₁|² + |z₂|^{2m} < 1}.

The second component carries the power 1/m of its linear-fractional factor.
With that exponent |φ₁|² + |φ₂|^{2m} equals 1 on the circle exactly when

    |a₁|²|1 − ᾱ₁ζ|² + |a₂|^{2m}|1 − ᾱ₂ζ|² = |1 − ᾱ₀ζ|²,

which is what the two scalar constraints (and, in product form, the
polynomial identity) express.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from common.errors import ParameterError, PoleError
from holo.discs import AnalyticDisc
from holo.roots import zero_free_power

LOGGER = logging.getLogger(__name__)

CONSTRAINT_TOL = 1e-10
IDENTITY_TOL = 1e-10
POWER_STEPS = 64
SAMPLE_RADIUS = 0.9
MAX_ALPHA0 = 0.95


def _check_m(m):
    if not 0.0 < m < 1.0:
        raise ParameterError(f"ellipsoid exponent must lie in (0, 1), got {m!r}")


def _check_alpha(alpha, r, label):
    if abs(alpha) > 1.0:
        raise ParameterError(f"{label} = {alpha!r} lies outside the closed disc")
    if r not in (0, 1):
        raise ParameterError(f"exponent for {label} must be 0 or 1, got {r!r}")
    if r == 1 and abs(alpha) >= 1.0:
        raise ParameterError(f"{label} must lie in the open disc when its Blaschke factor is present")


@dataclass(frozen=True)
class EllipsoidKind1Params:
    a1: complex
    a2: complex
    alpha0: complex
    alpha1: complex
    alpha2: complex
    r1: int
    r2: int
    m: float

    def __post_init__(self):
        _check_m(self.m)
        if self.a1 == 0 or self.a2 == 0:
            raise ParameterError("a1 and a2 must be nonzero")
        if abs(self.alpha0) >= 1.0:
            raise ParameterError(f"alpha0 = {self.alpha0!r} must lie in the open disc")
        _check_alpha(self.alpha1, self.r1, "alpha1")
        _check_alpha(self.alpha2, self.r2, "alpha2")
        first, second = self.constraint_residuals()
        if first > CONSTRAINT_TOL or second > CONSTRAINT_TOL:
            raise ParameterError(f"kind-1 constraints violated: residuals {first:.3e}, {second:.3e}")

    @property
    def weights(self):
        """(|a₁|², |a₂|^{2m})."""
        return abs(self.a1) ** 2, abs(self.a2) ** (2.0 * self.m)

    def constraint_residuals(self):
        w1, w2 = self.weights
        first = abs(self.alpha0 - (w1 * self.alpha1 + w2 * self.alpha2))
        second = abs(1.0 + abs(self.alpha0) ** 2 - (w1 * (1.0 + abs(self.alpha1) ** 2) + w2 * (1.0 + abs(self.alpha2) ** 2)))
        return first, second


@dataclass(frozen=True)
class EllipsoidKind2Params:
    a1: complex
    a2: complex
    alphas: np.ndarray
    rs: np.ndarray
    m: float

    def __post_init__(self):
        _check_m(self.m)
        if self.a1 == 0 or self.a2 == 0:
            raise ParameterError("a1 and a2 must be nonzero")
        alphas = np.asarray(self.alphas, dtype=complex)
        rs = np.asarray(self.rs, dtype=int)
        if alphas.ndim != 2 or alphas.shape[1] != 3 or rs.shape != alphas.shape:
            raise ParameterError(f"alphas and rs must be (k, 3) arrays, got {alphas.shape} and {rs.shape}")
        for (l, j), alpha in np.ndenumerate(alphas):
            _check_alpha(alpha, int(rs[l, j]) if j else 0, f"alpha[{l + 1},{j}]")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "rs", rs)
        residual = kind2_identity_residual(self)
        if residual > IDENTITY_TOL:
            raise ParameterError(f"kind-2 polynomial identity fails, coefficient residual {residual:.3e}")

    @property
    def k(self):
        return self.alphas.shape[0]


# --- Polynomial identity ---

def _factor(alpha):
    """(ζ − α)(1 − ᾱζ) in ascending coefficients."""
    return np.array([-alpha, 1.0 + abs(alpha) ** 2, -np.conj(alpha)], dtype=complex)


def _product(alphas):
    poly = np.array([1.0], dtype=complex)
    for alpha in alphas:
        poly = P.polymul(poly, _factor(alpha))
    return poly


def kind2_identity_residual(params):
    """Max coefficient gap of |a₁|²P₁ + |a₂|^{2m}P₂ − P₀."""
    w1 = abs(params.a1) ** 2
    w2 = abs(params.a2) ** (2.0 * params.m)
    lhs = P.polyadd(w1 * _product(params.alphas[:, 1]), w2 * _product(params.alphas[:, 2]))
    gap = P.polysub(lhs, _product(params.alphas[:, 0]))
    return float(np.max(np.abs(gap)))


# --- Maps ---

def _linear_part(alpha, r, z):
    """B^r_α(ζ)·(1 − ᾱζ): ζ − α when r = 1, 1 − ᾱζ otherwise."""
    return z - alpha if r == 1 else 1.0 - np.conj(alpha) * z


def _blaschke_part(alpha, r, z):
    return (z - alpha) / (1.0 - np.conj(alpha) * z) if r == 1 else np.ones(z.shape, dtype=complex)


def _product_map(a1, a2, alphas, rs, m, name):
    alphas = np.atleast_2d(alphas)
    rs = np.atleast_2d(rs)

    def ratio(zeta):
        z = np.asarray(zeta, dtype=complex)
        value = np.ones(z.shape, dtype=complex)
        for alpha0, alpha2 in zip(alphas[:, 0], alphas[:, 2]):
            value = value * (1.0 - np.conj(alpha2) * z) / (1.0 - np.conj(alpha0) * z)
        return value

    power = zero_free_power(ratio, 1.0 / m, steps=POWER_STEPS)

    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        first = np.full(z.shape, a1, dtype=complex)
        second = np.full(z.shape, a2, dtype=complex)
        for (alpha0, alpha1, alpha2), (_, r1, r2) in zip(alphas, rs):
            first = first * _linear_part(alpha1, r1, z) / (1.0 - np.conj(alpha0) * z)
            second = second * _blaschke_part(alpha2, r2, z)
        return np.stack([first, second * power(z)], axis=-1)

    closed = bool(np.all(np.abs(alphas[:, 1:]) < 1.0))
    return AnalyticDisc(evaluate, 2, closed=closed, name=name)


def ellipsoid_kind1(params):
    """(a₁B^{r₁}_{α₁}(1−ᾱ₁ζ)/(1−ᾱ₀ζ), a₂B^{r₂}_{α₂}((1−ᾱ₂ζ)/(1−ᾱ₀ζ))^{1/m})."""
    alphas = np.array([[params.alpha0, params.alpha1, params.alpha2]], dtype=complex)
    rs = np.array([[0, params.r1, params.r2]])
    return _product_map(params.a1, params.a2, alphas, rs, params.m, f"ellipsoid-k1(m={params.m!r})")


def ellipsoid_kind2(params):
    return _product_map(params.a1, params.a2, params.alphas, params.rs, params.m,
                        f"ellipsoid-k2(k={params.k}, m={params.m!r})")


def kth_roots(alpha, k):
    """The k distinct k-th roots of α, ordered by principal argument."""
    if alpha == 0:
        return np.zeros(k, dtype=complex)
    roots = abs(alpha) ** (1.0 / k) * np.exp(1j * (np.angle(alpha) + 2.0 * np.pi * np.arange(k)) / k)
    return roots[np.argsort(np.angle(roots), kind="stable")]


def lift_kind1(params, k):
    """Kind-2 parameters of ζ ↦ φ(ζ^k) built from the k-th roots of each α_j."""
    if int(k) != k or k < 1:
        raise ParameterError(f"lift order must be a positive integer, got {k!r}")
    k = int(k)
    columns = [kth_roots(complex(alpha), k) for alpha in (params.alpha0, params.alpha1, params.alpha2)]
    alphas = np.stack(columns, axis=1)
    rs = np.tile(np.array([0, params.r1, params.r2]), (k, 1))
    return EllipsoidKind2Params(params.a1, params.a2, alphas, rs, params.m)


def perturbed_kind1_disc(params):
    """Kind-1 map with B^{r₁}_{α₁} replaced by ζ²; still attached, not stationary."""
    base = ellipsoid_kind1(params)

    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        values = base(z)
        first = params.a1 * z ** 2 * (1.0 - np.conj(params.alpha1) * z) / (1.0 - np.conj(params.alpha0) * z)
        return np.stack([first, values[..., 1]], axis=-1)

    return AnalyticDisc(evaluate, 2, closed=base.closed, name=f"perturbed-{base.name}")


def ellipsoid_automorphism(a, theta, z, m):
    """F_{a,θ}(z) = ((z₁ − a)/(1 − āz₁), e^{iθ}(1 − |a|²)^{1/(2m)} z₂ (1 − āz₁)^{−1/m})."""
    _check_m(m)
    a = complex(a)
    if abs(a) >= 1.0:
        raise ParameterError(f"automorphism parameter must lie in the unit disc, got |a| = {abs(a)!r}")
    z = np.asarray(z, dtype=complex)
    z1, z2 = z[..., 0], z[..., 1]
    denominator = 1.0 - np.conj(a) * z1
    if np.any(denominator == 0):
        raise PoleError(f"automorphism F_a has a pole at z1 = 1/conj(a) = {1.0 / np.conj(a)!r}")
    scale = np.exp(1j * theta) * (1.0 - abs(a) ** 2) ** (1.0 / (2.0 * m))
    second = scale * z2 * np.exp(-np.log(denominator) / m)
    return np.stack([(z1 - a) / denominator, second], axis=-1)


def unit_disc_automorphism_disc(a):
    """B_a as a one-dimensional boundary-attached disc."""
    a = complex(a)
    if abs(a) >= 1.0:
        raise ParameterError(f"Blaschke parameter must lie in the unit disc, got |a| = {abs(a)!r}")

    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        return ((z - a) / (1.0 - np.conj(a) * z))[..., None]

    return AnalyticDisc(evaluate, 1, closed=True, name=f"blaschke:{a!r}")


# --- Parameter generators ---

def centered_kind1_params(m, a1=math.sqrt(0.5)):
    """All α = 0, r₁ = r₂ = 1: the geodesic (a₁ζ, a₂ζ) through the origin."""
    _check_m(m)
    w2 = 1.0 - abs(a1) ** 2
    if w2 <= 0.0:
        raise ParameterError(f"|a1| must be below 1, got {abs(a1)!r}")
    a2 = w2 ** (1.0 / (2.0 * m))
    return EllipsoidKind1Params(complex(a1), complex(a2), 0j, 0j, 0j, 1, 1, m)


def _disc_point(rng, radius):
    return complex(radius * math.sqrt(rng.uniform()) * np.exp(2j * math.pi * rng.uniform()))


def solve_first_weight(alpha1, alpha2, w2):
    """Positive |a₁|² solving the constraints for given α₁, α₂ and |a₂|^{2m}."""
    quad = abs(alpha1) ** 2
    lin = 2.0 * w2 * (alpha1 * np.conj(alpha2)).real - 1.0 - quad
    const = (1.0 - w2) * (1.0 - w2 * abs(alpha2) ** 2)
    if quad < 1e-14:
        return [-const / lin] if lin != 0 else []
    disc = lin * lin - 4.0 * quad * const
    if disc < 0.0:
        return []
    root = math.sqrt(disc)
    return sorted(x for x in ((-lin - root) / (2.0 * quad), (-lin + root) / (2.0 * quad)) if x > 0.0)


def random_kind1_params(rng, m, radius=SAMPLE_RADIUS, max_alpha0=MAX_ALPHA0, attempts=1000):
    """Seeded feasible kind-1 parameters by rejection sampling.

    Samples α₁, α₂, |a₂|^{2m} and the phases, solves the scalar constraints
    for |a₁|² and α₀, and retries until α₀ lands well inside the disc.
    """
    _check_m(m)
    for _ in range(attempts):
        alpha1 = _disc_point(rng, radius)
        alpha2 = _disc_point(rng, radius)
        w2 = float(rng.uniform(0.05, 0.95))
        phases = rng.uniform(0.0, 2.0 * math.pi, size=2)
        r1, r2 = (int(x) for x in rng.integers(0, 2, size=2))
        for w1 in solve_first_weight(alpha1, alpha2, w2):
            alpha0 = w1 * alpha1 + w2 * alpha2
            if abs(alpha0) < max_alpha0:
                a1 = math.sqrt(w1) * np.exp(1j * phases[0])
                a2 = w2 ** (1.0 / (2.0 * m)) * np.exp(1j * phases[1])
                return EllipsoidKind1Params(complex(a1), complex(a2), complex(alpha0), alpha1, alpha2, r1, r2, m)
    raise ParameterError(f"no feasible kind-1 parameters found in {attempts} attempts for m = {m!r}")
