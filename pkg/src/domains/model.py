# src/domains/model.py
"""Model domains {ρ < 0} with their complex gradients ∂ρ = (∂ρ/∂z_j)_j.

Points are arrays whose last axis holds the n coordinates; every method is
vectorised over the leading axes.
"""
import numpy as np

from common.errors import DimensionError, ParameterError, SingularityError


class ModelDomain:
    identifier = "domain"
    dimension = 1
    nonconvex = False

    def _points(self, z):
        z = np.asarray(z, dtype=complex)
        if z.ndim == 0 or z.shape[-1] != self.dimension:
            raise DimensionError(f"{self.identifier} expects points in C^{self.dimension}, got shape {z.shape}")
        return z

    def rho(self, z):
        return self._rho(self._points(z))

    def grad_rho(self, z):
        return self._grad(self._points(z))

    def singular_mask(self, z, tol=0.0):
        """Points where ∂ρ is not defined."""
        z = self._points(z)
        return np.zeros(z.shape[:-1], dtype=bool)

    def excluded_modulus(self, z):
        """Distance-like quantity to an excluded set inside {ρ < 0}, if any."""
        return None

    def is_interior(self, z):
        inside = self.rho(z) < 0.0
        modulus = self.excluded_modulus(z)
        if modulus is not None:
            inside = inside & (modulus > 0.0)
        return inside

    def __repr__(self):
        return f"{type(self).__name__}({self.identifier!r})"

    def _rho(self, z):
        raise NotImplementedError

    def _grad(self, z):
        raise NotImplementedError


class UnitDisc(ModelDomain):
    identifier = "unit_disc"

    def _rho(self, z):
        return np.abs(z[..., 0]) ** 2 - 1.0

    def _grad(self, z):
        return np.conj(z)


class PuncturedDisc(UnitDisc):
    identifier = "punctured_disc"

    def excluded_modulus(self, z):
        return np.abs(self._points(z)[..., 0])


class HalfPlane(ModelDomain):
    """Upper half-plane Im z > 0, the source of the Cayley transform."""

    identifier = "half_plane"

    def _rho(self, z):
        return -z[..., 0].imag

    def _grad(self, z):
        return np.full(z.shape, 0.5j, dtype=complex)


class Polydisc(ModelDomain):
    def __init__(self, dimension=2):
        if dimension < 1:
            raise ParameterError(f"polydisc dimension must be positive, got {dimension}")
        self.dimension = int(dimension)

    @property
    def identifier(self):
        return "polydisc" if self.dimension == 2 else f"polydisc:{self.dimension}"

    def _rho(self, z):
        return np.max(np.abs(z) ** 2, axis=-1) - 1.0

    def _grad(self, z):
        # gradient of the active coordinate; ties resolve to the first index
        active = np.argmax(np.abs(z) ** 2, axis=-1)
        grad = np.zeros(z.shape, dtype=complex)
        np.put_along_axis(grad, active[..., None], np.take_along_axis(np.conj(z), active[..., None], axis=-1), axis=-1)
        return grad


class YuDomain(ModelDomain):
    """ρ = Re z₃ + |z₁² − z₂³|²."""

    identifier = "yu_domain"
    dimension = 3

    @staticmethod
    def defect(z):
        return z[..., 0] ** 2 - z[..., 1] ** 3

    def _rho(self, z):
        return z[..., 2].real + np.abs(self.defect(z)) ** 2

    def _grad(self, z):
        w_bar = np.conj(self.defect(z))
        return np.stack([2.0 * z[..., 0] * w_bar, -3.0 * z[..., 1] ** 2 * w_bar,
                         np.full(z.shape[:-1], 0.5, dtype=complex)], axis=-1)


class Ellipsoid(ModelDomain):
    """E(1, m) = {|z₁|² + |z₂|^{2m} < 1} for m in (0, 1)."""

    dimension = 2

    def __init__(self, m):
        m = float(m)
        if not 0.0 < m < 1.0:
            raise ParameterError(f"ellipsoid exponent must lie in (0, 1), got {m!r}")
        self.m = m

    @property
    def identifier(self):
        return f"ellipsoid:{self.m!r}"

    @property
    def nonconvex(self):
        return self.m < 0.5

    def _rho(self, z):
        return np.abs(z[..., 0]) ** 2 + np.abs(z[..., 1]) ** (2.0 * self.m) - 1.0

    def singular_mask(self, z, tol=0.0):
        z = self._points(z)
        return np.abs(z[..., 1]) <= tol

    def _grad(self, z):
        modulus = np.abs(z[..., 1])
        if np.any(modulus == 0.0):
            raise SingularityError(f"∂ρ of ellipsoid:{self.m!r} is singular where z2 = 0")
        second = self.m * modulus ** (2.0 * self.m - 2.0) * np.conj(z[..., 1])
        return np.stack([np.conj(z[..., 0]), second], axis=-1)
