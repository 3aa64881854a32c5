# src/holo/maps.py
import numpy as np

from common.errors import ParameterError, PoleError

EXPREL_CUTOFF = 1e-8


def _result(value):
    return complex(value) if np.ndim(value) == 0 else value


def blaschke(a, zeta):
    """Disc automorphism B_a(ζ) = (ζ − a)/(1 − ā ζ)."""
    a = complex(a)
    if abs(a) >= 1.0:
        raise ParameterError(f"Blaschke parameter must lie in the unit disc, got |a| = {abs(a)!r}")
    z = np.asarray(zeta, dtype=complex)
    return _result((z - a) / (1.0 - np.conj(a) * z))


def blaschke_power(a, zeta, r):
    """B_a^r for r in {0, 1}."""
    if r == 0:
        z = np.asarray(zeta, dtype=complex)
        return _result(np.ones(z.shape, dtype=complex))
    if r != 1:
        raise ParameterError(f"Blaschke exponent must be 0 or 1, got {r!r}")
    return blaschke(a, zeta)


def cayley(zeta):
    """Upper half-plane to unit disc, (ζ − i)/(ζ + i)."""
    z = np.asarray(zeta, dtype=complex)
    if np.any(z == -1j):
        raise PoleError("Cayley transform has a pole at ζ = -i")
    return _result((z - 1j) / (z + 1j))


def inverse_cayley(w):
    w = np.asarray(w, dtype=complex)
    if np.any(w == 1.0):
        raise PoleError("inverse Cayley transform has a pole at w = 1")
    return _result(1j * (1.0 + w) / (1.0 - w))


def exprel(z):
    """(e^z − 1)/z, continued by 1 at z = 0."""
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < EXPREL_CUTOFF
    safe = np.where(small, 1.0, z)
    value = np.where(small, 1.0 + z / 2.0, np.expm1(safe) / safe)
    return _result(value)
