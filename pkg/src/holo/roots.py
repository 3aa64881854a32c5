# src/holo/roots.py
"""Branches of log, q-th roots and real powers of zero-free holomorphic maps.

The logarithm is continued along the ray [0, ζ]: with radial nodes
0 = t_0 < ... < t_S = 1 the increment log f(ζ) − log f(0) is the sum of the
principal logarithms of f(t_{j+1} ζ)/f(t_j ζ). This is the integral of f'/f
along the radius and never crosses a branch cut as long as each step turns
the argument by less than π.
"""
import logging

import numpy as np

from common import settings
from common.errors import AnchorError, BranchError, ParameterError

LOGGER = logging.getLogger(__name__)

MAX_STEP_ARGUMENT = 2.5


def radial_nodes(steps):
    """Nodes on [0, 1], clustered toward the circle where zeros may lurk."""
    s = np.linspace(0.0, 1.0, steps + 1)
    return 1.0 - (1.0 - s) ** 2


def _as_array(f, zeta):
    return np.asarray(f(zeta), dtype=complex)


def log_increment(f, zeta, steps=settings.RADIAL_STEPS, threshold=settings.ZERO_THRESHOLD):
    """log f(ζ) − log f(0) along radii, for scalar or array ζ."""
    z = np.asarray(zeta, dtype=complex)
    flat = z.reshape(-1)
    total = np.zeros(flat.shape, dtype=complex)
    previous = _as_array(f, np.zeros(flat.shape, dtype=complex))
    scale = max(1.0, float(np.max(np.abs(previous)))) if previous.size else 1.0
    if previous.size and np.min(np.abs(previous)) < threshold * scale:
        raise BranchError("function vanishes at the origin, no logarithm")
    for t in radial_nodes(steps)[1:]:
        current = _as_array(f, t * flat)
        if current.size and np.min(np.abs(current)) < threshold * scale:
            worst = flat[np.argmin(np.abs(current))]
            raise BranchError(f"function nearly vanishes on the ray to {worst:.6g} (|f| < {threshold * scale:.1e})")
        step = np.log(current / previous)
        if step.size and np.max(np.abs(step.imag)) > MAX_STEP_ARGUMENT:
            raise BranchError(f"argument jumps by more than {MAX_STEP_ARGUMENT} rad per radial step; raise steps above {steps}")
        total += step
        previous = current
    return total.reshape(z.shape)


def holomorphic_log(f, zeta, steps=settings.RADIAL_STEPS):
    """Branch of log f anchored at the principal value Log f(0)."""
    base = complex(np.asarray(f(np.zeros(1, dtype=complex)), dtype=complex)[0])
    return np.log(base) + log_increment(f, zeta, steps)


class ZeroFreeRoot:
    """Evaluator of a q-th root (or real power) of a zero-free map."""

    def __init__(self, base, exponent, anchor, steps=settings.RADIAL_STEPS):
        self.base = base
        self.exponent = exponent
        self.anchor = complex(anchor)
        self.steps = steps

    def __call__(self, zeta):
        z = np.asarray(zeta, dtype=complex)
        value = self.anchor * np.exp(self.exponent * log_increment(self.base, z, self.steps))
        if value.ndim == 0:
            return complex(value)
        return value

    def __repr__(self):
        return f"ZeroFreeRoot(exponent={self.exponent!r}, anchor={self.anchor!r})"


def _value_at_zero(f):
    return complex(np.asarray(f(np.zeros(1, dtype=complex)), dtype=complex)[0])


def zero_free_root(f, q, anchor=None, steps=settings.RADIAL_STEPS):
    """g with g**q == f and g(0) == anchor.

    Without an anchor the principal root of f(0) is used, which is the
    positive real root whenever f(0) > 0.
    """
    if int(q) != q or q < 1:
        raise ParameterError(f"root order must be a positive integer, got {q!r}")
    q = int(q)
    f0 = _value_at_zero(f)
    if anchor is None:
        anchor = f0 ** (1.0 / q) if f0 != 0 else 0.0
    anchor = complex(anchor)
    if abs(anchor ** q - f0) > settings.ANCHOR_RTOL * max(1.0, abs(f0)):
        raise AnchorError(f"anchor {anchor!r} is not a {q}-th root of f(0) = {f0!r}")
    LOGGER.debug("root of order %d anchored at %r", q, anchor)
    return ZeroFreeRoot(f, 1.0 / q, anchor, steps)


def zero_free_power(f, exponent, steps=settings.RADIAL_STEPS):
    """f**exponent for real exponent, principal determination at ζ = 0."""
    f0 = _value_at_zero(f)
    if f0 == 0:
        raise BranchError("cannot take a fractional power of a map vanishing at 0")
    anchor = np.exp(exponent * np.log(f0))
    return ZeroFreeRoot(f, float(exponent), anchor, steps)
