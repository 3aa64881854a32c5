# src/metrics/closed_forms.py
"""Closed-form pseudometric values and Carathéodory lower bounds."""
import math

import numpy as np

from common.errors import ParameterError, PreconditionError
from metrics.targets import EXACT, LOWER, MetricEstimate


def poincare(zeta, v):
    """|v|/(1 − |ζ|²) on the unit disc."""
    zeta = complex(zeta)
    if abs(zeta) >= 1.0:
        raise ParameterError(f"base point must lie in the unit disc, got |ζ| = {abs(zeta)!r}")
    return abs(complex(v)) / (1.0 - abs(zeta) ** 2)


def punctured_order_k(p, v, k=1):
    """|v|/(−2|p| log|p|), the value for every order k on the punctured disc."""
    p = complex(p)
    if int(k) != k or k < 1:
        raise ParameterError(f"order must be a positive integer, got {k!r}")
    if p == 0 or abs(p) >= 1.0:
        raise ParameterError(f"base point must satisfy 0 < |p| < 1, got {p!r}")
    return abs(complex(v)) / (-2.0 * abs(p) * math.log(abs(p)))


def half_plane(z, v):
    """|v|/(2 Im z) on the upper half-plane."""
    z = complex(z)
    if z.imag <= 0.0:
        raise ParameterError(f"base point must lie in the upper half-plane, got {z!r}")
    return abs(complex(v)) / (2.0 * z.imag)


def exact_kobayashi_lower(t, a):
    """Lower constant |a| t^{−1/4} at z_t = (0, 0, −t)."""
    if not 0.0 < t < 1.0:
        raise ParameterError(f"t must lie in (0, 1), got {t!r}")
    return abs(complex(a)) * t ** -0.25


def caratheodory_lower(domain, target):
    """Carathéodory lower bound where a closed form exists.

    The punctured disc has the Carathéodory metric of the disc (bounded
    functions extend across the puncture).
    """
    p, v = target.p, target.v
    ident = domain.identifier
    if ident == "unit_disc" or ident == "punctured_disc":
        value = poincare(p[0], v[0])
    elif ident == "half_plane":
        value = half_plane(p[0], v[0])
    elif ident == "yu_domain" and p[0] == 0 and p[1] == 0 and p[2].imag == 0 and v[2] == 0:
        direction = np.asarray(v, dtype=complex)
        a = direction[0] / np.linalg.norm(direction)
        value = exact_kobayashi_lower(-p[2].real, a) * float(np.linalg.norm(direction))
    else:
        raise ParameterError(f"no closed-form Carathéodory bound for {ident} at {p!r}")
    return MetricEstimate(value, LOWER, target, ident, residuals={"source": "closed form"})


def exact_estimate(upper, lower, tol=1e-9):
    """Combine matching upper and lower certificates."""
    if upper.target != lower.target or upper.domain_id != lower.domain_id:
        raise PreconditionError("upper and lower certificates refer to different queries")
    gap = abs(upper.value - lower.value)
    if gap > tol * max(1.0, upper.value):
        raise PreconditionError(f"certificates differ by {gap:.3e}, above tolerance {tol:.1e}")
    residuals = dict(upper.residuals, certificate_gap=gap)
    return MetricEstimate(upper.value, EXACT, upper.target, upper.domain_id, upper.witness, residuals,
                          upper.config, upper.seed)
