# src/catalog/planar.py
"""Closed-form extremal discs of the planar model domains.

Unit disc: ζ ↦ B(e^{iθ}ζ^k) with B(w) = (w + p)/(1 + p̄w), exact for every k.

Punctured disc: the extremal factors through the universal covering
π(w) = exp((w + 1)/(w − 1)) of D∖{0}, precomposed with the automorphism
sending 0 to a preimage w₀ of p. The covering disc has an essential
singularity on the circle, so it is dilated to ζ ↦ f(sζ) with s < 1; the
certified value is then the closed form times s^{−k}.
"""
import cmath
import logging

import numpy as np

from catalog.yu import CatalogDisc
from common.errors import ParameterError
from holo.discs import AnalyticDisc
from metrics.targets import EXACT, UPPER, JetTarget

LOGGER = logging.getLogger(__name__)

# default dilation keeps the value within 1% of the closed form
COVERING_SLACK = 0.01


def _order(k):
    if int(k) != k or k < 1:
        raise ParameterError(f"order must be a positive integer, got {k!r}")
    return int(k)


def _unit(v):
    v = complex(v)
    if v == 0:
        raise ParameterError("direction v must be nonzero")
    return v / abs(v)


def _rows(p, lead, k):
    rows = np.zeros((k + 1, 1), dtype=complex)
    rows[0, 0] = p
    rows[k, 0] += lead
    return rows


def disc_extremal(p, v=1.0, k=1):
    """ζ ↦ B(e^{iθ}ζ^k) through p with k-jet along v; r = (1 − |p|²)/|v|."""
    p = complex(p)
    k = _order(k)
    if abs(p) >= 1.0:
        raise ParameterError(f"base point must lie in the unit disc, got |p| = {abs(p)!r}")
    turn = _unit(v)

    def evaluate(zeta):
        w = turn * np.asarray(zeta, dtype=complex) ** k
        return ((w + p) / (1.0 + np.conj(p) * w))[..., None]

    return AnalyticDisc(evaluate, 1, taylor=_rows(p, (1.0 - abs(p) ** 2) * turn, k), closed=True,
                        name=f"disc-extremal:{p!r}")


def covering_preimage(p):
    """w₀ in D with π(w₀) = p."""
    log_p = cmath.log(complex(p))
    return (log_p + 1.0) / (log_p - 1.0)


def covering_disc(p, v=1.0, k=1, s=None):
    """Dilated covering disc ζ ↦ π(φ(e^{iθ}(sζ)^k)) into D∖{0}.

    φ is the automorphism w ↦ (w + w₀)/(1 + w̄₀w). The disc carries its
    logarithm, so containment never samples the underflowing modulus.
    """
    p = complex(p)
    k = _order(k)
    if not 0.0 < abs(p) < 1.0:
        raise ParameterError(f"base point must satisfy 0 < |p| < 1, got {p!r}")
    if s is None:
        s = (1.0 - COVERING_SLACK) ** (1.0 / k)
    s = float(s)
    if not 0.0 < s < 1.0:
        raise ParameterError(f"dilation must lie in (0, 1), got {s!r}")
    w0 = covering_preimage(p)
    lead = p * (-2.0 / (w0 - 1.0) ** 2) * (1.0 - abs(w0) ** 2)
    turn = _unit(v) * abs(lead) / lead

    def logarithm(zeta):
        u = turn * (s * np.asarray(zeta, dtype=complex)) ** k
        w = (u + w0) / (1.0 + np.conj(w0) * u)
        return (w + 1.0) / (w - 1.0)

    def evaluate(zeta):
        return np.exp(logarithm(zeta))[..., None]

    LOGGER.debug("covering disc at p=%r: w0=%r s=%.6g k=%d", p, w0, s, k)
    return AnalyticDisc(evaluate, 1, taylor=_rows(p, abs(lead) * _unit(v) * s ** k, k), closed=True,
                        name=f"covering:{p!r}", logarithm=logarithm)


def planar_witnesses(domain, target):
    """Closed-form discs certifying ``target`` in ``domain``, if any are known."""
    if target.dimension != 1:
        return []
    p, v, k = target.p[0], target.v[0], target.k
    if domain.identifier == "unit_disc" and abs(p) < 1.0:
        return [disc_extremal(p, v, k)]
    if domain.identifier == "punctured_disc" and 0.0 < abs(p) < 1.0:
        return [covering_disc(p, v, k)]
    return []


def covering_entry(name, p, s=None):
    disc = covering_disc(p, 1.0, 1, s)
    rows = disc.taylor_coefficients(2)
    return CatalogDisc(name, disc, "punctured_disc", JetTarget((p,), (1.0,), 1), float(rows[1, 0].real),
                       UPPER, {"p": p, "s": s})


def disc_extremal_entry(name, p):
    disc = disc_extremal(p)
    return CatalogDisc(name, disc, "unit_disc", JetTarget((p,), (1.0,), 1), 1.0 - abs(p) ** 2, EXACT, {"p": p})
