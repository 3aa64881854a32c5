# src/metrics/search.py
"""Upper bounds for K^k by optimizing polynomial discs.

Search family: f(ζ) = p + ζ^k (r v + Σ_{j=1..N} c_j ζ^j) with r > 0 and
c_j ∈ C^n. Each restart runs staged Nelder–Mead on the penalised objective

    −r + W_s · max(0, G + margin)²,

G being the worst constraint value on a coarse boundary lattice. Stage s
multiplies W by ``penalty_growth`` and opens coefficients up to degree
ceil(N(s+1)/stages). The staged optimum is certified on the full ladder and,
if needed, repaired by shrinking f − p toward p. Where the domain has a
closed-form extremal (unit disc, punctured disc) it competes as an incumbent.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import minimize

from catalog.planar import planar_witnesses
from common import settings
from common.errors import DimensionError, PreconditionError, SearchFailureError
from domains.containment import CONTAINED, GridConfig, contains_disc, lattice_violation
from holo.discs import AnalyticDisc, SeriesDisc, compose_power
from holo.fourier import lattice
from metrics.targets import UPPER, MetricEstimate, verify_jet

LOGGER = logging.getLogger(__name__)

BISECTION_STEPS = 50
MAX_SCALE = 2.0 ** 20
COEFFICIENT_TOL = 1e-12


@dataclass(frozen=True)
class SearchConfig:
    degree: int = settings.SEARCH_DEGREE
    restarts: int = settings.SEARCH_RESTARTS
    stages: int = settings.SEARCH_STAGES
    seed: int = 0
    grid: GridConfig = field(default_factory=GridConfig)
    nodes: int = settings.SEARCH_NODES
    stage_evaluations: int = settings.SEARCH_STAGE_EVALUATIONS
    penalty_start: float = 10.0
    penalty_growth: float = 10.0
    perturbation: float = 0.05
    closed_forms: bool = True

    def to_record(self):
        return {
            "degree": self.degree,
            "restarts": self.restarts,
            "stages": self.stages,
            "seed": self.seed,
            "grid_size": self.grid.size,
            "ladder": list(self.grid.ladder),
            "margin": self.grid.margin,
            "nodes": self.nodes,
            "stage_evaluations": self.stage_evaluations,
            "closed_forms": self.closed_forms,
        }


class DiscFamily:
    """Parameter layout x = (r, Re c_1, Im c_1, ...) of the search family."""

    def __init__(self, target, degree):
        self.target = target
        self.k = target.k
        self.degree = degree
        self.n = target.dimension
        self.p = target.point
        self.v = target.direction
        self.size = 1 + 2 * self.n * degree

    def shape_rows(self, x):
        """Rows of r v + Σ c_j ζ^j, j = 0..N."""
        rows = np.zeros((self.degree + 1, self.n), dtype=complex)
        rows[0] = x[0] * self.v
        pairs = np.asarray(x[1:]).reshape(self.degree, self.n, 2)
        rows[1:] = pairs[..., 0] + 1j * pairs[..., 1]
        return rows

    def coefficients(self, x):
        rows = np.zeros((self.k + self.degree + 1, self.n), dtype=complex)
        rows[0] = self.p
        rows[self.k:] += self.shape_rows(x)
        return rows

    def disc(self, x, name="search"):
        return SeriesDisc(self.coefficients(x), name=name)

    def active_size(self, degree):
        return 1 + 2 * self.n * degree

    def vector(self, disc):
        """Parameters reproducing ``disc`` exactly, or None if it lies outside the family."""
        if not isinstance(disc, SeriesDisc) or disc.dimension != self.n:
            return None
        rows = disc.coefficients
        if rows.shape[0] > self.k + self.degree + 1:
            if np.max(np.abs(rows[self.k + self.degree + 1:])) > COEFFICIENT_TOL:
                return None
        rows = disc.taylor_coefficients(self.k + self.degree + 1)
        if np.max(np.abs(rows[0] - self.p)) > COEFFICIENT_TOL or np.max(np.abs(rows[1:self.k]), initial=0.0) > COEFFICIENT_TOL:
            return None
        r = float((np.vdot(self.v, rows[self.k]) / np.vdot(self.v, self.v)).real)
        if r <= 0.0 or np.max(np.abs(rows[self.k] - r * self.v)) > COEFFICIENT_TOL:
            return None
        tail = rows[self.k + 1:]
        x = np.empty(self.size)
        x[0] = r
        x[1:] = np.stack([tail.real, tail.imag], axis=-1).reshape(-1)
        return x


@dataclass
class Candidate:
    label: str
    order: int
    r: float
    disc: AnalyticDisc
    report: object


class PenaltyObjective:
    """−r + W·max(0, G + margin)² over the active coefficients."""

    def __init__(self, domain, family, config):
        self.domain = domain
        self.family = family
        self.margin = config.grid.margin
        nodes = lattice(config.nodes, 1.0)
        powers = np.arange(family.degree + 1) + family.k
        self.basis = nodes[:, None] ** powers[None, :]
        self.weight = config.penalty_start
        self.base = None
        self.active = family.size

    def full(self, x_active):
        x = self.base.copy()
        x[: self.active] = x_active
        return x

    def values(self, x):
        return self.family.p + self.basis @ self.family.shape_rows(x)

    def __call__(self, x_active):
        x = self.full(x_active)
        with np.errstate(all="ignore"):
            violation = lattice_violation(self.domain, self.values(x))
        if not math.isfinite(violation) or not math.isfinite(x[0]):
            return 1e300
        excess = max(0.0, violation + self.margin)
        return -x[0] + self.weight * excess * excess


def _simplex(x0, scale):
    steps = scale * np.maximum(np.abs(x0), 0.1)
    return np.vstack([x0, x0 + np.diag(steps)])


def certify(domain, disc, target, grid):
    report = contains_disc(domain, disc, grid)
    jet = verify_jet(disc, target)
    return report, jet


def shrink_toward_base(family, x, domain, grid):
    """Largest s in [0, 1] with p + s(f − p) contained, as a parameter vector."""
    def contained(s):
        return contains_disc(domain, family.disc(s * x), grid).verdict == CONTAINED

    if contained(1.0):
        return x
    lo, hi = 0.0, 1.0
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if contained(mid):
            lo = mid
        else:
            hi = mid
    return lo * x if lo > 0.0 else None


def constant_perturbation(domain, family, grid):
    """Largest t with p + t ζ^k v contained; always positive for interior p."""
    def contained(t):
        x = np.zeros(family.size)
        x[0] = t
        return contains_disc(domain, family.disc(x), grid).verdict == CONTAINED

    lo, hi = 0.0, 1.0
    while hi < MAX_SCALE and contained(hi):
        lo, hi = hi, 2.0 * hi
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        if contained(mid):
            lo = mid
        else:
            hi = mid
    t = lo
    if t <= 0.0:
        raise SearchFailureError(f"no contained constant-perturbation disc at {family.p!r}")
    x = np.zeros(family.size)
    x[0] = t
    return x


def run_restart(index, domain, target, config, start):
    """One seeded restart: staged Nelder–Mead, then certification and repair."""
    family = DiscFamily(target, config.degree)
    objective = PenaltyObjective(domain, family, config)
    rng = np.random.default_rng([config.seed, index])
    x = start.copy()
    if index > 0:
        x[1:] += config.perturbation * rng.standard_normal(family.size - 1) * max(1.0, abs(start[0]))
        x[0] *= 1.0 + config.perturbation * rng.standard_normal()
    for stage in range(config.stages):
        window = math.ceil(config.degree * (stage + 1) / config.stages)
        objective.weight = config.penalty_start * config.penalty_growth ** stage
        objective.active = family.active_size(window)
        objective.base = x
        x0 = x[: objective.active]
        result = minimize(objective, x0, method="Nelder-Mead",
                          options={"maxfev": config.stage_evaluations, "xatol": 1e-12, "fatol": 1e-14,
                                   "adaptive": True, "initial_simplex": _simplex(x0, 0.1)})
        x = objective.full(result.x)
        LOGGER.debug("restart %d stage %d window %d: r=%.9g objective=%.3e", index, stage, window, x[0], result.fun)
    if not x[0] > 0.0:
        return None
    repaired = shrink_toward_base(family, x, domain, config.grid)
    if repaired is None:
        return None
    disc = family.disc(repaired, name=f"search[{index}]")
    report, jet = certify(domain, disc, target, config.grid)
    if report.verdict != CONTAINED or not jet.valid:
        return None
    return Candidate(f"restart:{index}", index, float(repaired[0]), disc, report)


def _warm_candidates(domain, target, config, warm_starts, family, prefix="warm"):
    candidates, seeds = [], []
    for position, disc in enumerate(warm_starts or ()):
        if disc.dimension != target.dimension:
            raise DimensionError(f"warm start {disc.name} has dimension {disc.dimension}, target needs {target.dimension}")
        report, jet = certify(domain, disc, target, config.grid)
        if not report.inside or not jet.valid:
            LOGGER.info("%s start %s rejected: verdict=%s jet_valid=%s", prefix, disc.name, report.verdict, jet.valid)
            continue
        candidates.append(Candidate(f"{prefix}:{disc.name}", position - len(warm_starts), jet.r, disc, report))
        vector = family.vector(disc)
        if vector is not None:
            seeds.append(vector)
    return candidates, seeds


def upper_bound_search(domain, target, config=None, warm_starts=None):
    """Certified upper bound 1/r for K^k at ``target``."""
    config = config or SearchConfig()
    if target.dimension != domain.dimension:
        raise DimensionError(f"target in C^{target.dimension} for {domain.identifier} of dimension {domain.dimension}")
    if not bool(domain.is_interior(target.point)):
        raise PreconditionError(f"base point {target.p!r} is not interior to {domain.identifier}")
    family = DiscFamily(target, config.degree)
    baseline = constant_perturbation(domain, family, config.grid)
    base_disc = family.disc(baseline, name="constant-perturbation")
    base_report = contains_disc(domain, base_disc, config.grid)
    candidates = [Candidate("constant-perturbation", -len(warm_starts or ()) - 1, float(baseline[0]), base_disc, base_report)]
    warm, seeds = _warm_candidates(domain, target, config, warm_starts, family)
    candidates.extend(warm)
    if config.closed_forms:
        closed, _ = _warm_candidates(domain, target, config, planar_witnesses(domain, target), family, "closed-form")
        candidates.extend(closed)
    starts = [seeds[i % len(seeds)] if seeds else baseline for i in range(config.restarts)]
    with ThreadPoolExecutor(max_workers=settings.worker_count(config.restarts)) as pool:
        results = list(pool.map(lambda i: run_restart(i, domain, target, config, starts[i]), range(config.restarts)))
    candidates.extend(c for c in results if c is not None)
    best = candidates[0]
    for candidate in candidates[1:]:
        if candidate.r > best.r:
            best = candidate
    LOGGER.info("%s k=%d: best r=%.12g from %s", domain.identifier, target.k, best.r, best.label)
    jet = verify_jet(best.disc, target)
    residuals = {"jet": jet.to_record(), "containment": best.report.to_record(), "source": best.label}
    return MetricEstimate(1.0 / best.r, UPPER, target, domain.identifier, best.disc, residuals,
                          config.to_record(), config.seed)


def lift_witness(estimate, m, domain, grid=None):
    """Order mk certificate from an order-k one via ζ ↦ f(ζ^m); r is unchanged."""
    grid = grid or GridConfig()
    target = estimate.target.with_order(estimate.target.k * m)
    disc = compose_power(estimate.witness, m)
    report, jet = certify(domain, disc, target, grid)
    if not report.inside or not jet.valid:
        raise PreconditionError(f"lifted witness failed certification: verdict={report.verdict} jet_valid={jet.valid}")
    residuals = {"jet": jet.to_record(), "containment": report.to_record(), "source": f"lift:{m}"}
    return MetricEstimate(1.0 / jet.r, UPPER, target, domain.identifier, disc, residuals,
                          estimate.config, estimate.seed)


def degree_sweep(domain, target, degrees, config=None, warm_starts=None):
    """Estimates for increasing degrees, each warm-started from the previous witness."""
    config = config or SearchConfig()
    estimates = []
    warm = list(warm_starts or ())
    for degree in degrees:
        estimate = upper_bound_search(domain, target, replace(config, degree=degree), warm)
        estimates.append(estimate)
        warm = [estimate.witness]
    return estimates


def bidisc_extremal_family(psi):
    """ζ ↦ (ζ, ζ²ψ(ζ)) for a self-map ψ of the disc."""
    def evaluate(zeta):
        z = np.asarray(zeta, dtype=complex)
        return np.stack([z, z ** 2 * np.asarray(psi(z), dtype=complex)], axis=-1)

    return AnalyticDisc(evaluate, 2, closed=False, name="bidisc-extremal")
