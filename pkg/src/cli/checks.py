# src/cli/checks.py
"""The anchored verification suite behind ``verify-paper``.

Each check returns one CheckRecord. Checks listed in INJECTABLE accept a
``corrupt`` flag that swaps in a wrong catalog parameter; it is a test hook
for the report plumbing.
"""
import logging
import math
from dataclasses import replace

import numpy as np

from catalog.ellipsoid import (centered_kind1_params, ellipsoid_kind1, ellipsoid_kind2, kind2_identity_residual,
                               lift_kind1, perturbed_kind1_disc, random_kind1_params)
from catalog.yu import (OPTIMAL_ALPHA, OPTIMAL_BETA, YU_BASE, YU_DIRECTION, YuDiscParams, exact_kobayashi_disc,
                        key_equation_residual, odd_order_lift, random_exact_params, yu_optimal_disc,
                        yu_parametric_disc, yu_reference_constants, yu_simple_disc)
from cli.report import CheckRecord, PaperReport, to_json
from common.errors import InfeasibleParametersError, KoblabError, UsageError
from domains.containment import contains_disc
from domains.model import Ellipsoid, PuncturedDisc, UnitDisc, YuDomain
from holo.discs import compose_power
from holo.fourier import lattice
from metrics.closed_forms import caratheodory_lower, exact_estimate, poincare, punctured_order_k
from metrics.search import SearchConfig, degree_sweep, upper_bound_search
from metrics.targets import UPPER, JetTarget, MetricEstimate, NamedWitness, verify_jet
from schwarz.lemmas import EQUALITY
from schwarz.suites import equality_witnesses, run_suite
from stationarity.weights import check_stationary, verify_k_stationary

LOGGER = logging.getLogger(__name__)

CATALOG_JET_TOL = 1e-10
KEY_RESIDUAL_TOL = 1e-9
BOUND_DECIMALS_TOL = 5e-5
CALIBRATION_TOL = 0.02
LOWER_SLACK = 1e-6
STATIONARY_RESIDUAL = 1e-8
NEGATIVE_CONTROL_RESIDUAL = 1e-3
LIFT_SUP_TOL = 1e-9
IDENTITY_TOL = 1e-10
SCHWARZ_TOL = 1e-8
RECONSTRUCTION_TOL = 1e-7
TREND_CEILING = 0.9

STATIONARY_MS = (0.2, 0.35, 0.45)
ORDERS = (1, 2, 3)
PICK_CENTERS = (0j, 0.4 + 0.2j, -0.7 + 0j)
TREND_DEGREES = (4, 8, 12, 16)
TREND_STAGE_EVALUATIONS = 800
DISC_POINTS = (0j, 0.3 + 0j, 0.6j)
PUNCTURED_POINTS = (0.2, math.exp(-1.0), 0.7)
PUNCTURED_ORDERS = (1, 3)


def _seed(config):
    return config.seed if config.seed is not None else 0


# --- Yu domain constructions ---

def _catalog_bound(check_id, anchor, entry, expected, config):
    domain = YuDomain()
    report = contains_disc(domain, entry.disc, config.grid_config())
    jet = verify_jet(entry.disc, entry.target, tol=CATALOG_JET_TOL)
    residual = key_equation_residual(entry, config.grid)
    measured = 1.0 / jet.r if jet.r > 0 else math.inf
    passed = (report.contained and jet.valid and residual <= KEY_RESIDUAL_TOL
              and abs(measured - expected) <= BOUND_DECIMALS_TOL)
    details = {"containment": report.to_record(), "jet": jet.to_record(), "key_residual": residual}
    return CheckRecord(check_id, anchor, measured, expected, BOUND_DECIMALS_TOL, passed, details)


def check_yu_optimal_bound(config, corrupt=False):
    entry = yu_parametric_disc(YuDiscParams(OPTIMAL_ALPHA, 0.9 * OPTIMAL_BETA)) if corrupt else yu_optimal_disc()
    expected = yu_reference_constants()["optimal_order3_bound"]
    return _catalog_bound("yu_optimal_bound", "K^3 ≤ (8π/(1−e^{−2π}))^{−1/3} ≈ 0.3412 at ((0,0,−1),(0,1,0))",
                          entry, expected, config)


def check_yu_simple_bound(config, corrupt=False):
    entry = yu_parametric_disc(YuDiscParams(1.0, 1.2)) if corrupt else yu_simple_disc()
    expected = yu_reference_constants()["simple_order3_bound"]
    return _catalog_bound("yu_simple_bound", "K^3 ≤ 2^{−1/3} from (ζ⁴e^ζ, ζ³h₂, −1)", entry, expected, config)


def check_odd_order_doubling(config, corrupt=False):
    domain = YuDomain()
    base = yu_optimal_disc()
    source = yu_parametric_disc(YuDiscParams(OPTIMAL_ALPHA, math.pi)) if corrupt else base
    lifted = odd_order_lift(source)
    grid = config.grid_config()
    report = contains_disc(domain, lifted.disc, grid)
    jet = verify_jet(lifted.disc, lifted.target, tol=CATALOG_JET_TOL)
    nodes = lattice(grid.size, grid.ladder[-1])
    below = bool(np.all(domain.rho(lifted.disc(nodes)) < domain.rho(base.disc(nodes))))
    measured = 1.0 / jet.r if jet.r > 0 else math.inf
    passed = report.contained and jet.valid and below and abs(measured - base.value) <= CATALOG_JET_TOL
    details = {"order": lifted.target.k, "pointwise_below": below, "containment": report.to_record()}
    return CheckRecord("odd_order_doubling", "K^{2n+1} ≤ K^{2n−1} via (ζ³f₁, ζ²f₂, f₃)",
                       measured, base.value, CATALOG_JET_TOL, passed, details)


def check_exact_kobayashi(config, corrupt=False, count=25):
    rng = np.random.default_rng([_seed(config), 25])
    domain = YuDomain()
    grid = config.grid_config()
    passed = 0
    failures = []
    for index in range(count):
        params = random_exact_params(rng, feasible=True)
        entry = exact_kobayashi_disc(params)
        expected_r = params.t ** 0.25 / abs(params.a) * (1.01 if corrupt else 1.0)
        report = contains_disc(domain, entry.disc, grid)
        jet = verify_jet(entry.disc, entry.target, tol=1e-9)
        upper = MetricEstimate(entry.value, UPPER, entry.target, "yu_domain", NamedWitness(entry.name))
        try:
            exact = exact_estimate(upper, caratheodory_lower(domain, entry.target))
            value_ok = abs(exact.value - params.value) <= 1e-9 * max(1.0, params.value)
        except KoblabError:
            value_ok = False
        if report.contained and jet.valid and abs(jet.r - expected_r) <= 1e-9 and value_ok:
            passed += 1
        else:
            failures.append(f"feasible #{index}")
    for index in range(count):
        params = random_exact_params(rng, feasible=False)
        try:
            exact_kobayashi_disc(params)
            failures.append(f"infeasible #{index} accepted")
        except InfeasibleParametersError:
            passed += 1
    return CheckRecord("exact_kobayashi", "K(z_t, X) = |a|t^{−1/4} under the feasibility condition on |b|/|a|",
                       float(passed), float(2 * count), 0.0, passed == 2 * count, {"failures": failures})


# --- Calibration on the disc and the punctured disc ---

def _relative(value, expected):
    return value / expected - 1.0


def _calibration_rows(domain, points, orders, closed_form, config):
    rows = []
    for p in points:
        expected = closed_form(p, 1.0)
        for k in orders:
            estimate = upper_bound_search(domain, JetTarget((p,), (1.0,), k), config.search_config())
            rows.append({"p": [complex(p).real, complex(p).imag], "k": k, "value": estimate.value,
                         "expected": expected, "source": estimate.residuals.get("source")})
    return rows


def _calibration_record(check_id, anchor, rows):
    worst = max(_relative(r["value"], r["expected"]) for r in rows)
    above = all(r["value"] >= r["expected"] * (1.0 - LOWER_SLACK) for r in rows)
    return CheckRecord(check_id, anchor, worst, 0.0, CALIBRATION_TOL, above and worst <= CALIBRATION_TOL,
                       {"targets": rows})


def check_calibration_disc(config, corrupt=False):
    rows = _calibration_rows(UnitDisc(), DISC_POINTS, ORDERS, poincare, config)
    return _calibration_record("calibration_disc", "K^k_D(p, v) = |v|/(1−|p|²) for every k", rows)


def check_calibration_punctured(config, corrupt=False):
    rows = _calibration_rows(PuncturedDisc(), PUNCTURED_POINTS, PUNCTURED_ORDERS, punctured_order_k, config)
    return _calibration_record("calibration_punctured", "K^k on D∖{0} equals |v|/(−2|p| log|p|)", rows)


# --- Ellipsoid ---

def _kind1_samples(config, count):
    for m in STATIONARY_MS:
        rng = np.random.default_rng([_seed(config), int(round(m * 100))])
        for _ in range(count):
            yield random_kind1_params(rng, m)


def check_k_stationary(config, corrupt=False, count=20):
    grid = config.grid_config()
    worst = 0.0
    failures = []
    for index, params in enumerate(_kind1_samples(config, count)):
        for k in ORDERS:
            if corrupt:
                disc = compose_power(perturbed_kind1_disc(params), k)
                report = check_stationary(Ellipsoid(params.m), disc, k, grid, 2 * k * 2 + 8)
            else:
                report = verify_k_stationary(params, k, grid)
            worst = max(worst, report.residual)
            if not report.stationary:
                failures.append({"index": index, "m": params.m, "k": k, "verdict": report.verdict,
                                 "residual": report.residual, "margin": report.margin})
    controls = []
    for m in STATIONARY_MS:
        report = check_stationary(Ellipsoid(m), perturbed_kind1_disc(centered_kind1_params(m)), 1, grid)
        controls.append(report.residual)
    control_ok = all(r > NEGATIVE_CONTROL_RESIDUAL for r in controls)
    return CheckRecord("k_stationary", "f(ζ^k) is k-stationary for first-form ellipsoid extremals",
                       worst, 0.0, STATIONARY_RESIDUAL, not failures and control_ok,
                       {"failures": failures, "negative_control": controls})


def check_lifting_identity(config, corrupt=False, count=50):
    rng = np.random.default_rng([_seed(config), 50])
    grid = config.grid_config()
    worst_sup = 0.0
    worst_identity = 0.0
    failures = 0
    for index in range(count):
        params = random_kind1_params(rng, STATIONARY_MS[index % len(STATIONARY_MS)])
        base = perturbed_kind1_disc(params) if corrupt else ellipsoid_kind1(params)
        for k in ORDERS:
            try:
                lifted = lift_kind1(params, k)
            except KoblabError:
                failures += 1
                continue
            disc = ellipsoid_kind2(lifted)
            nodes = lattice(grid.size, 1.0 if disc.closed else grid.ladder[-1])
            gap = float(np.max(np.abs(disc(nodes) - compose_power(base, k)(nodes))))
            worst_sup = max(worst_sup, gap)
            worst_identity = max(worst_identity, kind2_identity_residual(lifted))
    passed = failures == 0 and worst_sup <= LIFT_SUP_TOL and worst_identity <= IDENTITY_TOL
    return CheckRecord("lifting_identity", "lifted first-form maps are second-form maps built from k-th roots",
                       worst_sup, 0.0, LIFT_SUP_TOL, passed, {"identity_residual": worst_identity, "failures": failures})


# --- Schwarz lemmas ---

def _schwarz_record(check_id, anchor, summaries, witnesses):
    worst = max(s.max_violation for s in summaries)
    detected = all(w.status == EQUALITY and w.reconstruction_error <= RECONSTRUCTION_TOL for w in witnesses)
    passed = all(s.passed for s in summaries) and detected and worst <= SCHWARZ_TOL
    details = {"suites": [s.to_record() for s in summaries], "witnesses": [w.to_record() for w in witnesses]}
    return CheckRecord(check_id, anchor, worst, 0.0, SCHWARZ_TOL, passed, details)


def check_schwarz_basic(config, corrupt=False, samples=1000, k=2):
    summaries = [run_suite("basic", k, samples, _seed(config))]
    witnesses = [equality_witnesses("basic", order) for order in ORDERS]
    return _schwarz_record("schwarz_basic", "|f(ζ)| ≤ |ζ|^k and |f^{(k)}(0)| ≤ k!, equality only for e^{iθ}ζ^k",
                           summaries, witnesses)


def check_schwarz_pick(config, corrupt=False, samples=1000, k=2):
    summaries = [run_suite("pick", k, samples, _seed(config), center) for center in PICK_CENTERS]
    witnesses = [equality_witnesses("pick", order, center) for center in PICK_CENTERS for order in ORDERS]
    return _schwarz_record("schwarz_pick", "|f^{(k)}(ζ)| ≤ k!(1−|f(ζ)|²)/(1−|ζ|²)^k",
                           summaries, witnesses)


def check_schwarz_punctured(config, corrupt=False, samples=1000, k=2):
    summaries = [run_suite("punctured", k, samples, _seed(config))]
    witnesses = [equality_witnesses("punctured", order) for order in ORDERS]
    return _schwarz_record("schwarz_punctured", "|f^{(k)}(0)| ≤ −2k!|f(0)| log|f(0)| into D∖{0}",
                           summaries, witnesses)


def check_composition_bound(config, corrupt=False, samples=200, k=2):
    summary = run_suite("composition", k, samples, _seed(config))
    return CheckRecord("composition_bound", "|(g∘f)^{(k)}(0)| ≤ k! when g(f(0)) = 0 and ν(f − f(0)) ≥ k",
                       summary.max_violation, 0.0, SCHWARZ_TOL, summary.passed, {"suite": summary.to_record()})


# --- Even orders and determinism ---

def check_even_order_trend(config, corrupt=False):
    target = JetTarget(YU_BASE, YU_DIRECTION, 2)
    estimates = degree_sweep(YuDomain(), target, TREND_DEGREES,
                             replace(config.search_config(), stage_evaluations=TREND_STAGE_EVALUATIONS))
    values = [e.value for e in estimates]
    decreasing = all(b < a for a, b in zip(values, values[1:]))
    passed = decreasing and values[-1] < TREND_CEILING
    return CheckRecord("even_order_trend", "K^2 upper bounds at ((0,0,−1),(0,1,0)) decrease with the search degree",
                       values[-1], TREND_CEILING, 0.0, passed,
                       {"degrees": list(TREND_DEGREES), "values": values})


def _determinism_payload(config):
    suite = run_suite("basic", 2, 50, _seed(config))
    search = SearchConfig(degree=3, restarts=2, stages=1, seed=_seed(config), grid=config.grid_config(),
                          stage_evaluations=200)
    estimate = upper_bound_search(UnitDisc(), JetTarget((0.3,), (1.0,), 1), search)
    return to_json({"suite": suite.to_record(), "records": suite.records, "estimate": estimate.to_record()})


def check_determinism(config, corrupt=False):
    first = _determinism_payload(config)
    second = _determinism_payload(config)
    identical = first == second
    return CheckRecord("determinism", "seeded commands reproduce their output byte for byte",
                       float(identical), 1.0, 0.0, identical, {"bytes": len(first.encode("utf-8"))})


CHECKS = {
    "yu_optimal_bound": check_yu_optimal_bound,
    "yu_simple_bound": check_yu_simple_bound,
    "odd_order_doubling": check_odd_order_doubling,
    "calibration_disc": check_calibration_disc,
    "calibration_punctured": check_calibration_punctured,
    "exact_kobayashi": check_exact_kobayashi,
    "k_stationary": check_k_stationary,
    "lifting_identity": check_lifting_identity,
    "schwarz_basic": check_schwarz_basic,
    "schwarz_pick": check_schwarz_pick,
    "schwarz_punctured": check_schwarz_punctured,
    "composition_bound": check_composition_bound,
    "even_order_trend": check_even_order_trend,
    "determinism": check_determinism,
}
INJECTABLE = ("yu_optimal_bound", "yu_simple_bound", "odd_order_doubling", "exact_kobayashi",
              "k_stationary", "lifting_identity")


def select_checks(checks=(), inject=()):
    unknown = [c for c in tuple(checks) + tuple(inject) if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check ids: {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    bad = [c for c in inject if c not in INJECTABLE]
    if bad:
        raise UsageError(f"checks without a fault hook: {', '.join(bad)}")
    return [c for c in CHECKS if not checks or c in checks]


def run_checks(config):
    report = PaperReport()
    for check_id in select_checks(config.checks, config.inject):
        LOGGER.info("running %s", check_id)
        report.add(CHECKS[check_id](config, corrupt=check_id in config.inject))
    return report
