# src/cli/commands.py
"""Subcommand bodies. Each returns (result, ok) after writing its output."""
import logging
import math

import numpy as np

from catalog.names import NAMES as CATALOG_NAMES
from catalog.names import resolve
from catalog.yu import ExactKobayashiParams, exact_kobayashi_disc, feasibility_condition, feasibility_ratio_bound
from cli.checks import run_checks
from cli.report import ReportWriter, report_csv, to_csv, to_json
from common.errors import InfeasibleParametersError, UsageError
from domains.containment import contains_disc
from domains.registry import IDENTIFIERS, domain_from_id
from metrics.search import degree_sweep, upper_bound_search
from metrics.targets import encode_vector, verify_jet
from schwarz.suites import run_suite
from stationarity.weights import check_stationary, default_cutoff

LOGGER = logging.getLogger(__name__)


def emit(config, record, rows=None, columns=None):
    """JSON gets ``record``; CSV gets ``rows`` (defaults to the single record)."""
    if config.format == "csv":
        text = to_csv(rows if rows is not None else [record], columns)
    else:
        text = to_json(record)
    with ReportWriter(config.output) as writer:
        writer.write(text)
    return text


def cmd_verify_paper(config):
    report = run_checks(config)
    if config.format == "csv":
        with ReportWriter(config.output) as writer:
            writer.write(report_csv(report))
    else:
        emit(config, report.to_record())
    if report.failed:
        LOGGER.warning("failed checks: %s", ", ".join(report.failed))
    return report, report.verdict == "pass"


def _warm_starts(config):
    if not config.warm_start:
        return []
    return [resolve(config.warm_start, config.lift).disc]


def cmd_estimate(config):
    estimate = upper_bound_search(config.domain_model(), config.target(), config.search_config(),
                                  _warm_starts(config))
    record = estimate.to_record()
    row = {"domain": estimate.domain_id, "k": estimate.target.k, "value": estimate.value, "kind": estimate.kind,
           "seed": estimate.seed, "source": estimate.residuals.get("source")}
    emit(config, record, [row])
    return estimate, True


def _linspace(bounds, label):
    lo, hi, count = bounds
    if count < 1 or hi < lo:
        raise UsageError(f"{label} range {bounds!r} is empty")
    return np.linspace(lo, hi, count)


def _degree_rows(config):
    if not config.degrees:
        raise UsageError("degree sweep needs at least one degree")
    if any(d < 1 for d in config.degrees):
        raise UsageError(f"degrees must be positive, got {config.degrees!r}")
    estimates = degree_sweep(config.domain_model(), config.target(), config.degrees, config.search_config(),
                             _warm_starts(config))
    return [{"degree": d, "value": e.value, "kind": e.kind, "source": e.residuals.get("source")}
            for d, e in zip(config.degrees, estimates)]


def _feasibility_rows(config):
    ts = _linspace(config.t_range, "t")
    ratios = _linspace(config.ratio_range, "ratio")
    if ts[0] <= 0.0 or ts[-1] >= 1.0:
        raise UsageError(f"t must lie in (0, 1), got range {config.t_range!r}")
    if ratios[0] < 0.0:
        raise UsageError(f"ratio must be nonnegative, got range {config.ratio_range!r}")
    grid = config.grid_config()
    domain = domain_from_id("yu_domain")
    rows = []
    for t in ts:
        bound = feasibility_ratio_bound(float(t))
        for ratio in ratios:
            a = 1.0 / math.sqrt(1.0 + ratio ** 2)
            b = ratio * a
            feasible = feasibility_condition(float(t), a, b)
            try:
                entry = exact_kobayashi_disc(ExactKobayashiParams(float(t), complex(a), complex(b)))
                certified = contains_disc(domain, entry.disc, grid).contained
            except InfeasibleParametersError:
                certified = False
            rows.append({"t": float(t), "ratio": float(ratio), "bound": bound, "feasible": feasible,
                         "certified": certified, "value": a * float(t) ** -0.25})
    return rows


def cmd_sweep(config):
    rows = _degree_rows(config) if config.sweep == "degree" else _feasibility_rows(config)
    emit(config, {"sweep": config.sweep, "rows": rows}, rows)
    return rows, True


def cmd_schwarz(config):
    summary = run_suite(config.lemma, config.k, config.samples, config.seed, config.center)
    emit(config, {"summary": summary.to_record(), "samples": summary.records}, summary.records,
         ["index", "lemma", "k", "status", "coefficient", "bound", "max_violation", "equality_gap", "theta",
          "reconstruction_error", "error"])
    return summary, summary.passed


def cmd_stationarity(config):
    if not config.map:
        raise UsageError("stationarity needs --map <catalog name>")
    entry = resolve(config.map, config.k)
    domain = domain_from_id(entry.domain_id)
    cutoff = default_cutoff(config.k, 2) if config.cutoff is None else config.cutoff
    report = check_stationary(domain, entry.disc, config.k, config.grid_config(), cutoff)
    record = dict(report.to_record(), map=config.map, weights=report.weights.tolist())
    theta = 2.0 * np.pi * np.arange(report.weights.size) / report.weights.size
    rows = [{"theta": float(x), "c": float(c)} for x, c in zip(theta, report.weights)]
    emit(config, record, rows)
    return report, report.stationary


def catalog_record(entry, config):
    domain = domain_from_id(entry.domain_id)
    containment = contains_disc(domain, entry.disc, config.grid_config())
    record = {"name": entry.name, "domain": entry.domain_id, "r": entry.r, "value": entry.value,
              "kind": entry.kind, "containment": containment.to_record()}
    if entry.target is not None:
        jet = verify_jet(entry.disc, entry.target)
        rows = entry.disc.taylor_coefficients(entry.target.k + 1)
        record.update(target=entry.target.to_record(), jet=jet.to_record(),
                      taylor=[encode_vector(row) for row in rows])
    if "params" in entry.parts:
        record["params"] = repr(entry.parts["params"])
    return record


def cmd_catalog(config):
    if config.action == "list":
        rows = [{"kind": "catalog", "name": n} for n in CATALOG_NAMES]
        rows += [{"kind": "domain", "name": n} for n in IDENTIFIERS]
        emit(config, {"catalog": list(CATALOG_NAMES), "domains": list(IDENTIFIERS)}, rows)
        return rows, True
    if not config.name:
        raise UsageError("catalog show needs a catalog name")
    record = catalog_record(resolve(config.name, config.lift), config)
    emit(config, record)
    return record, True


COMMANDS = {
    "verify-paper": cmd_verify_paper,
    "estimate": cmd_estimate,
    "sweep": cmd_sweep,
    "schwarz": cmd_schwarz,
    "stationarity": cmd_stationarity,
    "catalog": cmd_catalog,
}
