# src/schwarz/suites.py
"""Seeded batches of Schwarz-type checks."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from common import settings
from common.errors import InvalidSampleError, UsageError
from schwarz.lemmas import EQUALITY, NEAR_EQUALITY, check_composition_bound, check_higher_schwarz, \
    check_punctured, check_schwarz_pick_higher
from schwarz.samples import SelfMapProfile, pick_equality_map, punctured_equality_map, sample_composition_pair, \
    sample_self_map, schwarz_equality_map

LOGGER = logging.getLogger(__name__)

LEMMAS = ("basic", "pick", "punctured", "composition")
VIOLATION_TOL = 1e-8


@dataclass
class SuiteSummary:
    lemma: str
    k: int
    center: complex
    seed: int
    samples: int
    max_violation: float = 0.0
    violations: int = 0
    equalities: int = 0
    unconfirmed: int = 0
    invalid: int = 0
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return self.violations == 0 and self.invalid == 0

    def to_record(self):
        return {
            "lemma": self.lemma,
            "k": self.k,
            "center": [self.center.real, self.center.imag],
            "seed": self.seed,
            "samples": self.samples,
            "max_violation": self.max_violation,
            "violations": self.violations,
            "equalities": self.equalities,
            "unconfirmed": self.unconfirmed,
            "invalid": self.invalid,
            "passed": self.passed,
        }


def _profile(lemma, k, index, center):
    if lemma == "punctured":
        return SelfMapProfile("punctured", k)
    kind = "blaschke" if index % 2 == 0 else "polynomial"
    return SelfMapProfile(kind, k, center=center if lemma == "pick" else 0j)


def check_sample(lemma, k, seed, index, center=0j):
    """Run one seeded check; returns the report record with the sample index."""
    sample_seed = (seed, index)
    if lemma == "composition":
        disc, outer = sample_composition_pair(sample_seed, k)
        report = check_composition_bound(disc, outer, k)
    else:
        sample = sample_self_map(sample_seed, _profile(lemma, k, index, center))
        if lemma == "basic":
            report = check_higher_schwarz(sample, k)
        elif lemma == "pick":
            report = check_schwarz_pick_higher(sample, center, k)
        else:
            report = check_punctured(sample, k)
    record = report.to_record()
    record["index"] = index
    return record


def _check_range(lemma, k, seed, indices, center):
    records = []
    for index in indices:
        try:
            records.append(check_sample(lemma, k, seed, index, center))
        except InvalidSampleError as exc:
            LOGGER.warning("%s sample %d rejected: %s", lemma, index, exc)
            records.append({"lemma": lemma, "k": k, "index": index, "status": "invalid", "error": str(exc)})
    return records


def run_suite(lemma, k, samples, seed=0, center=0j):
    """Check ``samples`` seeded maps; work is split across threads by index."""
    if lemma not in LEMMAS:
        raise UsageError(f"unknown lemma {lemma!r}; expected one of {LEMMAS}")
    if samples < 0:
        raise UsageError(f"sample count must be nonnegative, got {samples!r}")
    center = complex(center)
    workers = settings.worker_count(samples)
    partitions = [range(w, samples, workers) for w in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(lambda part: _check_range(lemma, k, seed, part, center), partitions))
    records = sorted((r for chunk in chunks for r in chunk), key=lambda r: r["index"])
    summary = SuiteSummary(lemma, k, center, seed, samples, records=records)
    for record in records:
        if record["status"] == "invalid":
            summary.invalid += 1
            continue
        summary.max_violation = max(summary.max_violation, record["max_violation"])
        summary.violations += record["max_violation"] > VIOLATION_TOL
        summary.equalities += record["status"] == EQUALITY
        summary.unconfirmed += record["status"] == NEAR_EQUALITY
    LOGGER.info("%s k=%d: %d samples, max violation %.3e, %d invalid", lemma, k, samples,
                summary.max_violation, summary.invalid)
    return summary


def equality_witnesses(lemma, k, center=0j, theta=0.7, value=0.3 - 0.2j):
    """Extremal maps for ``lemma``; each must be reported as equality."""
    if lemma == "basic":
        return check_higher_schwarz(schwarz_equality_map(k, theta), k)
    if lemma == "pick":
        return check_schwarz_pick_higher(pick_equality_map(center, k, theta, value), center, k)
    if lemma == "punctured":
        return check_punctured(punctured_equality_map(k, theta, value), k)
    raise UsageError(f"no equality witness for lemma {lemma!r}")
