# tests/test_search.py
import math
from dataclasses import replace

import numpy as np
import pytest

from catalog.ellipsoid import unit_disc_automorphism_disc
from catalog.yu import YU_BASE, YU_DIRECTION
from common.errors import DimensionError, PreconditionError
from domains.containment import ATTACHED, CONTAINED, GridConfig, contains_disc
from domains.model import Polydisc, PuncturedDisc, UnitDisc, YuDomain
from holo.discs import SeriesDisc, compose_power
from metrics.closed_forms import poincare, punctured_order_k
from metrics.search import (DiscFamily, SearchConfig, bidisc_extremal_family, constant_perturbation, degree_sweep,
                            lift_witness, shrink_toward_base, upper_bound_search)
from metrics.targets import UPPER, JetTarget, verify_jet

SMALL = SearchConfig(degree=2, restarts=2, stages=2, seed=3, grid=GridConfig(1024), nodes=64,
                     stage_evaluations=150, closed_forms=False)
WITH_CLOSED_FORMS = replace(SMALL, closed_forms=True)


def test_family_layout_round_trips():
    target = JetTarget([0.2, 0.0], [1.0, 1j], 2)
    family = DiscFamily(target, 3)
    rng = np.random.default_rng(0)
    x = rng.standard_normal(family.size)
    x[0] = abs(x[0]) + 0.1
    disc = family.disc(x)
    assert verify_jet(disc, target).valid
    assert np.allclose(family.vector(disc), x)
    assert family.vector(SeriesDisc([[0.0, 0.0], [1.0, 0.0]])) is None


def test_constant_perturbation_reaches_the_boundary():
    family = DiscFamily(JetTarget([0.5], [1.0]), 2)
    x = constant_perturbation(UnitDisc(), family, GridConfig(256))
    assert x[0] == pytest.approx(0.5, abs=1e-8)
    assert contains_disc(UnitDisc(), family.disc(x), GridConfig(256)).verdict == CONTAINED


def test_shrink_repairs_a_violating_disc():
    family = DiscFamily(JetTarget([0.0], [1.0]), 1)
    x = np.array([1.5, 0.0, 0.0])
    repaired = shrink_toward_base(family, x, UnitDisc(), GridConfig(256))
    assert repaired[0] == pytest.approx(1.0, abs=1e-8)
    assert repaired[0] < 1.0


def test_search_on_disc_center():
    estimate = upper_bound_search(UnitDisc(), JetTarget([0.0], [1.0]), SMALL)
    assert estimate.kind == UPPER
    assert estimate.value == pytest.approx(1.0, abs=1e-3)
    assert estimate.residuals["containment"]["verdict"] == CONTAINED
    assert estimate.residuals["jet"]["valid"]
    assert estimate.config["degree"] == 2 and estimate.seed == 3


def test_search_is_reproducible():
    target = JetTarget([0.3], [1.0])
    first = upper_bound_search(UnitDisc(), target, SMALL)
    second = upper_bound_search(UnitDisc(), target, SMALL)
    assert first.to_record() == second.to_record()


def test_upper_bound_never_undercuts_closed_form():
    target = JetTarget([0.4], [1.0])
    estimate = upper_bound_search(UnitDisc(), target, SMALL)
    assert estimate.value >= poincare(0.4, 1.0) * (1.0 - 1e-3)


def test_automorphism_warm_start_is_exact():
    disc = unit_disc_automorphism_disc(-0.3)
    estimate = upper_bound_search(UnitDisc(), JetTarget([0.3], [1.0]), SMALL, warm_starts=[disc])
    assert estimate.value == pytest.approx(poincare(0.3, 1.0), rel=1e-3)


def test_warm_start_rejected_when_jet_differs():
    disc = SeriesDisc([[0.1], [0.5]])
    estimate = upper_bound_search(UnitDisc(), JetTarget([0.0], [1.0]), SMALL, warm_starts=[disc])
    assert not estimate.residuals["source"].startswith("warm:")


def test_lift_witness_keeps_the_value():
    base = upper_bound_search(UnitDisc(), JetTarget([0.0], [1.0]), SMALL)
    lifted = lift_witness(base, 3, UnitDisc(), GridConfig(1024))
    assert lifted.target.k == 3
    assert lifted.value == pytest.approx(base.value, rel=1e-12)
    assert lifted.residuals["source"] == "lift:3"


def test_degree_sweep_is_monotone():
    estimates = degree_sweep(UnitDisc(), JetTarget([0.3], [1.0]), [1, 2], SMALL)
    assert len(estimates) == 2
    assert estimates[1].value <= estimates[0].value
    assert [e.config["degree"] for e in estimates] == [1, 2]


def test_yu_even_order_sweep_never_increases():
    target = JetTarget(YU_BASE, YU_DIRECTION, 2)
    estimates = degree_sweep(YuDomain(), target, [2, 4], replace(SMALL, restarts=1))
    values = [e.value for e in estimates]
    assert all(np.isfinite(values))
    assert values[1] <= values[0] * (1.0 + 1e-12)
    assert estimates[1].residuals["containment"]["verdict"] == CONTAINED


def test_punctured_search_stays_above_closed_form():
    p = 0.5
    estimate = upper_bound_search(PuncturedDisc(), JetTarget([p], [1.0]), SMALL)
    assert estimate.value >= punctured_order_k(p, 1.0) * (1.0 - 1e-3)
    assert estimate.residuals["containment"]["winding"] == 0


def test_closed_form_incumbent_off_axis_disc():
    p = 0.6j
    for k in (1, 2, 3):
        estimate = upper_bound_search(UnitDisc(), JetTarget([p], [1.0], k), WITH_CLOSED_FORMS)
        assert estimate.residuals["source"].startswith("closed-form:disc-extremal")
        assert estimate.value >= poincare(p, 1.0) * (1.0 - 1e-9)
        assert estimate.value == pytest.approx(poincare(p, 1.0), rel=0.02)
        assert estimate.residuals["containment"]["verdict"] == ATTACHED


@pytest.mark.parametrize("p", [0.2, 0.3, math.exp(-1.0), 0.7])
@pytest.mark.parametrize("k", [1, 3])
def test_closed_form_incumbent_punctured(p, k):
    estimate = upper_bound_search(PuncturedDisc(), JetTarget([p], [1.0], k), WITH_CLOSED_FORMS)
    expected = punctured_order_k(p, 1.0)
    assert estimate.residuals["source"].startswith("closed-form:covering")
    assert estimate.value >= expected * (1.0 - 1e-9)
    assert estimate.value == pytest.approx(expected, rel=0.02)
    assert estimate.residuals["containment"]["verdict"] == CONTAINED


def test_closed_forms_are_recorded_and_optional():
    target = JetTarget([0.5], [1.0])
    assert upper_bound_search(UnitDisc(), target, SMALL).config["closed_forms"] is False
    estimate = upper_bound_search(UnitDisc(), target, WITH_CLOSED_FORMS)
    assert estimate.config["closed_forms"] is True
    assert estimate.value <= upper_bound_search(UnitDisc(), target, SMALL).value


def test_search_preconditions():
    with pytest.raises(PreconditionError):
        upper_bound_search(UnitDisc(), JetTarget([1.5], [1.0]), SMALL)
    with pytest.raises(PreconditionError):
        upper_bound_search(PuncturedDisc(), JetTarget([0.0], [1.0]), SMALL)
    with pytest.raises(DimensionError):
        upper_bound_search(UnitDisc(), JetTarget([0.0, 0.0], [1.0, 0.0]), SMALL)
    with pytest.raises(DimensionError):
        upper_bound_search(UnitDisc(), JetTarget([0.0], [1.0]), SMALL,
                           warm_starts=[SeriesDisc([[0.0, 0.0], [1.0, 0.0]])])


def test_bidisc_family_is_contained():
    disc = bidisc_extremal_family(lambda z: 0.5 * z)
    target = JetTarget([0.0, 0.0], [1.0, 0.0])
    assert verify_jet(disc, target).valid
    assert contains_disc(Polydisc(), disc, GridConfig(256)).verdict == CONTAINED


def test_compose_power_of_witness_is_certified():
    base = upper_bound_search(UnitDisc(), JetTarget([0.0], [1.0]), SMALL)
    disc = compose_power(base.witness, 2)
    assert verify_jet(disc, JetTarget([0.0], [1.0], 2)).valid


@pytest.mark.slow
@pytest.mark.parametrize("p", [0.0, 0.3])
def test_disc_calibration_with_default_budget(p):
    config = SearchConfig(seed=0, grid=GridConfig(1024))
    estimate = upper_bound_search(UnitDisc(), JetTarget([p], [1.0]), config)
    assert estimate.value == pytest.approx(poincare(p, 1.0), rel=0.02)
