# tests/test_discs_domains.py
import math

import numpy as np
import pytest

from catalog.planar import covering_disc
from catalog.yu import exact_kobayashi_disc, random_exact_params, yu_optimal_disc, yu_simple_disc
from common.errors import DimensionError, OutOfRangeError, ParameterError, SingularityError, UsageError
from domains import contains_disc, domain_from_id, grad_rho, rho
from domains.containment import ATTACHED, CONTAINED, VIOLATED, GridConfig, lattice_violation, winding_number
from domains.model import Ellipsoid, HalfPlane, Polydisc, PuncturedDisc, UnitDisc, YuDomain
from holo.discs import AnalyticDisc, SeriesDisc, compose_power, constant_disc
from holo.fourier import lattice
from metrics.targets import JetTarget, verify_jet


# --- Discs ---

def test_series_disc_evaluation_and_jets():
    disc = SeriesDisc([[0.0, 1.0], [1.0, 0.0], [0.0, 2.0]])
    values = disc(np.array([0.5, 0.25]))
    assert values.shape == (2, 2)
    assert np.allclose(values[0], [0.5, 1.5])
    assert np.allclose(disc.jet(2), [0.0, 4.0])
    assert disc.closed and disc.degree == 2
    assert np.allclose(disc.taylor_coefficients(5)[3:], 0.0)


def test_analytic_disc_prefers_coded_rows():
    disc = AnalyticDisc(lambda z: np.exp(z)[..., None], 1, taylor=[[7.0]])
    rows = disc.taylor_coefficients(4)
    assert rows[0, 0] == 7.0
    assert np.allclose(rows[1:, 0], [1.0, 0.5, 1.0 / 6.0])
    with pytest.raises(OutOfRangeError):
        disc.taylor_coefficients(500)


def test_disc_dimension_checks():
    with pytest.raises(DimensionError):
        AnalyticDisc(lambda z: z, 0)
    with pytest.raises(DimensionError):
        AnalyticDisc(lambda z: z[..., None], 1, taylor=np.zeros((3, 2)))
    with pytest.raises(DimensionError):
        SeriesDisc([[0.0, 1.0]]).component(2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_compose_power_reindexes_series(k):
    disc = SeriesDisc([[0.5], [0.25], [0.125]])
    lifted = compose_power(disc, k)
    z = lattice(16, 0.8)
    assert np.allclose(lifted(z), disc(z ** k))
    assert lifted.vanishing_order().order == k
    assert np.allclose(lifted.jet(k), math.factorial(k) * 0.25)


def test_compose_power_of_analytic_disc():
    disc = AnalyticDisc(lambda z: np.stack([np.exp(z), z], axis=-1), 2, closed=True)
    lifted = compose_power(disc, 3)
    z = lattice(16, 0.7)
    assert np.allclose(lifted(z), disc(z ** 3))
    rows = lifted.taylor_coefficients(7)
    assert np.allclose(rows[:, 1], [0, 0, 0, 1, 0, 0, 0])
    assert np.allclose(rows[6, 0], 0.5)
    assert lifted.closed
    assert compose_power(disc, 1) is disc
    with pytest.raises(ParameterError):
        compose_power(disc, 0)


def test_constant_disc():
    disc = constant_disc([0.0, 0.0, -0.5])
    assert disc.vanishing_order().infinite
    assert np.allclose(disc.value_at_zero(), [0.0, 0.0, -0.5])


# --- Domains ---

def test_defining_functions():
    assert rho(UnitDisc(), [0.5]) == pytest.approx(-0.75)
    assert rho(HalfPlane(), [1.0 + 2.0j]) == pytest.approx(-2.0)
    assert rho(Polydisc(), [0.5, 0.9]) == pytest.approx(0.81 - 1.0)
    assert rho(YuDomain(), [0.0, 0.0, -1.0]) == pytest.approx(-1.0)
    assert rho(Ellipsoid(0.25), [0.0, 0.0625]) == pytest.approx(0.25 - 1.0)
    with pytest.raises(DimensionError):
        rho(YuDomain(), [0.0, 1.0])


def test_gradients():
    assert np.allclose(grad_rho(UnitDisc(), [0.3 + 0.1j]), [0.3 - 0.1j])
    assert np.allclose(grad_rho(Polydisc(), [0.1, 0.5j]), [0.0, -0.5j])
    assert np.allclose(grad_rho(YuDomain(), [1.0, 1.0, 0.0]), [0.0, 0.0, 0.5])
    z = np.array([0.3, 0.5 + 0.0j])
    m = 0.4
    expected = [0.3, m * 0.5 ** (2 * m - 1)]
    assert np.allclose(grad_rho(Ellipsoid(m), z), expected)
    with pytest.raises(SingularityError):
        grad_rho(Ellipsoid(m), [0.3, 0.0])


def test_yu_gradient_matches_finite_differences():
    domain = YuDomain()
    z = np.array([0.3 + 0.1j, -0.2 + 0.4j, -0.5 + 0.2j])
    grad = domain.grad_rho(z)
    h = 1e-6
    for j in range(3):
        step = np.zeros(3, dtype=complex)
        step[j] = h
        dx = (domain.rho(z + step) - domain.rho(z - step)) / (2 * h)
        dy = (domain.rho(z + 1j * step) - domain.rho(z - 1j * step)) / (2 * h)
        assert grad[j] == pytest.approx(0.5 * (dx - 1j * dy), abs=1e-6)


def test_ellipsoid_parameters():
    assert Ellipsoid(0.3).nonconvex and not Ellipsoid(0.7).nonconvex
    for m in (0.0, 1.0, 1.5):
        with pytest.raises(ParameterError):
            Ellipsoid(m)


@pytest.mark.parametrize("text, identifier", [
    ("unit_disc", "unit_disc"),
    ("punctured_disc", "punctured_disc"),
    ("half_plane", "half_plane"),
    ("yu_domain", "yu_domain"),
    ("polydisc", "polydisc"),
    ("polydisc:3", "polydisc:3"),
    ("ellipsoid:0.25", "ellipsoid:0.25"),
])
def test_domain_identifiers(text, identifier):
    assert domain_from_id(text).identifier == identifier


@pytest.mark.parametrize("text", ["ball", "ellipsoid", "ellipsoid:x", "polydisc:two"])
def test_unknown_domain(text):
    with pytest.raises(UsageError):
        domain_from_id(text)


# --- Containment ---

def test_grid_config_validation():
    config = GridConfig(256, (0.999, 0.9))
    assert config.ladder == (0.9, 0.999)
    with pytest.raises(ParameterError):
        GridConfig(100)
    with pytest.raises(ParameterError):
        GridConfig(256, (0.5, 1.5))


def test_half_disc_contained_with_closed_maximum(grid):
    report = contains_disc(UnitDisc(), SeriesDisc([[0.0], [0.5]]), grid)
    assert report.verdict == CONTAINED
    assert report.max_rho == pytest.approx(-0.75)
    assert report.ladder[-1] == 1.0


def test_identity_is_attached(grid):
    report = contains_disc(UnitDisc(), SeriesDisc([[0.0], [1.0]]), grid)
    assert report.verdict == ATTACHED
    assert report.inside and not report.contained


def test_large_disc_violates(grid):
    assert contains_disc(UnitDisc(), SeriesDisc([[0.0], [2.0]]), grid).verdict == VIOLATED


def test_punctured_disc_needs_zero_free_images(grid):
    domain = PuncturedDisc()
    assert contains_disc(domain, SeriesDisc([[0.5], [0.3]]), grid).verdict == CONTAINED
    covering = contains_disc(domain, SeriesDisc([[0.1], [0.5]]), grid)
    assert covering.verdict == VIOLATED
    assert covering.winding == 1
    assert contains_disc(domain, SeriesDisc([[0.0], [0.5]]), grid).verdict == VIOLATED


def test_lattice_violation_sign():
    values = (0.5 + 0.3 * lattice(64))[:, None]
    assert lattice_violation(PuncturedDisc(), values) < 0.0
    values = (0.1 + 0.5 * lattice(64))[:, None]
    assert lattice_violation(PuncturedDisc(), values) == 1.0
    assert winding_number(lattice(64) ** 2) == 2


def test_report_record_keys(grid):
    record = contains_disc(YuDomain(), constant_disc([0.0, 0.0, -0.5]), grid).to_record()
    assert record["verdict"] == CONTAINED
    assert record["max_rho"] == pytest.approx(-0.5)
    assert set(record) >= {"max_rho", "margin", "ladder", "radius_maxima", "outer_abs_rho", "verdict"}


def test_grid_with_size_keeps_the_ladder():
    config = GridConfig(256, (0.9, 0.99), margin=1e-8, attach_tol=1e-7)
    finer = config.with_size(512)
    assert finer.size == 512
    assert (finer.ladder, finer.margin, finer.attach_tol) == (config.ladder, config.margin, config.attach_tol)
    with pytest.raises(ParameterError):
        config.with_size(300)


@pytest.mark.parametrize("domain, disc", [
    (UnitDisc(), SeriesDisc([[0.0], [0.5]])),
    (UnitDisc(), SeriesDisc([[0.0], [1.0]])),
    (UnitDisc(), SeriesDisc([[0.0], [2.0]])),
    (PuncturedDisc(), SeriesDisc([[0.5], [0.3]])),
    (PuncturedDisc(), SeriesDisc([[0.1], [0.5]])),
    (PuncturedDisc(), covering_disc(0.3, 1.0, 2)),
    (Polydisc(), SeriesDisc([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])),
    (YuDomain(), yu_simple_disc().disc),
    (YuDomain(), yu_optimal_disc().disc),
])
def test_verdict_stable_under_refinement(grid, domain, disc):
    coarse = contains_disc(domain, disc, grid)
    fine = contains_disc(domain, disc, grid.with_size(2 * grid.size))
    assert fine.verdict == coarse.verdict
    assert fine.max_rho == pytest.approx(coarse.max_rho, abs=1e-4)


def _random_yu_polynomial(rng, degree=3):
    coefficients = 0.1 * (rng.standard_normal((degree + 1, 3)) + 1j * rng.standard_normal((degree + 1, 3)))
    coefficients[0, 2] = -1.0
    return SeriesDisc(coefficients)


def test_maxima_grow_with_the_radius():
    rng = np.random.default_rng(11)
    discs = [yu_simple_disc().disc, yu_optimal_disc().disc]
    discs += [exact_kobayashi_disc(random_exact_params(rng, feasible=True)).disc for _ in range(3)]
    discs += [_random_yu_polynomial(rng) for _ in range(5)]
    for disc in discs:
        maxima = contains_disc(YuDomain(), disc, GridConfig(4096)).radius_maxima
        assert all(np.isfinite(maxima))
        assert all(inner <= outer + 1e-4 for inner, outer in zip(maxima, maxima[1:]))


def test_bidisc_cusp_is_an_order_two_witness(grid):
    disc = SeriesDisc([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    jet = verify_jet(disc, JetTarget([0.0, 0.0], [1.0, 0.0], 2))
    assert jet.valid and jet.r == pytest.approx(1.0)
    report = contains_disc(Polydisc(), disc, grid)
    assert report.verdict == ATTACHED
    assert report.inside
    assert all(m < 0.0 for m in report.radius_maxima[:-1])


@pytest.mark.parametrize("k", [2, 3, 4])
def test_compose_power_image_lies_in_the_image(k):
    rng = np.random.default_rng(k)
    coefficients = 0.4 * (rng.standard_normal((4, 2)) + 1j * rng.standard_normal((4, 2)))
    for f in (SeriesDisc(coefficients), AnalyticDisc(lambda z: np.stack([np.exp(z), z * z], axis=-1), 2, closed=True)):
        g = compose_power(f, k)
        image = g(lattice(256, 1.0))
        reference = f(lattice(512, 1.0))
        gaps = np.linalg.norm(image[:, None, :] - reference[None, :, :], axis=-1).min(axis=1)
        assert np.max(gaps) < 1e-10
        domain = Polydisc()
        outer = contains_disc(domain, f, GridConfig(256)).max_rho
        assert contains_disc(domain, g, GridConfig(256)).max_rho <= outer + 1e-12


def test_logarithm_carrying_discs():
    disc = covering_disc(0.4j, 1.0, 1)
    lifted = compose_power(disc, 3)
    z = lattice(32, 0.9)
    assert np.allclose(np.exp(lifted.logarithm(z)), lifted(z)[..., 0])
    report = contains_disc(PuncturedDisc(), lifted, GridConfig(1024))
    assert report.verdict == CONTAINED and report.winding == 0
    with pytest.raises(DimensionError):
        AnalyticDisc(lambda z: np.stack([z, z], axis=-1), 2, logarithm=lambda z: z)


def test_logarithm_is_ignored_outside_the_punctured_disc(grid):
    report = contains_disc(UnitDisc(), covering_disc(0.3, 1.0, 1), grid)
    assert report.verdict == CONTAINED
    assert report.min_modulus is None
