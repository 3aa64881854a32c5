# tests/test_holo.py
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from common.errors import AnchorError, BranchError, OutOfRangeError, ParameterError, PoleError
from holo.fourier import BoundaryGrid, cauchy_taylor, fourier_coefficients, inverse_fourier, lattice, sample_boundary
from holo.maps import blaschke, blaschke_power, cayley, exprel, inverse_cayley
from holo.roots import holomorphic_log, zero_free_power, zero_free_root
from holo.series import ComplexSeries, VanishingOrder, eval_series, kth_derivative_at_zero, vanishing_order

COEFFS = st.lists(st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False),
                  min_size=1, max_size=8)
DISC_POINTS = st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False)


# --- Series ---

@given(coeffs=COEFFS, zeta=DISC_POINTS)
def test_series_matches_numpy_polyval(coeffs, zeta):
    series = ComplexSeries(coeffs)
    expected = np.polynomial.polynomial.polyval(zeta, coeffs)
    assert abs(series(zeta) - expected) <= 1e-9 * max(1.0, abs(expected))


def test_eval_series_on_arrays():
    series = ComplexSeries([1.0, 0.0, 1j])
    zeta = np.array([0.0, 0.5, -0.5j])
    assert np.allclose(eval_series(series, zeta), 1.0 + 1j * zeta ** 2)
    assert eval_series(series, 0.5) == pytest.approx(1.0 + 0.25j)


def test_series_degree_and_shift():
    series = ComplexSeries([1.0, 2.0])
    assert series.degree == 1
    shifted = series.shifted(3)
    assert shifted.degree == 4
    assert shifted(0.5) == pytest.approx(0.5 ** 3 * series(0.5))


def test_series_is_read_only():
    series = ComplexSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        series.coefficients[0] = 3.0


def test_kth_derivative():
    series = ComplexSeries([1.0, 2.0, 3.0])
    assert kth_derivative_at_zero(series, 2) == 6.0
    with pytest.raises(OutOfRangeError):
        kth_derivative_at_zero(series, 3)
    with pytest.raises(IndexError):
        kth_derivative_at_zero(series, -1)


@pytest.mark.parametrize("coeffs, order", [
    ([5.0, 0.0, 0.0, 2.0], 3),
    ([1.0, 1e-14, 1.0], 2),
    ([0.0, 1.0], 1),
])
def test_vanishing_order(coeffs, order):
    assert vanishing_order(coeffs) == VanishingOrder(order)


def test_vanishing_order_constant_and_vector():
    assert vanishing_order([3.0, 0.0, 0.0]).infinite
    assert str(vanishing_order([3.0])) == "infinite"
    rows = np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [1.0, 0.0]])
    order = vanishing_order(rows)
    assert order.order == 2
    assert order.at_least(2) and not order.at_least(3)


# --- Maps ---

def test_blaschke_is_an_automorphism(circle):
    a = 0.3 - 0.4j
    assert blaschke(a, a) == 0
    assert np.allclose(np.abs(blaschke(a, circle / 0.9)), 1.0)
    assert np.all(np.abs(blaschke(a, circle)) < 1.0)
    with pytest.raises(ParameterError):
        blaschke(1.0, 0.5)


def test_blaschke_power():
    assert blaschke_power(0.5, 0.2, 0) == 1.0
    assert blaschke_power(0.5, 0.2, 1) == pytest.approx(blaschke(0.5, 0.2))
    with pytest.raises(ParameterError):
        blaschke_power(0.5, 0.2, 2)


def test_cayley_pair():
    assert cayley(1j) == 0
    z = np.array([0.3 + 2.0j, -1.0 + 0.1j])
    assert np.allclose(inverse_cayley(cayley(z)), z)
    assert np.all(np.abs(cayley(z)) < 1.0)
    with pytest.raises(PoleError):
        cayley(-1j)
    with pytest.raises(ZeroDivisionError):
        inverse_cayley(1.0)


def test_exprel():
    assert exprel(0.0) == 1.0
    assert exprel(1e-10) == pytest.approx(1.0)
    assert exprel(1.0) == pytest.approx(math.e - 1.0)
    assert np.allclose(exprel(np.array([2.0, 1j])), np.expm1(np.array([2.0, 1j])) / np.array([2.0, 1j]))


# --- Roots and logarithms ---

def test_cube_root_follows_anchor(circle):
    def base(z):
        return (1.0 + z / 2.0) ** 3

    root = zero_free_root(base, 3)
    assert np.allclose(root(circle), 1.0 + circle / 2.0)
    omega = np.exp(2j * np.pi / 3)
    rotated = zero_free_root(base, 3, anchor=omega)
    assert np.allclose(rotated(circle), omega * (1.0 + circle / 2.0))



@pytest.mark.parametrize("seed", range(100))
def test_root_of_zero_free_product(seed, circle):
    rng = np.random.default_rng([7, seed])
    zeros = rng.uniform(1.3, 3.0, size=3) * np.exp(2j * np.pi * rng.uniform(size=3))
    scale = complex(rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform()))
    q = int(rng.integers(2, 6))

    def base(z):
        return scale * np.prod(1.0 - np.asarray(z, dtype=complex)[..., None] / zeros, axis=-1)

    root = zero_free_root(base, q)
    values = base(circle)
    assert np.max(np.abs(root(circle) ** q - values)) < 1e-10 * max(1.0, float(np.max(np.abs(values))))
    assert root(0.0) == pytest.approx(scale ** (1.0 / q), abs=1e-12)

def test_bad_anchor_rejected():
    with pytest.raises(AnchorError):
        zero_free_root(lambda z: 1.0 + z, 2, anchor=2.0)
    with pytest.raises(BranchError):
        zero_free_root(lambda z: 1.0 + z, 2, anchor=2.0)


def test_log_continues_past_principal_branch(circle):
    values = holomorphic_log(lambda z: np.exp(5.0 * z + 1.0), circle)
    assert np.allclose(values, 5.0 * circle + 1.0)


def test_log_of_map_with_zero_fails(circle):
    with pytest.raises(BranchError):
        holomorphic_log(lambda z: z - 0.5, circle)
    with pytest.raises(BranchError):
        zero_free_power(lambda z: z, 0.5)


def test_real_power_is_principal(circle):
    power = zero_free_power(lambda z: 1.0 - 0.5 * z, 2.5)
    assert np.allclose(power(circle), (1.0 - 0.5 * circle) ** 2.5)


# --- Fourier ---

def test_lattice_validation():
    assert lattice(8).shape == (8,)
    with pytest.raises(ParameterError):
        lattice(6)
    with pytest.raises(ParameterError):
        lattice(8, 0.0)


def test_fourier_coefficients_pick_out_modes():
    grid = sample_boundary(lambda z: z ** 3 + 2.0 / z ** 2, 64)
    coeffs = fourier_coefficients(grid)
    assert coeffs.at(3) == pytest.approx(1.0)
    assert coeffs.at(-2) == pytest.approx(2.0)
    assert abs(coeffs.at(1)) < 1e-12
    assert coeffs.negative(4).shape == (4,)
    assert coeffs.negative(4)[2] == pytest.approx(2.0)
    with pytest.raises(ParameterError):
        coeffs.at(40)


def test_inverse_fourier_reproduces_samples():
    samples = np.exp(lattice(32))
    coeffs = fourier_coefficients(BoundaryGrid(32, 1.0, samples))
    assert np.allclose(inverse_fourier(coeffs), samples)



@settings(max_examples=50, deadline=None)
@given(coeffs=st.lists(st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
                      min_size=1, max_size=11),
       radius=st.sampled_from([1.0, 0.8, 0.5]))
def test_fourier_round_trip_of_polynomials(coeffs, radius):
    grid = sample_boundary(lambda z: np.polynomial.polynomial.polyval(z, coeffs), 64, radius)
    transform = fourier_coefficients(grid)
    assert np.allclose(transform.taylor(len(coeffs)), coeffs, atol=1e-11)
    assert np.allclose(transform.negative(), 0.0, atol=1e-12)
    assert np.allclose(inverse_fourier(transform), grid.samples, atol=1e-12)

def test_taylor_rescaled_from_inner_circle():
    grid = sample_boundary(lambda z: 1.0 + 2.0 * z + 3.0 * z ** 2, 32, radius=0.5)
    assert np.allclose(fourier_coefficients(grid).taylor(3), [1.0, 2.0, 3.0])


@settings(max_examples=25, deadline=None)
@given(center=st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False))
def test_cauchy_taylor_of_geometric_series(center):
    coeffs = cauchy_taylor(lambda z: 1.0 / (1.0 - z), center, (1.0 - abs(center)) / 2.0, 256, 6)
    expected = (1.0 - center) ** -(np.arange(6) + 1.0)
    assert np.allclose(coeffs, expected, rtol=1e-10)


def test_cauchy_taylor_vector_and_limits():
    coeffs = cauchy_taylor(lambda z: np.stack([np.exp(z), z ** 2], axis=-1), 0.0, 0.5, 128, 5)
    assert np.allclose(coeffs[:, 0], [1.0 / math.factorial(j) for j in range(5)])
    assert np.allclose(coeffs[:, 1], [0.0, 0.0, 1.0, 0.0, 0.0])
    with pytest.raises(ParameterError):
        cauchy_taylor(np.exp, 0.0, 0.5, 16, 9)
