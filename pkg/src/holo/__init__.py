"""One-variable holomorphic core: series, special maps, roots, Fourier tools, discs."""
from holo.discs import AnalyticDisc, SeriesDisc, compose_power, constant_disc
from holo.fourier import (BoundaryGrid, FourierCoefficients, cauchy_taylor, fourier_coefficients,
                          inverse_fourier, lattice, sample_boundary)
from holo.maps import blaschke, blaschke_power, cayley, exprel, inverse_cayley
from holo.roots import holomorphic_log, zero_free_power, zero_free_root
from holo.series import ComplexSeries, VanishingOrder, eval_series, kth_derivative_at_zero, vanishing_order

__all__ = [
    "AnalyticDisc", "SeriesDisc", "compose_power", "constant_disc",
    "BoundaryGrid", "FourierCoefficients", "cauchy_taylor", "fourier_coefficients",
    "inverse_fourier", "lattice", "sample_boundary",
    "blaschke", "blaschke_power", "cayley", "exprel", "inverse_cayley",
    "holomorphic_log", "zero_free_power", "zero_free_root",
    "ComplexSeries", "VanishingOrder", "eval_series", "kth_derivative_at_zero", "vanishing_order",
]
