"""Boundary weights certifying k-stationarity of attached discs."""
