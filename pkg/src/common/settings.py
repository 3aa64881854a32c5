# src/common/settings.py
import os

from common.errors import UsageError

# --- Environment ---
LOG_LEVEL = os.getenv("KOBLAB_LOG_LEVEL", "WARNING")

# --- Grids ---
GRID_SIZE = 4096
LADDER = (0.9, 0.99, 0.999)
CONTAINMENT_MARGIN = 1e-9
ATTACH_TOL = 1e-9
PUNCTURE_MIN_MODULUS = 1e-9

# --- Holomorphic core ---
VANISHING_TOL = 1e-10
ANCHOR_RTOL = 1e-10
ZERO_THRESHOLD = 1e-12
RADIAL_STEPS = 256
CAUCHY_NODES = 1024
TAYLOR_RADIUS = 0.5
TAYLOR_NODES = 256
TAYLOR_LENGTH = 24

# --- Search ---
SEARCH_DEGREE = 12
SEARCH_RESTARTS = 16
SEARCH_STAGES = 5
SEARCH_NODES = 256
SEARCH_STAGE_EVALUATIONS = 400
JET_TOL = 1e-9

# --- Schwarz oracles ---
EQUALITY_DETECT = 1e-8
EQUALITY_CONFIRM = 1e-7

# --- Stationarity ---
STATIONARY_RESIDUAL = 1e-8
STATIONARY_MARGIN = 1e-6
TRACE_EXCLUSION = 1e-8


def thread_count():
    """KOBLAB_THREADS as a positive integer (default 1)."""
    text = os.getenv("KOBLAB_THREADS", "1").strip()
    try:
        threads = int(text)
    except ValueError:
        threads = 0
    if threads < 1:
        raise UsageError(f"KOBLAB_THREADS must be a positive integer, got {text!r}")
    return threads


def worker_count(tasks):
    """Threads to use for ``tasks`` independent jobs."""
    return max(1, min(thread_count(), tasks))
