# src/metrics/targets.py
import math
from dataclasses import dataclass, field

import numpy as np

from common import settings
from common.errors import DimensionError, ParameterError
from holo.discs import SeriesDisc

UPPER = "upper"
LOWER = "lower"
EXACT = "exact"
KINDS = (UPPER, LOWER, EXACT)


# --- Complex codec ---

def encode_complex(value):
    value = complex(value)
    return [value.real, value.imag]


def decode_complex(pair):
    return complex(pair[0], pair[1])


def encode_vector(values):
    return [encode_complex(v) for v in np.asarray(values, dtype=complex).reshape(-1)]


def decode_vector(pairs):
    return tuple(decode_complex(p) for p in pairs)


@dataclass(frozen=True)
class JetTarget:
    """Query (p, v, k) of the order-k pseudometric."""

    p: tuple
    v: tuple
    k: int = 1

    def __post_init__(self):
        p = tuple(complex(x) for x in np.atleast_1d(np.asarray(self.p, dtype=complex)))
        v = tuple(complex(x) for x in np.atleast_1d(np.asarray(self.v, dtype=complex)))
        if len(p) != len(v):
            raise DimensionError(f"base point has {len(p)} coordinates, direction has {len(v)}")
        if not any(v):
            raise ParameterError("direction v must be nonzero")
        if int(self.k) != self.k or self.k < 1:
            raise ParameterError(f"order must be a positive integer, got {self.k!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "k", int(self.k))

    @property
    def dimension(self):
        return len(self.p)

    @property
    def point(self):
        return np.asarray(self.p, dtype=complex)

    @property
    def direction(self):
        return np.asarray(self.v, dtype=complex)

    def with_order(self, k):
        return JetTarget(self.p, self.v, k)

    def to_record(self):
        return {"p": encode_vector(self.p), "v": encode_vector(self.v), "k": self.k}

    @classmethod
    def from_record(cls, record):
        return cls(decode_vector(record["p"]), decode_vector(record["v"]), record["k"])


@dataclass(frozen=True)
class JetResidual:
    base_defect: float
    lower_defect: float
    r: float
    parallel_defect: float
    valid: bool

    def to_record(self):
        return {
            "base_defect": self.base_defect,
            "lower_defect": self.lower_defect,
            "r": self.r,
            "parallel_defect": self.parallel_defect,
            "valid": self.valid,
        }


def verify_jet(disc, target, tol=settings.JET_TOL):
    """Residuals of f(0) = p, f^{(ℓ)}(0) = 0 for ℓ < k, f^{(k)}(0) = k! r v."""
    if disc.dimension != target.dimension:
        raise DimensionError(f"disc of dimension {disc.dimension} checked against a target in C^{target.dimension}")
    k = target.k
    rows = disc.taylor_coefficients(k + 1)
    base = float(np.linalg.norm(rows[0] - target.point))
    lower = max((math.factorial(j) * float(np.linalg.norm(rows[j])) for j in range(1, k)), default=0.0)
    v = target.direction
    scalar = np.vdot(v, rows[k]) / np.vdot(v, v)
    r = float(scalar.real)
    parallel = float(np.linalg.norm(rows[k] - r * v))
    scale = max(1.0, abs(r))
    valid = r > 0.0 and base < tol * scale and lower < tol * scale and parallel < tol * scale
    return JetResidual(base, lower, r, parallel, bool(valid))


@dataclass
class MetricEstimate:
    value: float
    kind: str
    target: JetTarget
    domain_id: str
    witness: object = None
    residuals: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ParameterError(f"estimate kind must be one of {KINDS}, got {self.kind!r}")
        if not self.value >= 0.0:
            raise ParameterError(f"metric value must be nonnegative, got {self.value!r}")

    def witness_record(self):
        if self.witness is None:
            return None
        if isinstance(self.witness, SeriesDisc):
            return {"name": self.witness.name, "coefficients": [encode_vector(row) for row in self.witness.coefficients]}
        return {"name": self.witness.name}

    def to_record(self):
        return {
            "domain": self.domain_id,
            "p": encode_vector(self.target.p),
            "v": encode_vector(self.target.v),
            "k": self.target.k,
            "value": self.value,
            "kind": self.kind,
            "witness": self.witness_record(),
            "residuals": self.residuals,
            "config": self.config,
            "seed": self.seed,
        }

    @classmethod
    def from_record(cls, record):
        witness = record.get("witness")
        disc = None
        if witness and "coefficients" in witness:
            rows = np.array([decode_vector(row) for row in witness["coefficients"]], dtype=complex)
            disc = SeriesDisc(rows, name=witness["name"])
        elif witness:
            disc = NamedWitness(witness["name"])
        target = JetTarget(decode_vector(record["p"]), decode_vector(record["v"]), record["k"])
        return cls(record["value"], record["kind"], target, record["domain"], disc,
                   record.get("residuals", {}), record.get("config", {}), record.get("seed"))


@dataclass(frozen=True)
class NamedWitness:
    """Placeholder for a closed-form witness known only by catalog name."""

    name: str
