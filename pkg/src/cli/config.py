# src/cli/config.py
"""Run configuration: defaults, an optional JSON file, then explicit flags."""
import json
from dataclasses import dataclass, fields, replace

from common import settings
from common.errors import ParameterError, UsageError
from domains.containment import GridConfig
from domains.registry import domain_from_id
from metrics.search import SearchConfig
from metrics.targets import JetTarget, decode_vector

COMMANDS = ("verify-paper", "estimate", "sweep", "schwarz", "stationarity", "catalog")
FORMATS = ("json", "csv")
SWEEPS = ("degree", "feasibility")
SEEDED = ("estimate", "schwarz")


def parse_complex(text):
    try:
        return complex(str(text).replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise UsageError(f"not a complex number: {text!r}") from exc


def parse_vector(value):
    """'0,0,-1' or [[re, im], ...] or [x, ...] into a tuple of complex."""
    if isinstance(value, str):
        return tuple(parse_complex(part) for part in value.split(",") if part.strip())
    if value and isinstance(value[0], (list, tuple)):
        return tuple(decode_vector(value))
    return tuple(parse_complex(x) for x in value)


def parse_ints(value):
    if isinstance(value, str):
        try:
            return tuple(int(part) for part in value.split(",") if part.strip())
        except ValueError as exc:
            raise UsageError(f"expected comma-separated integers, got {value!r}") from exc
    return tuple(int(x) for x in value)


def parse_floats(value):
    if isinstance(value, str):
        try:
            return tuple(float(part) for part in value.split(",") if part.strip())
        except ValueError as exc:
            raise UsageError(f"expected comma-separated numbers, got {value!r}") from exc
    return tuple(float(x) for x in value)


def parse_range(value):
    """'lo,hi,count' into (lo, hi, count)."""
    lo, hi, count = (parse_floats(value) + (None, None, None))[:3]
    if count is None:
        raise UsageError(f"range needs lo,hi,count, got {value!r}")
    return lo, hi, int(count)


@dataclass(frozen=True)
class RunConfig:
    command: str = "verify-paper"
    domain: str = "unit_disc"
    p: tuple = (0j,)
    v: tuple = (1 + 0j,)
    k: int = 1
    degree: int = settings.SEARCH_DEGREE
    restarts: int = settings.SEARCH_RESTARTS
    stages: int = settings.SEARCH_STAGES
    grid: int = settings.GRID_SIZE
    ladder: tuple = settings.LADDER
    margin: float = settings.CONTAINMENT_MARGIN
    attach_tol: float = settings.ATTACH_TOL
    seed: int | None = None
    output: str | None = None
    format: str = "json"
    warm_start: str | None = None
    lift: int = 1
    lemma: str = "basic"
    samples: int = 1000
    center: complex = 0j
    map: str | None = None
    cutoff: int | None = None
    sweep: str = "degree"
    degrees: tuple = (4, 8, 12)
    t_range: tuple = (0.05, 0.95, 10)
    ratio_range: tuple = (0.0, 3.0, 13)
    checks: tuple = ()
    inject: tuple = ()
    action: str = "list"
    name: str | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.sweep not in SWEEPS:
            raise UsageError(f"sweep kind must be one of {SWEEPS}, got {self.sweep!r}")
        for label in ("k", "degree", "restarts", "stages", "lift"):
            if getattr(self, label) < 1:
                raise UsageError(f"{label} must be at least 1, got {getattr(self, label)!r}")
        if self.samples < 0:
            raise UsageError(f"samples must be nonnegative, got {self.samples!r}")
        if self.cutoff is not None and self.cutoff < 0:
            raise UsageError(f"cutoff must be nonnegative, got {self.cutoff!r}")
        if abs(self.center) >= 1.0:
            raise UsageError(f"center must lie in the unit disc, got {self.center!r}")
        if self.command in SEEDED or (self.command == "sweep" and self.sweep == "degree"):
            if self.seed is None:
                raise UsageError(f"{self.command} is randomized; pass --seed")
        try:
            self.grid_config()
        except ParameterError as exc:
            raise UsageError(str(exc)) from exc
        settings.thread_count()
        return self

    def grid_config(self):
        return GridConfig(self.grid, self.ladder, self.margin, self.attach_tol)

    def search_config(self, degree=None):
        return SearchConfig(degree or self.degree, self.restarts, self.stages, self.seed or 0, self.grid_config())

    def domain_model(self):
        return domain_from_id(self.domain)

    def target(self):
        try:
            return JetTarget(self.p, self.v, self.k)
        except ValueError as exc:
            raise UsageError(f"invalid target: {exc}") from exc


CONVERTERS = {
    "p": parse_vector,
    "v": parse_vector,
    "ladder": parse_floats,
    "degrees": parse_ints,
    "t_range": parse_range,
    "ratio_range": parse_range,
    "center": parse_complex,
    "checks": lambda value: tuple([value] if isinstance(value, str) else value),
    "inject": lambda value: tuple([value] if isinstance(value, str) else value),
}
NAMES = {f.name for f in fields(RunConfig)}


def _coerce(values):
    unknown = set(values) - NAMES
    if unknown:
        raise UsageError(f"unknown configuration keys: {', '.join(sorted(unknown))}")
    return {key: CONVERTERS[key](value) if key in CONVERTERS else value for key, value in values.items()}


def load_config_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config file {path!r} must hold a JSON object")
    return data


def build_config(command, flags, config_path=None):
    """Defaults, then the file, then every flag that was given explicitly."""
    config = RunConfig(command=command)
    if config_path:
        config = replace(config, **_coerce(load_config_file(config_path)))
    given = {key: value for key, value in flags.items() if value is not None and key in NAMES and key != "command"}
    config = replace(config, **_coerce(given), command=command)
    return config.validate()
