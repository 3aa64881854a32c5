# src/catalog/names.py
"""Stable catalog names used on the command line.

    yu-simple | yu-optimal | yu-param:α,β | exact-kob:t,a,b
    ellipsoid-k1:seed=S,m=M | ellipsoid-k1:centered,m=M
    ellipsoid-k1:a1=..,a2=..,alpha0=..,alpha1=..,alpha2=..,r1=..,r2=..,m=..
    blaschke:a | disc-extremal:p | covering:p[,s=S]
"""
import numpy as np

from catalog.ellipsoid import (EllipsoidKind1Params, centered_kind1_params, ellipsoid_kind1,
                               random_kind1_params, unit_disc_automorphism_disc)
from catalog.planar import covering_entry, disc_extremal_entry
from catalog.yu import (CatalogDisc, ExactKobayashiParams, YuDiscParams, exact_kobayashi_disc,
                        yu_optimal_disc, yu_parametric_disc, yu_simple_disc)
from common.errors import ParameterError, UsageError
from holo.discs import compose_power
from metrics.targets import EXACT, UPPER, JetTarget

NAMES = ("yu-simple", "yu-optimal", "yu-param:<alpha>,<beta>", "exact-kob:<t>,<a>,<b>",
         "ellipsoid-k1:seed=<S>,m=<M>", "ellipsoid-k1:centered,m=<M>", "ellipsoid-k1:<key=value,...>",
         "blaschke:<a>", "disc-extremal:<p>", "covering:<p>[,s=<S>]")


def _number(text):
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise UsageError(f"not a number: {text!r}") from exc


def _real(text):
    value = _number(text)
    if value.imag != 0:
        raise UsageError(f"expected a real number, got {text!r}")
    return value.real


def _options(text):
    options = {}
    flags = set()
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if sep:
            options[key.strip()] = value.strip()
        else:
            flags.add(key)
    return options, flags


def kind1_params_from_text(text):
    options, flags = _options(text)
    if "m" not in options:
        raise UsageError(f"ellipsoid-k1 needs m=<value>, got {text!r}")
    m = _real(options["m"])
    if "centered" in flags:
        return centered_kind1_params(m)
    if "seed" in options:
        return random_kind1_params(np.random.default_rng(int(_real(options["seed"]))), m)
    try:
        return EllipsoidKind1Params(
            _number(options["a1"]), _number(options["a2"]), _number(options.get("alpha0", "0")),
            _number(options.get("alpha1", "0")), _number(options.get("alpha2", "0")),
            int(_real(options.get("r1", "1"))), int(_real(options.get("r2", "1"))), m)
    except KeyError as exc:
        raise UsageError(f"ellipsoid-k1 parameter {exc.args[0]} missing in {text!r}") from exc


def _ellipsoid_entry(name, params):
    disc = ellipsoid_kind1(params)
    rows = disc.taylor_coefficients(2)
    target = JetTarget(rows[0], rows[1], 1) if np.any(rows[1]) else None
    return CatalogDisc(name, disc, f"ellipsoid:{params.m!r}", target, 1.0, UPPER, {"params": params})


def _blaschke_entry(name, a):
    disc = unit_disc_automorphism_disc(a)
    target = JetTarget((-a,), (1.0 - abs(a) ** 2,), 1)
    return CatalogDisc(name, disc, "unit_disc", target, 1.0, EXACT, {"a": a})


def resolve(name, lift=1):
    """Catalog entry for ``name``, optionally precomposed with ζ^lift."""
    head, _, argument = name.strip().partition(":")
    try:
        if head == "yu-simple" and not argument:
            entry = yu_simple_disc()
        elif head == "yu-optimal" and not argument:
            entry = yu_optimal_disc()
        elif head == "yu-param":
            alpha, beta = (_real(x) for x in argument.split(","))
            entry = yu_parametric_disc(YuDiscParams(alpha, beta))
        elif head == "exact-kob":
            t, a, b = argument.split(",")
            entry = exact_kobayashi_disc(ExactKobayashiParams(_real(t), _number(a), _number(b)))
        elif head == "ellipsoid-k1":
            entry = _ellipsoid_entry(name, kind1_params_from_text(argument))
        elif head == "blaschke" and argument:
            entry = _blaschke_entry(name, _number(argument))
        elif head == "disc-extremal" and argument:
            entry = disc_extremal_entry(name, _number(argument))
        elif head == "covering" and argument:
            point, _, rest = argument.partition(",")
            options, _ = _options(rest)
            entry = covering_entry(name, _number(point), _real(options["s"]) if "s" in options else None)
        else:
            raise UsageError(f"unknown catalog name {name!r}; known: {', '.join(NAMES)}")
    except ValueError as exc:
        if isinstance(exc, ParameterError):
            raise
        raise UsageError(f"cannot parse catalog name {name!r}: {exc}") from exc
    return lift_entry(entry, lift)


def lift_entry(entry, lift):
    if lift == 1:
        return entry
    if lift < 1:
        raise UsageError(f"lift must be a positive integer, got {lift!r}")
    disc = compose_power(entry.disc, lift)
    target = entry.target.with_order(entry.target.k * lift) if entry.target else None
    return CatalogDisc(f"{entry.name} --lift {lift}", disc, entry.domain_id, target, entry.r, UPPER,
                       dict(entry.parts, source=entry))
