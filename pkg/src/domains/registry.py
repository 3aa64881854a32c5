# src/domains/registry.py
from common.errors import UsageError
from domains.model import Ellipsoid, HalfPlane, Polydisc, PuncturedDisc, UnitDisc, YuDomain

SIMPLE = {
    "unit_disc": UnitDisc,
    "punctured_disc": PuncturedDisc,
    "half_plane": HalfPlane,
    "yu_domain": YuDomain,
}

IDENTIFIERS = ("unit_disc", "punctured_disc", "polydisc", "yu_domain", "ellipsoid:<m>", "half_plane")


def domain_from_id(text):
    """Parse a stable domain identifier such as ``ellipsoid:0.25``."""
    text = text.strip()
    if text in SIMPLE:
        return SIMPLE[text]()
    name, _, argument = text.partition(":")
    try:
        if name == "polydisc":
            return Polydisc(int(argument) if argument else 2)
        if name == "ellipsoid" and argument:
            return Ellipsoid(float(argument))
    except ValueError as exc:
        raise UsageError(f"bad domain identifier {text!r}: {exc}") from exc
    raise UsageError(f"unknown domain {text!r}; expected one of {', '.join(IDENTIFIERS)}")
