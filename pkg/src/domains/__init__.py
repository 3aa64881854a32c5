"""Model domains, defining functions and disc containment."""
from domains.containment import ContainmentReport, GridConfig, contains_disc
from domains.model import Ellipsoid, HalfPlane, ModelDomain, Polydisc, PuncturedDisc, UnitDisc, YuDomain
from domains.registry import domain_from_id


def rho(domain, z):
    return domain.rho(z)


def grad_rho(domain, z):
    return domain.grad_rho(z)


__all__ = [
    "ContainmentReport", "GridConfig", "contains_disc",
    "Ellipsoid", "HalfPlane", "ModelDomain", "Polydisc", "PuncturedDisc", "UnitDisc", "YuDomain",
    "domain_from_id", "rho", "grad_rho",
]
