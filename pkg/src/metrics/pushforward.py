# src/metrics/pushforward.py
"""Push discs through holomorphic maps and check the chain rule on jets.

If ν(f − p) ≥ k then (F∘f)^{(k)}(0) = dF_p(f^{(k)}(0)), so a certificate
for K^k_Ω(p, v) ≤ 1/r becomes one for K^k_{Ω'}(F(p), dF_p v).
"""
from dataclasses import dataclass

import numpy as np

from catalog.ellipsoid import ellipsoid_automorphism
from common import settings
from common.errors import DimensionError, ParameterError
from domains.containment import contains_disc
from holo.discs import AnalyticDisc, SeriesDisc
from metrics.targets import JetTarget, verify_jet


class HolomorphicMap:
    source_dim = 1
    target_dim = 1
    name = "map"

    def __call__(self, z):
        raise NotImplementedError

    def jacobian(self, z):
        raise NotImplementedError

    def push(self, disc):
        if disc.dimension != self.source_dim:
            raise DimensionError(f"{self.name} expects discs in C^{self.source_dim}, got C^{disc.dimension}")
        return AnalyticDisc(lambda zeta: self(disc(zeta)), self.target_dim, closed=disc.closed,
                            name=f"{self.name}({disc.name})")


class LinearMap(HolomorphicMap):
    """z ↦ A z; also covers projections."""

    def __init__(self, matrix, name="linear"):
        self.matrix = np.atleast_2d(np.asarray(matrix, dtype=complex))
        self.target_dim, self.source_dim = self.matrix.shape
        self.name = name

    def __call__(self, z):
        return np.asarray(z, dtype=complex) @ self.matrix.T

    def jacobian(self, z):
        return self.matrix.copy()

    def push(self, disc):
        if disc.dimension != self.source_dim:
            raise DimensionError(f"{self.name} expects discs in C^{self.source_dim}, got C^{disc.dimension}")
        if isinstance(disc, SeriesDisc):
            return SeriesDisc(disc.coefficients @ self.matrix.T, name=f"{self.name}({disc.name})")
        pushed = super().push(disc)
        rows = disc.taylor_coefficients(settings.TAYLOR_LENGTH) @ self.matrix.T
        return AnalyticDisc(pushed.evaluator, self.target_dim, taylor=rows, closed=disc.closed, name=pushed.name)


class CoordinateEmbedding(LinearMap):
    """C^n into C^N placing coordinate j at position indices[j]."""

    def __init__(self, indices, target_dim):
        matrix = np.zeros((target_dim, len(indices)), dtype=complex)
        for column, row in enumerate(indices):
            if not 0 <= row < target_dim:
                raise ParameterError(f"embedding index {row} outside 0..{target_dim - 1}")
            matrix[row, column] = 1.0
        super().__init__(matrix, name=f"embed{tuple(indices)}")


class EllipsoidAutomorphism(HolomorphicMap):
    source_dim = 2
    target_dim = 2

    def __init__(self, a, theta, m):
        self.a = complex(a)
        self.theta = float(theta)
        self.m = float(m)
        self.name = f"F[a={self.a!r},theta={self.theta!r}]"
        ellipsoid_automorphism(self.a, self.theta, np.zeros(2), self.m)

    def __call__(self, z):
        return ellipsoid_automorphism(self.a, self.theta, z, self.m)

    def jacobian(self, z):
        z1, z2 = complex(z[0]), complex(z[1])
        a, m = self.a, self.m
        denominator = 1.0 - np.conj(a) * z1
        scale = np.exp(1j * self.theta) * (1.0 - abs(a) ** 2) ** (1.0 / (2.0 * m))
        power = np.exp(-np.log(denominator) / m)
        return np.array([
            [(1.0 - abs(a) ** 2) / denominator ** 2, 0.0],
            [scale * z2 * (np.conj(a) / m) * power / denominator, scale * power],
        ], dtype=complex)


@dataclass(frozen=True)
class PushforwardReport:
    jet_gap: float
    pushed_target: JetTarget
    r: float
    bound: float
    verdict: str | None
    ok: bool


def holomorphic_pushforward_check(F, disc, target, domain=None, grid=None, tol=1e-9):
    """Chain rule on the k-jet plus containment of F∘f in ``domain`` when given."""
    jet = verify_jet(disc, target)
    pushed = F.push(disc)
    k = target.k
    image_jet = pushed.jet(k)
    expected = F.jacobian(target.point) @ disc.jet(k)
    gap = float(np.linalg.norm(image_jet - expected)) / max(1.0, float(np.linalg.norm(expected)))
    direction = F.jacobian(target.point) @ target.direction
    pushed_target = JetTarget(np.asarray(F(target.point)).reshape(-1), direction, k)
    pushed_jet = verify_jet(pushed, pushed_target, tol=max(tol, settings.JET_TOL))
    verdict = contains_disc(domain, pushed, grid).verdict if domain is not None else None
    ok = gap < tol and jet.valid and pushed_jet.valid and abs(pushed_jet.r - jet.r) < tol * max(1.0, jet.r)
    if verdict is not None:
        ok = ok and verdict in ("contained", "attached")
    return PushforwardReport(gap, pushed_target, pushed_jet.r, 1.0 / pushed_jet.r if pushed_jet.r > 0 else float("inf"),
                             verdict, bool(ok))
