"""Explicit discs: Yu domain constructions and ellipsoid extremal families."""
from catalog.ellipsoid import (EllipsoidKind1Params, EllipsoidKind2Params, centered_kind1_params,
                               ellipsoid_automorphism, ellipsoid_kind1, ellipsoid_kind2,
                               kind2_identity_residual, lift_kind1, perturbed_kind1_disc,
                               random_kind1_params, unit_disc_automorphism_disc)
from catalog.names import resolve
from catalog.planar import covering_disc, covering_preimage, disc_extremal, planar_witnesses
from catalog.yu import (CatalogDisc, ExactKobayashiParams, YuDiscParams, exact_kobayashi_disc,
                        key_equation_residual, odd_order_lift, feasibility_condition, feasibility_ratio_bound,
                        yu_optimal_disc, yu_parametric_disc, yu_reference_constants, yu_simple_disc)

__all__ = [
    "EllipsoidKind1Params", "EllipsoidKind2Params", "centered_kind1_params", "ellipsoid_automorphism",
    "ellipsoid_kind1", "ellipsoid_kind2", "kind2_identity_residual", "lift_kind1", "perturbed_kind1_disc",
    "random_kind1_params", "unit_disc_automorphism_disc", "resolve",
    "covering_disc", "covering_preimage", "disc_extremal", "planar_witnesses",
    "CatalogDisc", "ExactKobayashiParams", "YuDiscParams", "exact_kobayashi_disc", "key_equation_residual",
    "odd_order_lift", "feasibility_condition", "feasibility_ratio_bound", "yu_optimal_disc", "yu_parametric_disc",
    "yu_reference_constants", "yu_simple_disc",
]
