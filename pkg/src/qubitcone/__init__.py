"""Qubit measurement elements as rescaled Lorentz transforms.

Unnormalized qubit states map isometrically onto the Minkowski future cone;
measurement elements act on that cone as rescaled restricted Lorentz
transforms (or rescaled null boosts for projective effects). This package
converts in both directions and verifies the invariants tying the two
pictures together.
"""
from .conemap import (
    ConeMembership,
    bloch_section,
    cone_membership,
    eta_conjugate,
    hs_inner,
    minkowski,
    mixedness,
    phi,
    phi_inv,
)
from .correspond import (
    EffectGeometry,
    ElementFamily,
    Measurement,
    apply_element,
    complete_to_measurement,
    element_to_lorentz,
    info_measure,
    lambda_max,
    lorentz_to_element,
    measurement,
    prop2_invariants,
    validate,
)
from .adjoint import psi, psi_of_sqrt, psi_of_unitary
from .lorentz import (
    LorentzDecomposition,
    Velocity,
    classify,
    decompose,
    null_boost_rescaled,
    pure_boost,
    rotation4,
    spinor_lift,
    velocity,
)
from .qmat import (
    SIGMA,
    adjoint,
    det,
    eigenvalues,
    herm2,
    hermitize,
    is_positive,
    mat2,
    mul,
    polar_decompose,
    sqrt_psd,
    trace,
)
from .sim import (
    ObserverBoost,
    ScenarioOutcome,
    boosted_probabilities,
    observer_boost,
    report_invariants,
    scenario1_sample,
)

__all__ = [name for name in dir() if not name.startswith("_")]
