"""
Shape-invariant Jacobi-type potentials (GPT, Scarf I, Scarf II), their
parameter-swapped branches and exceptional X_m extensions.
"""

from .errors import SolvPotError
from .potentials import (
    Branch,
    Family,
    ParamSet,
    PotentialSpec,
    bound_spectrum,
    eval_partner,
    eval_potential,
    eval_superpotential,
    eval_wavefunction,
    validate,
)

__all__ = [
    "Branch",
    "Family",
    "ParamSet",
    "PotentialSpec",
    "SolvPotError",
    "bound_spectrum",
    "eval_partner",
    "eval_potential",
    "eval_superpotential",
    "eval_wavefunction",
    "validate",
]
