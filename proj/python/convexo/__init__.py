"""Free spectraballs, free spectrahedra and convexotonic maps.

Tuples are lists of complex numpy arrays of equal shape.
"""

import json

from . import _convexo
from ._convexo import (
    ConvexoError,
    algebra_closure,
    ball_membership,
    boundary_scale,
    convexotonic_residual,
    eval_map,
    lambda_eval,
    spec_membership,
    structure_constants,
    tuple_schema,
)

__all__ = [
    "ConvexoError",
    "algebra_closure",
    "ball_membership",
    "boundary_scale",
    "convexotonic_residual",
    "eval_map",
    "example_catalog",
    "lambda_eval",
    "spec_membership",
    "structure_constants",
    "sv_probe",
    "tuple_schema",
    "verify_theorem",
]


def sv_probe(a, trials=10000, seed=42):
    """Probe result as a dict: result, trials_used, certificate or obstructions."""
    return json.loads(_convexo.sv_probe(a, trials, seed))


def verify_theorem(e, b, z, m, samples=30, seed=42):
    return json.loads(_convexo.verify_theorem(e, b, z, m, samples, seed))


def example_catalog(seed=42):
    return json.loads(_convexo.example_catalog(seed))
