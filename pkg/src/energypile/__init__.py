"""Axial thermo-mechanical response of single energy piles.

Closed-form displacement, strain and stress for end-bearing and fully
floating piles with an elastic head restraint, plus an independent
finite-difference solver to check them against.
"""

from .analytic import (
    Component,
    DerivedSummary,
    ResponseProfile,
    combined_profile,
    compute_psi,
    equivalent_thermal_load,
    interface_shear,
    mechanical_profile,
    null_point,
    summarize,
    superpose,
    tension_zone,
    thermal_profile,
)
from .model import (
    CaseDefinition,
    Grid,
    LoadCase,
    PileMaterial,
    PileSection,
    RestraintSet,
    Tip,
    ValidationError,
    build_circular_section,
    build_uniform_grid,
    validate_case,
)
from .study import SCENARIO_I, SCENARIO_II, canonical_case, run_scenario

__version__ = "0.1.0"

__all__ = [
    "Component",
    "DerivedSummary",
    "ResponseProfile",
    "combined_profile",
    "compute_psi",
    "equivalent_thermal_load",
    "interface_shear",
    "mechanical_profile",
    "null_point",
    "summarize",
    "superpose",
    "tension_zone",
    "thermal_profile",
    "CaseDefinition",
    "Grid",
    "LoadCase",
    "PileMaterial",
    "PileSection",
    "RestraintSet",
    "Tip",
    "ValidationError",
    "build_circular_section",
    "build_uniform_grid",
    "validate_case",
    "SCENARIO_I",
    "SCENARIO_II",
    "canonical_case",
    "run_scenario",
]
