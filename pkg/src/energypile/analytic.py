"""Closed-form axial response of an energy pile.

The pile is a thermo-elastic bar on a continuous linear shear spring
``k_s``, with an optional normal spring ``k_h`` at the head and either a
fixed tip (end bearing) or a stress-free tip (fully floating).  Under a
uniform temperature change ``dT`` and a head force ``F`` the displacement
satisfies ``u'' = psi**2 u`` with ``psi**2 = (p / A) (k_s / E)``.

Thermal and mechanical parts are evaluated separately and summed.  The
head spring enters the thermal part only: ``F`` is a prescribed head
force and its terms carry no ``k_h``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from scipy import optimize

from . import _hyperbolic as hyp
from .model import (
    CaseDefinition,
    CaseMismatchError,
    Grid,
    LoadCase,
    PileMaterial,
    PileSection,
    RestraintSet,
    Tip,
    psi_of,
)

__all__ = [
    "Component",
    "ResponseProfile",
    "DerivedSummary",
    "EquivalentThermalLoad",
    "MultipleTensionZonesError",
    "compute_psi",
    "equivalent_thermal_load",
    "null_point",
    "evaluate",
    "thermal_profile",
    "mechanical_profile",
    "combined_profile",
    "superpose",
    "interface_shear",
    "tension_zone",
    "summarize",
]


class Component(enum.Enum):
    THERMAL = "thermal"
    MECHANICAL = "mechanical"
    COMBINED = "combined"


class MultipleTensionZonesError(RuntimeError):
    """More than one disjoint tensile interval was found along the pile."""


class EquivalentThermalLoad(NamedTuple):
    magnitude: float
    scenario_i: float  # +F/(A E alpha)
    scenario_ii: float  # -F/(A E alpha)


@dataclass(frozen=True, eq=False)
class ResponseProfile:
    """Nodal displacement, strain, stress and interface shear.

    ``load`` is the part of ``case.load`` this profile responds to: the
    temperature change for a thermal profile, the head force for a
    mechanical one, both for a combined one.
    """

    grid: Grid
    displacement: np.ndarray
    strain: np.ndarray
    stress: np.ndarray
    shear: np.ndarray
    component: Component
    case: CaseDefinition
    load: LoadCase

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    @property
    def depth(self) -> np.ndarray:
        return self.grid.length - self.grid.x


@dataclass(frozen=True)
class DerivedSummary:
    psi: float
    psi_L: float
    null_point: float
    equivalent_dT: float
    head_displacement: float
    tip_displacement: float
    head_stress: float
    tip_stress: float
    tension_zone: Optional[tuple[float, float]]
    max_tensile_stress: float

    @property
    def tension_zone_length(self) -> float:
        if self.tension_zone is None:
            return 0.0
        return self.tension_zone[1] - self.tension_zone[0]


def compute_psi(section: PileSection, material: PileMaterial, restraints: RestraintSet) -> float:
    """``sqrt((p / A) (k_s / E))`` in 1/m."""
    return psi_of(section, material, restraints)


def equivalent_thermal_load(F: float, section: PileSection, material: PileMaterial) -> EquivalentThermalLoad:
    """Temperature change giving the same ``u`` and ``eps`` as ``F`` on a free-headed end-bearing pile."""
    dT = F / (section.area * material.elastic_modulus * material.thermal_expansion)
    return EquivalentThermalLoad(abs(dT), dT, -dT)


def null_point(case: CaseDefinition) -> float:
    """Height above the tip where the thermal displacement vanishes.

    Zero for an end-bearing pile.  For a fully floating pile the
    closed form ``psi x0 = artanh(r)`` is evaluated as
    ``x0 = L/2 + [log1p(kappa - e) - log1p(-(1 - kappa) e)] / (2 psi)``
    with ``e = exp(-psi L)`` and ``kappa = k_h / (E psi)``, which is the
    same quantity without the cancellation in ``1 - r`` for long piles.
    """
    if case.tip is Tip.END_BEARING:
        return 0.0
    L = case.section.length
    psi = _psi(case)
    kappa = case.restraints.head_stiffness / (case.material.elastic_modulus * psi)
    e = math.exp(-psi * L)
    shift = (math.log1p(kappa - e) - math.log1p(-(1.0 - kappa) * e)) / (2.0 * psi)
    return min(0.5 * L + shift, L)


def evaluate(case: CaseDefinition, component: Component, x, load: Optional[LoadCase] = None):
    """Closed-form ``(u, eps, sigma)`` at arbitrary coordinates ``x``.

    ``load`` defaults to ``case.load``; only its temperature change is
    used for THERMAL and only its force for MECHANICAL.
    """
    load = case.load if load is None else load
    x = np.asarray(x, dtype=float)
    if component is Component.THERMAL:
        return _thermal(case, load.temperature_change, x)
    if component is Component.MECHANICAL:
        return _mechanical(case, load.head_force, x)
    ut, et, st = _thermal(case, load.temperature_change, x)
    um, em, sm = _mechanical(case, load.head_force, x)
    return ut + um, et + em, st + sm


def _thermal(case, dT, x):
    E = case.material.elastic_modulus
    free = case.material.thermal_expansion * dT
    psi = _psi(case)
    L = case.section.length
    k_h = case.restraints.head_stiffness
    x0 = null_point(case)
    a, b = psi * (x - x0), psi * (L - x0)
    t = math.tanh(b)
    u = free * hyp.sinh_over_cosh(a, b) / (psi + (k_h / E) * t)
    ratio = hyp.cosh_over_cosh(a, b) / (1.0 + k_h / (E * psi) * t)
    eps = free * ratio
    sigma = E * free * (ratio - 1.0)
    return u, eps, sigma


def _mechanical(case, F, x):
    A = case.section.area
    E = case.material.elastic_modulus
    psi = _psi(case)
    psi_L = psi * case.section.length
    if case.tip is Tip.END_BEARING:
        shape_u, shape_eps = hyp.sinh_over_cosh(psi * x, psi_L), hyp.cosh_over_cosh(psi * x, psi_L)
    else:
        shape_u, shape_eps = hyp.cosh_over_sinh(psi * x, psi_L), hyp.sinh_over_sinh(psi * x, psi_L)
    u = F / (A * E * psi) * shape_u
    eps = F / (A * E) * shape_eps
    sigma = F / A * shape_eps
    return u, eps, sigma


def _psi(case: CaseDefinition) -> float:
    return psi_of(case.section, case.material, case.restraints)


def _profile(case: CaseDefinition, component: Component, load: LoadCase) -> ResponseProfile:
    u, eps, sigma = evaluate(case, component, case.grid.x, load)
    return ResponseProfile(
        grid=case.grid,
        displacement=u,
        strain=eps,
        stress=sigma,
        shear=case.restraints.shear_stiffness * u,
        component=component,
        case=case,
        load=load,
    )


def thermal_profile(case: CaseDefinition) -> ResponseProfile:
    return _profile(case, Component.THERMAL, LoadCase(0.0, case.load.temperature_change))


def mechanical_profile(case: CaseDefinition) -> ResponseProfile:
    return _profile(case, Component.MECHANICAL, LoadCase(case.load.head_force, 0.0))


def combined_profile(case: CaseDefinition) -> ResponseProfile:
    return superpose(thermal_profile(case), mechanical_profile(case))


def superpose(first: ResponseProfile, second: ResponseProfile) -> ResponseProfile:
    """Node-wise sum of two profiles of the same pile on the same grid.

    The result carries the summed load, so the sum of the thermal and
    mechanical profiles of one case carries that case's load.
    """
    if not _same_pile(first.case, second.case) or first.grid != second.grid:
        raise CaseMismatchError("profiles describe different piles or grids")
    load = LoadCase(
        first.load.head_force + second.load.head_force,
        first.load.temperature_change + second.load.temperature_change,
    )
    return ResponseProfile(
        grid=first.grid,
        displacement=first.displacement + second.displacement,
        strain=first.strain + second.strain,
        stress=first.stress + second.stress,
        shear=first.shear + second.shear,
        component=Component.COMBINED,
        case=first.case.with_load(load),
        load=load,
    )


def interface_shear(profile: ResponseProfile) -> np.ndarray:
    return profile.case.restraints.shear_stiffness * profile.displacement


def tension_zone(profile: ResponseProfile) -> Optional[tuple[float, float]]:
    """Interval ``[x_lo, x_hi]`` where the axial stress is tensile.

    Sign changes are bracketed on the grid and then refined by bisection
    on the closed-form stress to ``1e-9 L``.  Returns ``None`` when the
    stress is nowhere positive.

    Raises
    ------
    MultipleTensionZonesError
        If the tensile nodes do not form one contiguous run.
    """
    x = profile.grid.x
    positive = profile.stress > 0.0
    if not positive.any():
        return None
    idx = np.flatnonzero(positive)
    if np.any(np.diff(idx) != 1):
        raise MultipleTensionZonesError(f"{np.count_nonzero(np.diff(idx) != 1) + 1} disjoint tensile runs")

    L = profile.case.section.length
    i, j = idx[0], idx[-1]

    def sigma(xi):
        return float(evaluate(profile.case, profile.component, xi, profile.load)[2])

    lo = x[0] if i == 0 else optimize.bisect(sigma, x[i - 1], x[i], xtol=1e-9 * L)
    hi = x[-1] if j == x.size - 1 else optimize.bisect(sigma, x[j], x[j + 1], xtol=1e-9 * L)
    return float(lo), float(hi)


def summarize(thermal: ResponseProfile, mechanical: ResponseProfile, combined: ResponseProfile) -> DerivedSummary:
    cases = (thermal.case, mechanical.case, combined.case)
    if not all(_same_pile(cases[0], c) for c in cases[1:]) or not (thermal.grid == mechanical.grid == combined.grid):
        raise CaseMismatchError("profiles describe different piles or grids")
    expected = LoadCase(mechanical.load.head_force, thermal.load.temperature_change)
    if combined.load != expected:
        raise CaseMismatchError(f"combined load {combined.load} is not the sum of its parts {expected}")

    case = combined.case
    psi = _psi(case)
    zone = tension_zone(combined)
    return DerivedSummary(
        psi=psi,
        psi_L=psi * case.section.length,
        null_point=null_point(case),
        equivalent_dT=equivalent_thermal_load(expected.head_force, case.section, case.material).magnitude,
        head_displacement=float(combined.displacement[-1]),
        tip_displacement=float(combined.displacement[0]),
        head_stress=float(combined.stress[-1]),
        tip_stress=float(combined.stress[0]),
        tension_zone=zone,
        max_tensile_stress=max(0.0, float(combined.stress.max())),
    )


def _same_pile(a: CaseDefinition, b: CaseDefinition) -> bool:
    return (a.section, a.material, a.restraints, a.grid) == (b.section, b.material, b.restraints, b.grid)
