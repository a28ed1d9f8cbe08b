"""Domain types, validation and grids for a single energy pile.

All quantities are SI: metres, pascals, newtons, degrees Celsius.
The axial coordinate ``x`` runs upward from the pile tip (``x = 0``)
to the pile head (``x = L``).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "PSI_L_RANGE",
    "DEFAULT_NODES",
    "Tip",
    "Violation",
    "ValidationError",
    "CaseMismatchError",
    "PileSection",
    "PileMaterial",
    "RestraintSet",
    "LoadCase",
    "Grid",
    "CaseDefinition",
    "build_circular_section",
    "build_uniform_grid",
    "validate_case",
    "psi_of",
    "same_physics",
]

# Admissible open interval for the dimensionless product psi * L.
PSI_L_RANGE = (1e-8, 700.0)
DEFAULT_NODES = 1001


class Tip(enum.Enum):
    """Tip condition, i.e. the two limits of the tip spring stiffness."""

    END_BEARING = "end_bearing"  # k_b -> infinity, u(0) = 0
    FULLY_FLOATING = "fully_floating"  # k_b -> 0, sigma(0) = 0


@dataclass(frozen=True)
class Violation:
    code: str
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}[{self.field}]: {self.message}"


class ValidationError(ValueError):
    """Raised with every invariant violation found, not just the first."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))

    @property
    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


class CaseMismatchError(ValueError):
    """Two profiles or solutions do not describe the same problem."""


@dataclass(frozen=True)
class PileSection:
    length: float
    perimeter: float
    area: float

    @classmethod
    def circular(cls, diameter: float, length: float) -> "PileSection":
        return build_circular_section(diameter, length)


@dataclass(frozen=True)
class PileMaterial:
    elastic_modulus: float
    thermal_expansion: float


@dataclass(frozen=True)
class RestraintSet:
    shear_stiffness: float
    head_stiffness: float = 0.0
    tip: Tip = Tip.END_BEARING


@dataclass(frozen=True)
class LoadCase:
    """Head force (tension positive) and uniform temperature change (heating positive)."""

    head_force: float = 0.0
    temperature_change: float = 0.0

    def scaled(self, factor: float) -> "LoadCase":
        return LoadCase(self.head_force * factor, self.temperature_change * factor)


@dataclass(frozen=True, eq=False)
class Grid:
    """Ascending nodal coordinates from tip (0) to head (L)."""

    x: np.ndarray = field(repr=False)

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        x.setflags(write=False)
        object.__setattr__(self, "x", x)

    @property
    def node_count(self) -> int:
        return self.x.size

    @property
    def length(self) -> float:
        return float(self.x[-1])

    def __len__(self) -> int:
        return self.x.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return np.array_equal(self.x, other.x)

    def __hash__(self) -> int:
        return hash(self.x.tobytes())

    def __repr__(self) -> str:
        return f"Grid(n={self.x.size}, L={self.x[-1]!r})"


@dataclass(frozen=True)
class CaseDefinition:
    section: PileSection
    material: PileMaterial
    restraints: RestraintSet
    load: LoadCase
    grid: Grid

    @property
    def tip(self) -> Tip:
        return self.restraints.tip

    def with_load(self, load: LoadCase) -> "CaseDefinition":
        return CaseDefinition(self.section, self.material, self.restraints, load, self.grid)

    def with_head_stiffness(self, k_h: float) -> "CaseDefinition":
        r = self.restraints
        return CaseDefinition(
            self.section,
            self.material,
            RestraintSet(r.shear_stiffness, k_h, r.tip),
            self.load,
            self.grid,
        )

    def with_grid(self, grid: Grid) -> "CaseDefinition":
        return CaseDefinition(self.section, self.material, self.restraints, self.load, grid)


def build_circular_section(d: float, L: float) -> PileSection:
    """Solid circular section: ``p = pi d`` and ``A = pi d**2 / 4``."""
    bad = []
    if not _positive(d):
        bad.append(Violation("NonPositiveParameter", "diameter", f"d must be > 0, got {d!r}"))
    if not _positive(L):
        bad.append(Violation("NonPositiveParameter", "length", f"L must be > 0, got {L!r}"))
    if bad:
        raise ValidationError(bad)
    return PileSection(length=float(L), perimeter=math.pi * d, area=math.pi * d * d / 4.0)


def build_uniform_grid(L: float, n: int = DEFAULT_NODES) -> Grid:
    if int(n) != n or n < 2:
        raise ValidationError([Violation("GridMalformed", "node_count", f"need n >= 2, got {n!r}")])
    if not _positive(L):
        raise ValidationError([Violation("NonPositiveParameter", "length", f"L must be > 0, got {L!r}")])
    x = np.linspace(0.0, L, int(n))
    x[-1] = L
    return Grid(x)


def psi_of(section: PileSection, material: PileMaterial, restraints: RestraintSet) -> float:
    return math.sqrt((section.perimeter / section.area) * (restraints.shear_stiffness / material.elastic_modulus))


def validate_case(case: CaseDefinition) -> CaseDefinition:
    """Return ``case`` unchanged if every invariant holds.

    Raises
    ------
    ValidationError
        Listing every violation, with codes ``NonPositiveParameter``,
        ``PsiOutOfRange``, ``GridMalformed`` or ``NonFiniteParameter``.
    """
    bad: list[Violation] = []
    s, m, r, q = case.section, case.material, case.restraints, case.load

    for name, value in (
        ("length", s.length),
        ("perimeter", s.perimeter),
        ("area", s.area),
        ("elastic_modulus", m.elastic_modulus),
        ("thermal_expansion", m.thermal_expansion),
    ):
        if not _positive(value):
            bad.append(Violation("NonPositiveParameter", name, f"must be > 0, got {value!r}"))

    if not _finite(r.shear_stiffness) or r.shear_stiffness < 0:
        bad.append(Violation("NonPositiveParameter", "shear_stiffness", f"must be > 0, got {r.shear_stiffness!r}"))
    if not _finite(r.head_stiffness) or r.head_stiffness < 0:
        bad.append(Violation("NonPositiveParameter", "head_stiffness", f"must be >= 0, got {r.head_stiffness!r}"))
    if not isinstance(r.tip, Tip):
        bad.append(Violation("InvalidTip", "tip", f"unknown tip condition {r.tip!r}"))

    for name, value in (("head_force", q.head_force), ("temperature_change", q.temperature_change)):
        if not _finite(value):
            bad.append(Violation("NonFiniteParameter", name, f"must be finite, got {value!r}"))

    if not any(v.field in ("length", "perimeter", "area", "elastic_modulus") for v in bad) and r.shear_stiffness >= 0:
        psi_L = psi_of(s, m, r) * s.length
        lo, hi = PSI_L_RANGE
        if not lo < psi_L < hi:
            bad.append(Violation("PsiOutOfRange", "psi_L", f"psi*L = {psi_L!r} outside ({lo}, {hi})"))

    bad.extend(_grid_violations(case.grid, s.length))
    if bad:
        raise ValidationError(bad)
    return case


def same_physics(a: CaseDefinition, b: CaseDefinition) -> bool:
    """Equal in everything except the grid."""
    return (a.section, a.material, a.restraints, a.load) == (b.section, b.material, b.restraints, b.load)


def _grid_violations(grid: Grid, L: float) -> list[Violation]:
    x = grid.x
    out = []
    if x.ndim != 1 or x.size < 2:
        return [Violation("GridMalformed", "grid", "need a 1-D grid with at least 2 nodes")]
    if not np.all(np.isfinite(x)):
        out.append(Violation("GridMalformed", "grid", "non-finite coordinates"))
    if x[0] != 0.0:
        out.append(Violation("GridMalformed", "grid", f"first node must be 0 (tip), got {x[0]!r}"))
    if _positive(L) and x[-1] != L:
        out.append(Violation("GridMalformed", "grid", f"last node must equal L={L!r}, got {x[-1]!r}"))
    if np.any(np.diff(x) <= 0):
        out.append(Violation("GridMalformed", "grid", "coordinates must be strictly increasing"))
    return out


def _finite(v) -> bool:
    try:
        return math.isfinite(v)
    except TypeError:
        return False


def _positive(v) -> bool:
    return _finite(v) and v > 0
