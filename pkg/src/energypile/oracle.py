"""Finite-difference solution of the pile boundary-value problem.

Equilibrium of a pile slice with a linear interface spring gives

    A E u'' = p k_s u          on 0 < x < L

with ``sigma = E (u' - alpha dT)``.  Boundary conditions:

* end-bearing tip      u(0) = 0
* fully floating tip   sigma(0) = 0, i.e. u'(0) = alpha dT
* thermal head         E (u'(L) - alpha dT) = -k_h u(L)
* mechanical head      E u'(L) = F / A

Derivative conditions use a centred ghost node so the scheme stays
second order up to the boundary.  This module does not use the closed
forms to build its solution; ``convergence_study`` imports them only as
the reference to measure against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy import linalg

from .analytic import Component, ResponseProfile
from .model import CaseDefinition, CaseMismatchError, Grid, Tip, build_uniform_grid, psi_of

__all__ = [
    "SingularSystemError",
    "FdSolution",
    "ConvergenceReport",
    "ErrorNorm",
    "solve_fd",
    "convergence_study",
    "compare",
    "equilibrium_residual",
]


class SingularSystemError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class FdSolution:
    grid: Grid
    displacement: np.ndarray
    strain: np.ndarray
    stress: np.ndarray
    shear: np.ndarray
    component: Component
    case: CaseDefinition


@dataclass(frozen=True)
class ConvergenceReport:
    node_counts: tuple[int, ...]
    error_norms: tuple[float, ...]
    pairwise_orders: tuple[float, ...]
    observed_order: float


class ErrorNorm(NamedTuple):
    max: float
    rms: float


def _boundary_data(case: CaseDefinition, component: Component):
    """Return (tip slope, head slope, head Robin coefficient, free strain)."""
    E = case.material.elastic_modulus
    if component is Component.THERMAL:
        free = case.material.thermal_expansion * case.load.temperature_change
        return free, free, case.restraints.head_stiffness / E, free
    if component is Component.MECHANICAL:
        return 0.0, case.load.head_force / (case.section.area * E), 0.0, 0.0
    raise ValueError(f"the oracle solves THERMAL or MECHANICAL, not {component}")


def solve_fd(case: CaseDefinition, component: Component, n: int) -> FdSolution:
    """Solve on ``n`` uniform nodes (``n >= 11`` and odd)."""
    if n < 11 or n % 2 == 0:
        raise ValueError(f"node count must be odd and >= 11, got {n}")
    L = case.section.length
    grid = build_uniform_grid(L, n)
    h = L / (n - 1)
    s = (psi_of(case.section, case.material, case.restraints) * h) ** 2
    g_tip, g_head, beta, free = _boundary_data(case, component)

    # banded storage for solve_banded: rows are super, main, sub diagonals
    ab = np.zeros((3, n))
    ab[0, 1:] = 1.0
    ab[1, :] = -(2.0 + s)
    ab[2, :-1] = 1.0
    rhs = np.zeros(n)

    if case.tip is Tip.END_BEARING:
        ab[1, 0], ab[0, 1] = 1.0, 0.0
    else:
        ab[0, 1] = 2.0
        rhs[0] = 2.0 * h * g_tip

    ab[2, n - 2] = 2.0
    ab[1, n - 1] = -(2.0 + s + 2.0 * h * beta)
    rhs[n - 1] = -2.0 * h * g_head

    try:
        u = linalg.solve_banded((1, 1), ab, rhs, check_finite=True)
    except linalg.LinAlgError as exc:
        raise SingularSystemError(str(exc)) from exc
    if not np.all(np.isfinite(u)):
        raise SingularSystemError("non-finite solution")

    eps = np.gradient(u, h, edge_order=2)
    if case.tip is Tip.FULLY_FLOATING:
        eps[0] = g_tip
    eps[-1] = g_head - beta * u[-1]
    E = case.material.elastic_modulus
    return FdSolution(
        grid=grid,
        displacement=u,
        strain=eps,
        stress=E * (eps - free),
        shear=case.restraints.shear_stiffness * u,
        component=component,
        case=case.with_grid(grid),
    )


def equilibrium_residual(sol: FdSolution) -> float:
    """Relative imbalance of head force, tip force and integrated shaft shear."""
    s = sol.case.section
    N_head, N_tip = s.area * sol.stress[-1], s.area * sol.stress[0]
    shaft = s.perimeter * np.trapezoid(sol.shear, sol.grid.x)
    gross = s.perimeter * np.trapezoid(np.abs(sol.shear), sol.grid.x)
    scale = max(abs(N_head), abs(N_tip), gross, np.finfo(float).tiny)
    return abs(N_head - N_tip - shaft) / scale


def _reference(case: CaseDefinition, component: Component) -> ResponseProfile:
    from . import analytic

    if component is Component.THERMAL:
        return analytic.thermal_profile(case)
    return analytic.mechanical_profile(case)


def convergence_study(case: CaseDefinition, component: Component, node_counts: Sequence[int]) -> ConvergenceReport:
    """Max-norm displacement error against the closed form under refinement.

    The observed order is the least-squares slope of ``log(error)``
    against ``log(h)``; pairwise orders are kept for inspection.
    """
    counts = tuple(int(n) for n in node_counts)
    if len(counts) < 3:
        raise ValueError("need at least 3 node counts")
    if any(b <= a for a, b in zip(counts, counts[1:])):
        raise ValueError("node counts must be increasing")
    errors = []
    for n in counts:
        sol = solve_fd(case, component, n)
        ref = _reference(sol.case, component)
        errors.append(_rel_max(sol.displacement - ref.displacement, ref.displacement))
    h = np.array([case.section.length / (n - 1) for n in counts])
    e = np.array(errors)
    pairwise = tuple(float(v) for v in np.log(e[:-1] / e[1:]) / np.log(h[:-1] / h[1:]))
    slope = float(np.polyfit(np.log(h), np.log(e), 1)[0])
    return ConvergenceReport(counts, tuple(errors), pairwise, slope)


def compare(analytic: ResponseProfile, fd: FdSolution) -> dict[str, ErrorNorm]:
    """Per-field relative errors at the nodes the two grids share.

    Errors are normalised by the analytic field's largest magnitude.
    """
    a_case, f_case = analytic.case, fd.case
    if analytic.component is not fd.component:
        raise CaseMismatchError(f"components differ: {analytic.component} vs {fd.component}")
    if (a_case.section, a_case.material, a_case.restraints) != (f_case.section, f_case.material, f_case.restraints):
        raise CaseMismatchError("analytic and finite-difference cases differ")
    if _relevant_load(analytic.load, analytic.component) != _relevant_load(f_case.load, fd.component):
        raise CaseMismatchError("analytic and finite-difference loads differ")

    na, nf = analytic.grid.node_count, fd.grid.node_count
    if nf < na or (nf - 1) % (na - 1):
        raise CaseMismatchError(f"finite-difference grid ({nf}) does not refine the analytic grid ({na})")
    step = (nf - 1) // (na - 1)
    L = a_case.section.length
    if not np.allclose(fd.grid.x[::step], analytic.grid.x, rtol=0.0, atol=1e-12 * L):
        raise CaseMismatchError("grids do not share nodes")

    out = {}
    for name in ("displacement", "strain", "stress", "shear"):
        ref = getattr(analytic, name)
        diff = getattr(fd, name)[::step] - ref
        scale = np.max(np.abs(ref))
        scale = scale if scale > 0 else 1.0
        out[name] = ErrorNorm(float(np.max(np.abs(diff)) / scale), float(np.sqrt(np.mean(diff**2)) / scale))
    return out


def _relevant_load(load, component):
    if component is Component.THERMAL:
        return load.temperature_change
    return load.head_force


def _rel_max(diff, ref) -> float:
    scale = np.max(np.abs(ref))
    return float(np.max(np.abs(diff)) / (scale if scale > 0 else 1.0))
