"""Adaptive phase schedule for fixed-point amplitude amplification.

Each step j applies a fixed phase del_lam about the target axis +z followed
by an adaptive phase alpha_j about the start axis.  On the Bloch sphere the
pair acts as a net rotation about +y that moves the state vector s_j, at
signed angle gamma_j from the target, closer to the target by dbar_gamma_j.
The recursion below generates those angles; it drives gamma_j -> 0 for any
del_lam in (0, pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .bloch import Y_HAT, Z_HAT, polar_unit_vec, rotate

__all__ = [
    "MAX_SCHEDULE_STEPS",
    "ConvergenceError",
    "AfgaParams",
    "ScheduleRow",
    "dot_rj_sprime",
    "dbar_gamma",
    "alpha",
    "iter_angles",
    "build_schedule",
    "steps_to_tolerance",
]

MAX_SCHEDULE_STEPS = 10**6

# when both atan2 arguments vanish the step angle is a free gauge; use 0
_ALPHA_DEGENERACY_EPS = 1e-24


class ConvergenceError(RuntimeError):
    """An iteration failed to reach its tolerance within its step cap."""


@dataclass(frozen=True)
class AfgaParams:
    """Inputs of a schedule run: angles in radians, both within [0, pi]."""

    gamma: float
    del_lam: float
    num_steps: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma <= math.pi:
            raise ValueError(f"gamma must lie in [0, pi], got {self.gamma}")
        if not 0.0 <= self.del_lam <= math.pi:
            raise ValueError(f"del_lam must lie in [0, pi], got {self.del_lam}")
        if self.num_steps < 0:
            raise ValueError(f"num_steps must be >= 0, got {self.num_steps}")


@dataclass(frozen=True)
class ScheduleRow:
    """State of the recursion at step j.

    s_j is the Bloch vector before step j and r_j the same vector after the
    target phase alone; gamma_j is the signed angle of s_j from +z in the
    xz-plane.  alpha_j and dbar_gamma_j describe the step about to be taken.
    """

    j: int
    gamma_j: float
    dbar_gamma_j: float
    alpha_j: float
    r_j: np.ndarray
    s_j: np.ndarray


def dot_rj_sprime(gamma: float, gamma_j: float, del_lam: float) -> float:
    """Cosine of the arc between r_j and the start vector, clamped to [-1, 1].

    Spherical law of cosines for the triangle with legs gamma and gamma_j
    meeting at the target axis with dihedral angle del_lam.
    """
    d = math.cos(gamma) * math.cos(gamma_j) + math.sin(gamma) * math.sin(
        gamma_j
    ) * math.cos(del_lam)
    return max(-1.0, min(1.0, d))


def dbar_gamma(gamma: float, gamma_j: float, del_lam: float) -> float:
    """Angle removed from gamma_j by step j.

    The arc between r_j and the start axis is taken on the non-negative
    branch, so the returned decrement can exceed gamma_j (overshoot) but a
    step never increases |gamma_j| above its previous value.
    """
    d = dot_rj_sprime(gamma, gamma_j, del_lam)
    return -gamma + gamma_j + math.atan2(math.sqrt(1.0 - d * d), d)


def alpha(gamma: float, gamma_j: float, dbar_gamma_j: float, del_lam: float) -> float:
    """Start-axis phase that realizes the decrement dbar_gamma_j at step j.

    Derived by expanding sin and cos of the rotation angle that carries r_j
    onto the +y-rotated image of s_j; returned in (-pi, pi] via atan2, or 0
    when the defining pair of components is degenerate (r_j on the start
    axis, where any phase works).
    """
    d = dot_rj_sprime(gamma, gamma_j, del_lam)
    cg_j = math.cos(gamma_j)
    sg_j = math.sin(gamma_j)
    cdl = math.cos(del_lam)
    s = math.sin(gamma - gamma_j + dbar_gamma_j) * sg_j * math.sin(del_lam)
    c = math.sin(dbar_gamma_j) * (
        cg_j * sg_j * (1.0 - cdl) + math.sin(gamma - gamma_j) * d
    ) + math.cos(dbar_gamma_j) * (
        cg_j**2 + sg_j**2 * cdl - math.cos(gamma - gamma_j) * d
    )
    if s * s + c * c < _ALPHA_DEGENERACY_EPS:
        return 0.0
    return math.atan2(s, c)


def iter_angles(gamma: float, del_lam: float) -> Iterator[tuple[float, float, float]]:
    """Yield (gamma_j, dbar_gamma_j, alpha_j) for j = 0, 1, 2, ... without end."""
    gamma_j = gamma
    while True:
        dbar_j = dbar_gamma(gamma, gamma_j, del_lam)
        yield gamma_j, dbar_j, alpha(gamma, gamma_j, dbar_j, del_lam)
        gamma_j -= dbar_j


def build_schedule(params: AfgaParams) -> list[ScheduleRow]:
    """Materialize rows j = 0 .. num_steps.

    Row j records the Bloch vector s_j reached after j steps together with
    the angles of the step about to be taken, so the final row shows where
    the run landed.  s_0 lies in the xz-plane at angle gamma from +z and
    every s_j stays in that plane.
    """
    rows: list[ScheduleRow] = []
    s = polar_unit_vec(params.gamma)
    angles = iter_angles(params.gamma, params.del_lam)
    for j in range(params.num_steps + 1):
        gamma_j, dbar_j, alpha_j = next(angles)
        r = rotate(s, Z_HAT, -params.del_lam)
        rows.append(ScheduleRow(j, gamma_j, dbar_j, alpha_j, r, s))
        s = rotate(s, Y_HAT, -dbar_j)
    return rows


def steps_to_tolerance(
    gamma: float,
    del_lam: float,
    tol: float = 1e-9,
    max_steps: int = MAX_SCHEDULE_STEPS,
) -> int:
    """Smallest j with |gamma_j| < tol.

    Raises ConvergenceError past max_steps; del_lam = pi traps the iteration
    at a fixed residual angle for almost every gamma, so that case is
    expected to raise.
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    gamma_j = gamma
    for j in range(max_steps + 1):
        if abs(gamma_j) < tol:
            return j
        gamma_j -= dbar_gamma(gamma, gamma_j, del_lam)
    raise ConvergenceError(
        f"|gamma_j| did not fall below {tol} within {max_steps} steps"
    )
