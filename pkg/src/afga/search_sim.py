"""Unstructured search over 2^nb basis states with the adaptive schedule.

The start state is the uniform superposition, so the angle between start
and target is gamma = 2 arccos(2^{-nb/2}) and the whole run stays inside
the two-dimensional span of the target state and the uniform superposition
of the rest.  Both phase operators act in O(2^nb) time as rank-1 updates;
no 2^nb x 2^nb matrix is ever formed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .schedule import iter_angles, steps_to_tolerance

__all__ = [
    "MAX_NB",
    "SearchState",
    "SearchTrace",
    "init_uniform",
    "apply_target_phase",
    "apply_sprime_phase",
    "run_afga_search",
]

MAX_NB = 24


@dataclass(frozen=True)
class SearchState:
    """Amplitude vector over 2^nb basis states with a marked target index."""

    nb: int
    amps: np.ndarray
    target_index: int

    @property
    def num_states(self) -> int:
        return self.amps.size

    @property
    def gamma(self) -> float:
        """Angle between the uniform start state and the target, in radians."""
        return 2.0 * math.acos(2.0 ** (-0.5 * self.nb))

    @property
    def success_probability(self) -> float:
        return float(abs(self.amps[self.target_index]) ** 2)


@dataclass(frozen=True)
class SearchTrace:
    """success[k] after k adaptive steps, plus whether the tol was reached."""

    success: np.ndarray
    converged: bool
    gamma: float
    del_lam: float

    @property
    def steps(self) -> int:
        return len(self.success) - 1

    @property
    def final_success(self) -> float:
        return float(self.success[-1])


def init_uniform(nb: int, target_index: int = 0) -> SearchState:
    """Uniform superposition over 2^nb states with the given marked index."""
    if not 1 <= nb <= MAX_NB:
        raise ValueError(f"nb must lie in [1, {MAX_NB}], got {nb}")
    if not 0 <= target_index < 2**nb:
        raise ValueError(
            f"target_index must lie in [0, {2**nb - 1}], got {target_index}"
        )
    amps = np.full(2**nb, 2.0 ** (-0.5 * nb), dtype=complex)
    return SearchState(nb, amps, target_index)


def apply_target_phase(state: SearchState, phase: float) -> SearchState:
    """e^{i phase |t><t|}: multiplies the target amplitude alone."""
    amps = state.amps.copy()
    amps[state.target_index] *= cmath.exp(1.0j * phase)
    return SearchState(state.nb, amps, state.target_index)


def apply_sprime_phase(state: SearchState, phase: float) -> SearchState:
    """e^{i phase |s'><s'|} with |s'> uniform: psi += (e^{i phase} - 1) <s'|psi> |s'>.

    <s'|psi> |s'> has every component equal to the mean amplitude, so the
    update is a single broadcast add.
    """
    amps = state.amps + (cmath.exp(1.0j * phase) - 1.0) * state.amps.mean()
    return SearchState(state.nb, amps, state.target_index)


def run_afga_search(
    nb: int,
    target_index: int = 0,
    del_lam: float = math.pi / 2,
    max_steps: int | None = None,
    tol: float = 1e-6,
) -> SearchTrace:
    """Drive the uniform start state onto the target with adaptive steps.

    Stops as soon as success >= 1 - tol (converged) or after max_steps
    steps (not converged; the trace is still returned so the caller can
    tell a stalled run from invalid input, which raises ValueError).  The
    default max_steps is ten times the step count predicted by the scalar
    recursion; that prediction diverges for del_lam = pi, so pass max_steps
    explicitly to study the trapped case.
    """
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must lie in (0, 1), got {tol}")
    if not 0.0 <= del_lam <= math.pi:
        raise ValueError(f"del_lam must lie in [0, pi], got {del_lam}")
    state = init_uniform(nb, target_index)
    gamma = state.gamma
    if max_steps is None:
        gamma_tol = 2.0 * math.asin(math.sqrt(tol))
        max_steps = 10 * max(steps_to_tolerance(gamma, del_lam, gamma_tol), 1)
    elif max_steps < 0:
        raise ValueError(f"max_steps must be >= 0, got {max_steps}")

    success = [state.success_probability]
    angles = iter_angles(gamma, del_lam)
    converged = success[-1] >= 1.0 - tol
    while not converged and len(success) <= max_steps:
        _, _, alpha_j = next(angles)
        state = apply_target_phase(state, del_lam)
        state = apply_sprime_phase(state, alpha_j)
        success.append(state.success_probability)
        converged = success[-1] >= 1.0 - tol
    return SearchTrace(np.array(success), converged, gamma, del_lam)
