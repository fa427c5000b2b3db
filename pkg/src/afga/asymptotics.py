"""Limit behavior of the adaptive schedule.

Two regimes are covered: the del_lam = pi boundary, where the recursion
steps by a constant decrement and lands in a two-cycle instead of
converging, and the continuum limit, where the step index becomes a time
variable and gamma_j relaxes along the flow

    dg/dt = gamma - g - min(mu(g), 2 pi - mu(g)),

with mu(g) the arc between the start vector and the point at angle g after
the target phase.  The tail of the flow decays like e^{-(1 - cos del_lam) t}
for every start angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .schedule import AfgaParams, build_schedule

__all__ = [
    "SaturationReport",
    "ContinuumTrace",
    "saturation_analysis",
    "verify_saturation",
    "mu_of_g",
    "integrate_continuum",
    "fit_tail_rate",
    "max_initial_slope",
]

_LOCAL_ERR_TOL = 1e-8
_MAX_HALVINGS = 40
_DOMAIN_EPS = 1e-12


@dataclass(frozen=True)
class SaturationReport:
    """Where uniform stepping at del_lam = pi lands, exact in degrees.

    The decrement is the constant del_gamma = 2(180 - gamma) degrees;
    j_sat counts full decrements until the remainder gamma_jsat drops
    below del_gamma, and the tail then alternates between +/-big_gamma
    with big_gamma = min(gamma_jsat, del_gamma - gamma_jsat).
    """

    j_sat: int
    del_gamma_degs: Fraction
    gamma_jsat_degs: Fraction
    big_gamma_degs: Fraction

    @property
    def del_gamma(self) -> float:
        return math.radians(float(self.del_gamma_degs))

    @property
    def gamma_jsat(self) -> float:
        return math.radians(float(self.gamma_jsat_degs))

    @property
    def big_gamma(self) -> float:
        return math.radians(float(self.big_gamma_degs))


def saturation_analysis(gamma_degs) -> SaturationReport:
    """Exact landing point of the del_lam = pi recursion for gamma in degrees.

    Accepts int, float, str or Fraction; the arithmetic is exact rational,
    so boundary cases such as gamma_jsat = 0 come out exactly zero.
    """
    g = Fraction(gamma_degs)
    if not 90 < g < 180:
        raise ValueError(f"gamma must lie in (90, 180) degrees, got {gamma_degs}")
    del_gamma = 2 * (180 - g)
    j_sat = g // del_gamma
    gamma_jsat = g - j_sat * del_gamma
    big_gamma = min(gamma_jsat, del_gamma - gamma_jsat)
    return SaturationReport(int(j_sat), del_gamma, gamma_jsat, big_gamma)


def verify_saturation(gamma_degs, n_tail: int = 10) -> float:
    """Run the real recursion at del_lam = pi and measure the tail residual.

    Returns max over the last n_tail steps of ||gamma_j| - big_gamma| in
    radians; also checks that the tail alternates in sign whenever
    big_gamma is away from zero.
    """
    report = saturation_analysis(gamma_degs)
    gamma = math.radians(float(Fraction(gamma_degs)))
    num_steps = 10 * max(report.j_sat, 1) + n_tail
    rows = build_schedule(AfgaParams(gamma, math.pi, num_steps))
    tail = [row.gamma_j for row in rows[-n_tail:]]
    big = report.big_gamma
    if big > 1e-9:
        for prev, cur in zip(tail, tail[1:]):
            if not prev * cur < 0.0:
                raise ArithmeticError(
                    f"tail failed to alternate at gamma = {gamma_degs} degrees"
                )
    return max(abs(abs(gamma_j) - big) for gamma_j in tail)


def mu_of_g(g: float, gamma: float, del_lam: float) -> float:
    """Arc in [0, pi] between the start vector and the post-target-phase point.

    Spherical law of cosines, clamped before the arccos so that roundoff at
    the g = gamma corner cannot leave the domain.
    """
    if not -_DOMAIN_EPS <= g <= gamma + _DOMAIN_EPS or not 0.0 <= gamma <= math.pi:
        raise ValueError(f"need 0 <= g <= gamma <= pi, got g={g}, gamma={gamma}")
    c = math.cos(gamma) * math.cos(g) + math.sin(gamma) * math.sin(g) * math.cos(
        del_lam
    )
    return math.acos(max(-1.0, min(1.0, c)))


@dataclass(frozen=True)
class ContinuumTrace:
    """Accepted integration samples of the continuum flow g(t)."""

    t: np.ndarray
    g: np.ndarray
    gamma: float
    del_lam: float
    step_size: float

    def at(self, t) -> np.ndarray | float:
        """g at arbitrary times by linear interpolation of the samples."""
        return np.interp(t, self.t, self.g)


def _rhs(g: float, gamma: float, del_lam: float) -> float:
    mu = mu_of_g(g, gamma, del_lam)
    return gamma - g - min(mu, 2.0 * math.pi - mu)


def _rk4_step(g: float, h: float, gamma: float, del_lam: float) -> float:
    k1 = _rhs(g, gamma, del_lam)
    k2 = _rhs(g + 0.5 * h * k1, gamma, del_lam)
    k3 = _rhs(g + 0.5 * h * k2, gamma, del_lam)
    k4 = _rhs(g + h * k3, gamma, del_lam)
    return g + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate_continuum(
    gamma: float,
    del_lam: float,
    t_max: float,
    step_size: float = 0.01,
) -> ContinuumTrace:
    """Integrate the continuum flow from g(0) = gamma out to t_max.

    Classical RK4 with step-doubling error control: a step is accepted only
    if the full-step and two-half-step results agree to within 1e-8, else
    the step is retried at half size.  The slope is checked to stay
    non-positive at every accepted step, and g is clamped at 0 once the
    flow reaches the target, after which it stays there.
    """
    if not 0.0 < gamma <= math.pi:
        raise ValueError(f"gamma must lie in (0, pi], got {gamma}")
    if not 0.0 <= del_lam <= math.pi:
        raise ValueError(f"del_lam must lie in [0, pi], got {del_lam}")
    if t_max <= 0.0 or step_size <= 0.0:
        raise ValueError("t_max and step_size must be > 0")

    ts = [0.0]
    gs = [gamma]
    t, g = 0.0, gamma
    while t < t_max and g > 0.0:
        if _rhs(g, gamma, del_lam) > _DOMAIN_EPS:
            raise ArithmeticError(f"positive slope at g = {g}; flow must decay")
        h = min(step_size, t_max - t)
        for _ in range(_MAX_HALVINGS):
            full = _rk4_step(g, h, gamma, del_lam)
            half = _rk4_step(_rk4_step(g, 0.5 * h, gamma, del_lam), 0.5 * h, gamma, del_lam)
            if abs(half - full) <= _LOCAL_ERR_TOL:
                break
            h *= 0.5
        else:
            raise ArithmeticError(
                f"step size underflow at t = {t}: local error stayed above {_LOCAL_ERR_TOL}"
            )
        t += h
        g = max(half, 0.0)
        ts.append(t)
        gs.append(g)
    return ContinuumTrace(np.array(ts), np.array(gs), gamma, del_lam, step_size)


def fit_tail_rate(
    trace: ContinuumTrace,
    g_max: float = 1e-2,
    g_min: float = 1e-8,
) -> float:
    """Exponential decay rate of the trace tail, from a straight-line fit
    of log g(t) over the window g_min < g < g_max.

    For del_lam in (0, pi) the fitted rate approaches 1 - cos(del_lam)
    independent of gamma.
    """
    mask = (trace.g > g_min) & (trace.g < g_max)
    if int(mask.sum()) < 2:
        raise ValueError(
            "tail window holds fewer than 2 samples; integrate to larger t_max"
        )
    slope = np.polyfit(trace.t[mask], np.log(trace.g[mask]), 1)[0]
    return float(-slope)


def max_initial_slope(gamma: float) -> float:
    """Largest initial decay speed over all del_lam: min(2 gamma, 2 pi - 2 gamma).

    The maximum is attained at del_lam = pi, where mu(gamma) is the smaller
    of 2 gamma and its reflex complement.
    """
    if not 0.0 <= gamma <= math.pi:
        raise ValueError(f"gamma must lie in [0, pi], got {gamma}")
    return min(2.0 * gamma, 2.0 * math.pi - 2.0 * gamma)
