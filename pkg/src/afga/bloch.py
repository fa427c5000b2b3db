"""Bloch-sphere geometry and the 2x2 Pauli algebra.

Unit vectors in R^3 stand for pure qubit states; the helpers here move
between that picture and the corresponding kets and SU(2) matrices.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "X_HAT",
    "Y_HAT",
    "Z_HAT",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "ID2",
    "unit_vec",
    "polar_unit_vec",
    "rotate",
    "reflect",
    "ket_from_unit_vec",
    "bloch_vec_of",
    "overlap_sq",
    "paulion",
    "paulion_exp",
    "rotation_su2",
]

X_HAT = np.array([1.0, 0.0, 0.0])
Y_HAT = np.array([0.0, 1.0, 0.0])
Z_HAT = np.array([0.0, 0.0, 1.0])

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
ID2 = np.eye(2, dtype=complex)

# below this, sin(theta) leaves the azimuth undefined and we fix phi = 0
_POLE_EPS = 1e-14


def unit_vec(v) -> np.ndarray:
    """Return v normalized to unit length."""
    v = np.asarray(v, dtype=float)
    n = float(np.linalg.norm(v))
    if n < 1e-300:
        raise ValueError("cannot normalize a zero vector")
    return v / n


def polar_unit_vec(theta: float, phi: float = 0.0) -> np.ndarray:
    """Unit vector at polar angle theta from +z and azimuth phi from +x."""
    st = math.sin(theta)
    return np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)])


def rotate(r, axis, xi: float) -> np.ndarray:
    """Rotate r about a unit axis by angle xi (right-hand rule).

    Decomposes r into components along and perpendicular to the axis and
    turns only the perpendicular part; the result is renormalized so that
    long products of rotations cannot drift off the sphere.
    """
    r = np.asarray(r, dtype=float)
    a = np.asarray(axis, dtype=float)
    along = a * float(a @ r)
    out = along + math.sin(xi) * np.cross(a, r) + math.cos(xi) * (r - along)
    return unit_vec(out)


def reflect(r, axis) -> np.ndarray:
    """Reflect r through the plane whose normal is the given unit axis."""
    r = np.asarray(r, dtype=float)
    a = np.asarray(axis, dtype=float)
    return r - 2.0 * a * float(a @ r)


def ket_from_unit_vec(r) -> np.ndarray:
    """Spin-up eigenstate (cos(theta/2), e^{i phi} sin(theta/2)) of direction r."""
    x, y, z = np.asarray(r, dtype=float)
    sin_theta = math.hypot(x, y)
    theta = math.atan2(sin_theta, z)
    phi = 0.0 if sin_theta < _POLE_EPS else math.atan2(y, x)
    amp1 = complex(math.cos(phi), math.sin(phi)) * math.sin(0.5 * theta)
    return np.array([math.cos(0.5 * theta), amp1], dtype=complex)


def bloch_vec_of(psi) -> np.ndarray:
    """Pauli expectation values (<sx>, <sy>, <sz>) of a normalized ket."""
    a0, a1 = np.asarray(psi, dtype=complex)
    cross = np.conj(a0) * a1
    return np.array([2.0 * cross.real, 2.0 * cross.imag, abs(a0) ** 2 - abs(a1) ** 2])


def overlap_sq(r1, r2) -> float:
    """|<r1|r2>|^2 = (1 + r1 . r2) / 2 for the kets of two unit vectors."""
    d = float(np.asarray(r1, dtype=float) @ np.asarray(r2, dtype=float))
    return min(1.0, max(0.0, 0.5 * (1.0 + d)))


def paulion(axis) -> np.ndarray:
    """sigma_a = a . (sigma_x, sigma_y, sigma_z) for a unit vector a."""
    x, y, z = np.asarray(axis, dtype=float)
    return x * SIGMA_X + y * SIGMA_Y + z * SIGMA_Z


def paulion_exp(axis, theta: float) -> np.ndarray:
    """e^{i theta sigma_a} = cos(theta) I + i sin(theta) sigma_a."""
    return math.cos(theta) * ID2 + 1.0j * math.sin(theta) * paulion(axis)


def rotation_su2(axis, xi: float) -> np.ndarray:
    """SU(2) element e^{-i (xi/2) sigma_a} whose conjugation action is rotate(., a, xi)."""
    return paulion_exp(axis, -0.5 * xi)
