"""Parameter-space composition and inversion of Fourier-group elements via
a faithful 2x2 unitary matrix representation.

An element is parametrized by a central phase angle chi and three Euler
angles (psi, theta, phi) taken about the 3-2-3 axes of the group's SU(2)
part, in the convention pinned by the little-d matrices:

    U = exp(-i chi/2) * Rz(psi) * Ry(theta) * Rz(phi)

with ``Ry(theta)`` equal to the spin-1/2 little-d matrix d^{1/2}(theta) and
``Rz(alpha) = diag(exp(-i alpha/2), exp(+i alpha/2))``.  Canonical ranges
after extraction are theta in [0, pi], psi and phi in [0, 2 pi), and chi in
[0, 4 pi); chi has period 4 pi because half-integer multiplet spins make
chi and chi + 2 pi act differently on images.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

__all__ = [
    "FourierGroupElement",
    "to_matrix",
    "from_matrix",
    "compose",
    "inverse",
    "element_to_json",
    "element_from_json",
]

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class FourierGroupElement:
    """Euler parameters (chi; psi, theta, phi), all in radians.

    Any real angles are accepted; ``from_matrix`` always returns the
    canonical representative.
    """

    chi: float = 0.0
    psi: float = 0.0
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        for name in ("chi", "psi", "theta", "phi"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValidationError(f"angle {name} must be finite")
            object.__setattr__(self, name, value)

    @classmethod
    def identity(cls) -> "FourierGroupElement":
        return cls(0.0, 0.0, 0.0, 0.0)

    def as_dict(self) -> dict:
        return {"chi": self.chi, "psi": self.psi,
                "theta": self.theta, "phi": self.phi}


def _rz(alpha: float) -> np.ndarray:
    return np.array([[cmath.exp(-0.5j * alpha), 0.0],
                     [0.0, cmath.exp(0.5j * alpha)]])


def _ry(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def to_matrix(element: FourierGroupElement) -> np.ndarray:
    """2x2 unitary matrix U = e^{-i chi/2} Rz(psi) Ry(theta) Rz(phi)."""
    u = _rz(element.psi) @ _ry(element.theta) @ _rz(element.phi)
    return cmath.exp(-0.5j * element.chi) * u


def from_matrix(matrix, tol: float = 1e-10) -> FourierGroupElement:
    """Extract canonical Euler parameters from a 2x2 unitary matrix.

    Gimbal cases theta in {0, pi} are resolved by the convention phi = 0.
    Raises ValidationError when the input is not unitary to ``tol``.
    """
    u = np.asarray(matrix, dtype=complex)
    if u.shape != (2, 2):
        raise ValidationError(f"expected a 2x2 matrix, got shape {u.shape}")
    defect = np.max(np.abs(u @ u.conj().T - np.eye(2)))
    if defect > tol:
        raise ValidationError(f"matrix is not unitary (defect {defect:.2e})")

    det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
    chi = (-cmath.phase(det)) % TWO_PI
    su = u * cmath.exp(0.5j * chi)           # in SU(2) up to an overall sign

    a00, a10 = abs(su[0, 0]), abs(su[1, 0])
    theta = 2.0 * math.atan2(a10, a00)
    if a10 < 1e-12:                          # theta ~ 0: only psi+phi matters
        theta, phi = 0.0, 0.0
        psi = (-2.0 * cmath.phase(su[0, 0])) % TWO_PI
    elif a00 < 1e-12:                        # theta ~ pi: only psi-phi matters
        theta, phi = math.pi, 0.0
        psi = (2.0 * cmath.phase(su[1, 0])) % TWO_PI
    else:
        half_sum = -cmath.phase(su[0, 0])
        half_diff = cmath.phase(su[1, 0])
        psi = (half_sum + half_diff) % TWO_PI
        phi = (half_sum - half_diff) % TWO_PI

    element = FourierGroupElement(chi, psi, theta, phi)
    # Folding psi, phi into [0, 2 pi) can silently flip the SU(2) sign; the
    # flip is absorbed by the central phase, chi -> chi + 2 pi.
    if np.max(np.abs(to_matrix(element) - u)) > 1e-8:
        element = FourierGroupElement((chi + TWO_PI) % FOUR_PI, psi, theta, phi)
    residual = np.max(np.abs(to_matrix(element) - u))
    if residual > max(10.0 * tol, 1e-9):
        raise ValidationError(
            f"Euler extraction failed to reproduce the matrix "
            f"(residual {residual:.2e})")
    return element


def compose(a: FourierGroupElement, b: FourierGroupElement) -> FourierGroupElement:
    """Group product a*b (b acts first on images, matching right-to-left
    operator composition)."""
    return from_matrix(to_matrix(a) @ to_matrix(b))


def inverse(a: FourierGroupElement) -> FourierGroupElement:
    """Group inverse, extracted from the conjugate-transpose matrix."""
    return from_matrix(to_matrix(a).conj().T)


def element_to_json(element: FourierGroupElement) -> str:
    """Serialize to the wire format {"chi":..., "psi":..., "theta":..., "phi":...}."""
    return json.dumps(element.as_dict())


def element_from_json(data) -> FourierGroupElement:
    """Parse an element from a JSON string or an already-decoded mapping."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid element JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValidationError(f"element JSON must be an object, got {type(data)}")
    unknown = set(data) - {"chi", "psi", "theta", "phi"}
    if unknown:
        raise ValidationError(f"unknown element fields: {sorted(unknown)}")
    try:
        angles = {key: float(data.get(key, 0.0))
                  for key in ("chi", "psi", "theta", "phi")}
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"element angles must be numbers: {exc}") from exc
    return FourierGroupElement(**angles)
