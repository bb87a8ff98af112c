"""Grayscale rendering of complex pixel arrays to PGM."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .imageio import pixels_to_gray, write_pgm

__all__ = ["RenderSpec", "render"]

_CHANNELS = ("real", "imag", "abs", "phase")
_SCALINGS = ("fixed", "adaptive")


@dataclass(frozen=True)
class RenderSpec:
    """How a complex array is turned into gray levels.

    scaling:
        'fixed'    - map the value range (-1, 1) to black..white, clipping
                     anything outside;
        'adaptive' - map the smallest pixel to black and the largest to
                     white; a constant image degenerates to mid-gray.
    depth:
        8 or 16 bits per sample (maxval 255 or 65535).
    channel:
        'real', 'imag', 'abs', or 'phase'.  Phase is wrapped to [-pi, pi)
        and always mapped over that full range, regardless of scaling.
    """

    scaling: str = "fixed"
    depth: int = 8
    channel: str = "real"

    def __post_init__(self):
        if self.scaling not in _SCALINGS:
            raise DomainError(f"scaling must be one of {_SCALINGS}")
        if self.depth not in (8, 16):
            raise DomainError("depth must be 8 or 16")
        if self.channel not in _CHANNELS:
            raise DomainError(f"channel must be one of {_CHANNELS}")

    @property
    def maxval(self) -> int:
        return 255 if self.depth == 8 else 65535


def _select_channel(pixels: np.ndarray, channel: str) -> np.ndarray:
    if channel == "real":
        return np.real(pixels)
    if channel == "imag":
        return np.imag(pixels)
    if channel == "abs":
        return np.abs(pixels)
    angles = np.angle(pixels)
    # np.angle returns (-pi, pi]; fold the single endpoint to keep [-pi, pi)
    return np.where(angles == math.pi, -math.pi, angles)


def scale_to_unit(values: np.ndarray, spec: RenderSpec) -> np.ndarray:
    """Map channel values to [0, 1] according to the render spec."""
    if spec.channel == "phase":
        return (values + math.pi) / (2.0 * math.pi)
    if spec.scaling == "fixed":
        return np.clip((values + 1.0) / 2.0, 0.0, 1.0)
    lo, hi = float(values.min()), float(values.max())
    if hi == lo:
        return np.full(values.shape, 0.5)
    return (values - lo) / (hi - lo)


def render(pixels: np.ndarray, spec: RenderSpec, path, ascii_format: bool = False):
    """Render a pixel array to a PGM file and return the path."""
    values = _select_channel(np.asarray(pixels), spec.channel)
    gray = pixels_to_gray(scale_to_unit(values, spec), spec.maxval)
    return write_pgm(path, gray, spec.maxval, binary=not ascii_format)
