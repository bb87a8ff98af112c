"""Two-dimensional Cartesian mode basis on a rectangular screen, the level
(multiplet) structure that organizes it, and the angular-momentum-like
Laguerre-Kravchuk modes.

A screen with spins (j_x, j_y) carries N_x*N_y = (2j_x+1)(2j_y+1) real
orthonormal Cartesian modes, products of one-dimensional Kravchuk functions.
Grouped by total mode number n = n_x + n_y they form multiplets of effective
spin lambda(n): lambda grows as n/2 up to min(j_x, j_y), stays flat at
min(j_x, j_y) across the middle of the rhomboid, and shrinks symmetrically
at the top.  Within a level the projection mu is the half-difference
(n_x - n_y)/2 recentred on the level, so mu always runs over
{-lambda, ..., +lambda} in unit steps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .special_functions import Spin, as_spin, kravchuk_function, wigner_little_d

__all__ = [
    "ScreenShape",
    "ModeIndex",
    "LevelSpectrum",
    "CartesianBasis",
    "level_spectrum",
    "build_basis",
    "cartesian_mode",
    "lk_coefficients",
    "lk_mode",
]


@dataclass(frozen=True)
class ScreenShape:
    """Rectangular pixel screen fixed by two spins.

    Pixel coordinates run q_k in {-j_k, ..., j_k} in unit steps, so the
    screen has N_x x N_y = (2j_x+1) x (2j_y+1) pixels.  Either orientation
    (j_x >= j_y or j_x < j_y) is accepted; the level formulas below are
    symmetric in the two axes.
    """

    j_x: Spin
    j_y: Spin

    def __post_init__(self):
        object.__setattr__(self, "j_x", as_spin(self.j_x))
        object.__setattr__(self, "j_y", as_spin(self.j_y))

    @classmethod
    def of(cls, j_x, j_y) -> "ScreenShape":
        return cls(as_spin(j_x), as_spin(j_y))

    @classmethod
    def from_pixels(cls, n_x: int, n_y: int) -> "ScreenShape":
        if n_x < 1 or n_y < 1:
            raise DomainError(f"pixel counts must be positive, got {n_x}x{n_y}")
        return cls(Spin(n_x - 1), Spin(n_y - 1))

    @property
    def n_x(self) -> int:
        return self.j_x.dimension

    @property
    def n_y(self) -> int:
        return self.j_y.dimension

    @property
    def pixels(self) -> tuple[int, int]:
        return (self.n_x, self.n_y)

    @property
    def mode_count(self) -> int:
        return self.n_x * self.n_y

    @property
    def max_total_mode(self) -> int:
        return self.j_x.two_j + self.j_y.two_j

    def q_x(self) -> np.ndarray:
        """Pixel x-coordinates, ascending."""
        return (np.arange(self.n_x) - self.j_x.two_j / 2.0)

    def q_y(self) -> np.ndarray:
        return (np.arange(self.n_y) - self.j_y.two_j / 2.0)

    def __repr__(self):
        return f"ScreenShape(j_x={self.j_x.j:g}, j_y={self.j_y.j:g})"


@dataclass(frozen=True)
class ModeIndex:
    """Cartesian mode label (n_x, n_y)."""

    n_x: int
    n_y: int

    @property
    def total(self) -> int:
        """Total mode number n = n_x + n_y."""
        return self.n_x + self.n_y

    @property
    def m(self) -> int:
        """Mode-number difference n_x - n_y."""
        return self.n_x - self.n_y


@dataclass(frozen=True)
class LevelSpectrum:
    """One total-mode level: its effective spin and ordered members.

    Members are sorted by descending projection mu (ascending n_y); the
    doubled projections ``two_mu`` run from +2*lambda down to -2*lambda in
    steps of 2.
    """

    n: int
    spin: Spin
    members: tuple[ModeIndex, ...]
    two_mu: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def mu(self) -> tuple[float, ...]:
        return tuple(t / 2.0 for t in self.two_mu)

    def member_for_two_mu(self, two_mu: int) -> ModeIndex:
        try:
            return self.members[self.two_mu.index(two_mu)]
        except ValueError:
            raise DomainError(
                f"2*mu={two_mu} not in level n={self.n} "
                f"(allowed: {self.two_mu})") from None


def level_spectrum(shape: ScreenShape, n: int) -> LevelSpectrum:
    """Level structure of total mode n: effective spin lambda(n) and the
    (n_x, n_y) <-> mu assignment.

    For j_x >= j_y this realizes the three intervals
      lower triangle  0 <= n <= 2j_y:        lambda = n/2,        mu = (n_x-n_y)/2
      mid rhomboid    2j_y < n < 2j_x:       lambda = j_y,        mu = j_y - n_y
      upper triangle  2j_x <= n:             lambda = j_x+j_y-n/2, mu = (n_x-n_y)/2 - j_x + j_y
    in one formula (recentring (n_x-n_y)/2 on the level), which also covers
    j_x < j_y and the boundary levels, where adjacent formulas agree.
    """
    if not isinstance(n, (int, np.integer)):
        raise DomainError(f"total mode must be an integer, got {n!r}")
    n = int(n)
    if not 0 <= n <= shape.max_total_mode:
        raise DomainError(
            f"total mode n={n} outside 0..{shape.max_total_mode} for {shape}")
    two_jx, two_jy = shape.j_x.two_j, shape.j_y.two_j
    ny_lo = max(0, n - two_jx)
    ny_hi = min(two_jy, n)
    members = tuple(ModeIndex(n - ny, ny) for ny in range(ny_lo, ny_hi + 1))
    diffs = [mi.m for mi in members]              # descending, step 2
    center = (diffs[0] + diffs[-1]) // 2
    two_mu = tuple(d - center for d in diffs)
    return LevelSpectrum(n, Spin(ny_hi - ny_lo), members, two_mu)


class CartesianBasis:
    """Precomputed one-dimensional Kravchuk tables and level bookkeeping.

    ``phi_x[n, i]`` holds Psi_n^(j_x) at pixel i (q_x = i - j_x), likewise
    ``phi_y``; both tables are orthogonal, so analysis/synthesis of images
    is a pair of small matrix products.  All arrays are frozen after
    construction and the object is safe to share between threads.
    """

    def __init__(self, shape: ScreenShape):
        self.shape = shape
        self.phi_x = self._table(shape.j_x)
        self.phi_y = self._table(shape.j_y)
        levels = []
        for n in range(shape.max_total_mode + 1):
            lev = level_spectrum(shape, n)
            nx = np.fromiter((mi.n_x for mi in lev.members), dtype=np.intp)
            ny = np.fromiter((mi.n_y for mi in lev.members), dtype=np.intp)
            for arr in (nx, ny):
                arr.flags.writeable = False
            levels.append((lev, nx, ny))
        self._levels = tuple(levels)

    @staticmethod
    def _table(spin: Spin) -> np.ndarray:
        dim = spin.dimension
        t = np.empty((dim, dim))
        for n in range(dim):
            for i in range(dim):
                t[n, i] = kravchuk_function(spin, n, (2 * i - spin.two_j) / 2.0)
        t.flags.writeable = False
        return t

    @property
    def levels(self) -> tuple[LevelSpectrum, ...]:
        return tuple(lev for lev, _, _ in self._levels)

    def level(self, n: int) -> LevelSpectrum:
        if not 0 <= n <= self.shape.max_total_mode:
            raise DomainError(
                f"total mode n={n} outside 0..{self.shape.max_total_mode}")
        return self._levels[n][0]

    def level_arrays(self, n: int):
        """(LevelSpectrum, n_x indices, n_y indices) for fancy indexing."""
        lev, nx, ny = self._levels[int(n)]
        return lev, nx, ny

    def check_mode_index(self, idx) -> ModeIndex:
        if isinstance(idx, tuple):
            idx = ModeIndex(*idx)
        if not (0 <= idx.n_x <= self.shape.j_x.two_j
                and 0 <= idx.n_y <= self.shape.j_y.two_j):
            raise DomainError(f"mode index {idx} invalid for {self.shape}")
        return idx

    def check_image(self, pixels: np.ndarray) -> np.ndarray:
        pixels = np.asarray(pixels)
        if pixels.shape != self.shape.pixels:
            raise DimensionError(
                f"array shape {pixels.shape} does not match screen "
                f"{self.shape.pixels}")
        return pixels

    def analyze(self, pixels: np.ndarray) -> np.ndarray:
        """Expand an image over the Cartesian modes."""
        pixels = self.check_image(pixels)
        return self.phi_x @ pixels @ self.phi_y.T

    def synthesize(self, coeffs: np.ndarray) -> np.ndarray:
        """Rebuild an image from its mode coefficients."""
        coeffs = self.check_image(coeffs)
        return self.phi_x.T @ coeffs @ self.phi_y


def build_basis(shape) -> CartesianBasis:
    """Construct the Cartesian basis tables for a screen shape."""
    if not isinstance(shape, ScreenShape):
        shape = ScreenShape.of(*shape)
    return CartesianBasis(shape)


def cartesian_mode(basis: CartesianBasis, idx) -> np.ndarray:
    """Real image of the Cartesian mode Psi_{n_x} (x) Psi_{n_y}."""
    idx = basis.check_mode_index(idx)
    return np.outer(basis.phi_x[idx.n_x], basis.phi_y[idx.n_y])


def _lk_level_phase(two_lambda: int) -> complex:
    # Canonical per-level phase exp(-i pi lambda / 2).  It makes the family
    # closed under conjugation, Lambda_{n,-m} = conj(Lambda_{n,m}), and the
    # m = 0 members real; without it the quarter-turn phase sandwich leaves
    # a stray factor exp(i pi lambda) between the +m and -m members.
    return cmath.exp(-1j * math.pi * two_lambda / 4.0)


def lk_coefficients(basis: CartesianBasis, n: int, m: int) -> np.ndarray:
    """Cartesian-basis coefficients of the Laguerre-Kravchuk mode (n, m).

    ``m = 2*mu`` labels the member of level n; it must have the parity of
    2*lambda(n) and satisfy |m| <= 2*lambda(n).
    """
    lev = basis.level(n)
    if not isinstance(m, (int, np.integer)) or m not in lev.two_mu:
        raise DomainError(
            f"m={m} not an angular label of level n={n} "
            f"(allowed: {lev.two_mu})")
    _, nx, ny = basis.level_arrays(n)
    row = lev.two_mu.index(int(m))
    d = wigner_little_d(lev.spin, math.pi / 2.0).entries
    diffs = nx - ny
    phases_in = np.exp(1j * math.pi * diffs / 4.0)
    amp = (_lk_level_phase(lev.spin.two_j)
           * np.conj(phases_in[row]) * d[row] * phases_in)
    out = np.zeros(basis.shape.pixels, dtype=complex)
    out[nx, ny] = amp
    return out


def lk_mode(basis: CartesianBasis, n: int, m: int) -> np.ndarray:
    """Complex image of the Laguerre-Kravchuk mode Lambda_{n,m}.

    These are the quarter-turn gyrations of the Cartesian multiplets, the
    rectangular-screen analogue of Laguerre-Gauss beams.  The family is
    orthonormal, complete, and conjugation-symmetric:
    Lambda_{n,-m} = conj(Lambda_{n,m}), so the m = 0 modes are real.
    """
    return basis.synthesize(lk_coefficients(basis, n, m))
