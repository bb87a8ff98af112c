"""Kravchuk polynomials, finite-oscillator wavefunctions and Wigner little-d
matrices for integer and half-integer spin.

Conventions
-----------
The little-d matrix implemented here is the representation of ``exp(-i beta
J_y)`` in the standard angular-momentum basis with Condon-Shortley phases.
Rows and columns are stored with the projection index *descending*, i.e.
``entries[i, k] = d_{mu, mu'}(beta)`` with ``mu = lam - i`` and
``mu' = lam - k``.  With this convention the quarter-turn matrix reproduces
the finite-oscillator wavefunctions row by row::

    d^j_{n-j, q}(pi/2) == kravchuk_function(j, n, q)

which pins every sign and index choice in this module.

Half-integer bookkeeping is done with doubled integers (``two_j = 2j``)
throughout, so no floating-point values are ever used as indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, lgamma

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError

__all__ = [
    "Spin",
    "as_spin",
    "kravchuk_polynomial",
    "kravchuk_function",
    "LittleDMatrix",
    "wigner_little_d",
]

# Largest 2*lambda for which the alternating terminating sum keeps ~1e-12
# absolute accuracy in double precision; larger spins use the spectral route.
_SUM_MAX_TWO_LAMBDA = 24


def _as_two(value, what="value"):
    """Coerce an integer or half-integer to its doubled-integer form."""
    if isinstance(value, Spin):
        return value.two_j
    if isinstance(value, (int, np.integer)):
        return 2 * int(value)
    if isinstance(value, Fraction):
        doubled = 2 * value
        if doubled.denominator != 1:
            raise DomainError(f"{what} must be an integer or half-integer, got {value}")
        return int(doubled)
    if isinstance(value, float):
        doubled = 2.0 * value
        if doubled != round(doubled):
            raise DomainError(f"{what} must be an integer or half-integer, got {value}")
        return int(round(doubled))
    raise DomainError(f"cannot interpret {value!r} as a half-integer {what}")


@dataclass(frozen=True, order=True)
class Spin:
    """A non-negative integer or half-integer spin, stored as ``2j``."""

    two_j: int

    def __post_init__(self):
        if not isinstance(self.two_j, (int, np.integer)) or self.two_j < 0:
            raise DomainError(f"2j must be a non-negative integer, got {self.two_j}")
        object.__setattr__(self, "two_j", int(self.two_j))

    @classmethod
    def from_j(cls, j) -> "Spin":
        two_j = _as_two(j, "spin")
        if two_j < 0:
            raise DomainError(f"spin must be non-negative, got {j}")
        return cls(two_j)

    @property
    def j(self) -> float:
        return self.two_j / 2.0

    @property
    def dimension(self) -> int:
        """Number of states, N = 2j + 1."""
        return self.two_j + 1

    def __repr__(self):
        if self.two_j % 2 == 0:
            return f"Spin(j={self.two_j // 2})"
        return f"Spin(j={self.two_j}/2)"


def as_spin(value) -> Spin:
    """Coerce a Spin, integer, half-integer float, or Fraction to a Spin."""
    if isinstance(value, Spin):
        return value
    return Spin.from_j(value)


def kravchuk_polynomial(n: int, s: int, two_j: int) -> float:
    """Symmetric Kravchuk polynomial K_n(s; 1/2, 2j) = 2F1(-n, -s; -2j; 2).

    The terminating hypergeometric sum is accumulated in exact integer
    arithmetic and divided out once at the end, so the returned double is
    correctly rounded.  The polynomial is symmetric under n <-> s.
    """
    for name, value in (("n", n), ("s", s), ("two_j", two_j)):
        if not isinstance(value, (int, np.integer)):
            raise DomainError(f"{name} must be an integer, got {value!r}")
    n, s, two_j = int(n), int(s), int(two_j)
    if two_j < 0:
        raise DomainError(f"two_j must be non-negative, got {two_j}")
    if not 0 <= n <= two_j:
        raise DomainError(f"degree n={n} outside 0..{two_j}")
    if not 0 <= s <= two_j:
        raise DomainError(f"argument s={s} outside 0..{two_j}")
    # sum_k (-1)^k C(n,k) C(s,k) k! 2^k (2j-k)!  /  (2j)!
    acc = 0
    for k in range(min(n, s) + 1):
        term = comb(n, k) * comb(s, k) * factorial(k) * (2 ** k) * factorial(two_j - k)
        acc = acc - term if k % 2 else acc + term
    return float(Fraction(acc, factorial(two_j)))


def _log_binomial(two_j: int, k: int) -> float:
    return lgamma(two_j + 1) - lgamma(k + 1) - lgamma(two_j - k + 1)


def kravchuk_function(j, n: int, q) -> float:
    """Finite-oscillator wavefunction Psi_n^(j)(q) on the 2j+1 point lattice.

    Equals ``(-1)^n / 2^j * sqrt(C(2j,n) C(2j,j+q)) * K_n(j+q; 1/2, 2j)``.
    The square-root prefactor is accumulated with log-binomials so large
    spins do not overflow; the polynomial part is exact.

    Parameters
    ----------
    j : Spin or number
        Lattice spin; the screen axis has N = 2j+1 points.
    n : int
        Mode number, 0 <= n <= 2j.
    q : number
        Position, q in {-j, ..., j} in unit steps (half-integer when j is).
    """
    spin = as_spin(j)
    two_j = spin.two_j
    if not isinstance(n, (int, np.integer)) or not 0 <= n <= two_j:
        raise DomainError(f"mode n={n} outside 0..{two_j}")
    two_q = _as_two(q, "position q")
    if abs(two_q) > two_j or (two_q - two_j) % 2 != 0:
        raise DomainError(f"position q={q} not in the spin-{spin.j} lattice")
    jq = (two_j + two_q) // 2
    kpoly = kravchuk_polynomial(int(n), jq, two_j)
    logpref = 0.5 * (_log_binomial(two_j, int(n)) + _log_binomial(two_j, jq)) \
        - 0.5 * two_j * math.log(2.0)
    sign = -1.0 if n % 2 else 1.0
    return sign * math.exp(logpref) * kpoly


# ---------------------------------------------------------------------------
# Wigner little-d
# ---------------------------------------------------------------------------

def _little_d_sum(two_l: int, beta: float) -> np.ndarray:
    """Terminating Wigner sum with log-factorial magnitudes and sign tracking.

    Reliable up to 2*lambda ~ 24; beyond that the alternating sum cancels
    catastrophically in double precision.
    """
    dim = two_l + 1
    c = math.cos(beta / 2.0)
    s = math.sin(beta / 2.0)
    if c == 0.0 or s == 0.0:
        # exact half-angle zeros only occur for beta == 0.0 (handled by the
        # caller) or non-finite input; route through the spectral form.
        return _little_d_spectral(two_l, beta)
    lgf = np.array([lgamma(k + 1.0) for k in range(dim)])
    idx = np.arange(dim)
    I1 = idx[:, None, None]          # row: mu  = lam - i1
    I2 = idx[None, :, None]          # col: mu' = lam - i2
    K = idx[None, None, :]
    kmin = np.maximum(0, I1 - I2)
    kmax = np.minimum(two_l - I2, I1)
    valid = (K >= kmin) & (K <= kmax)
    Ks = np.where(valid, K, kmin)    # safe in-range anchor where masked
    pref = 0.5 * (lgf[two_l - I1] + lgf[I1] + lgf[two_l - I2] + lgf[I2])
    pc = two_l - 2 * Ks + (I1 - I2)  # power of cos(beta/2)
    ps = 2 * Ks - (I1 - I2)          # power of sin(beta/2)
    logterm = (pref
               - lgf[two_l - I2 - Ks] - lgf[Ks] - lgf[I1 - Ks] - lgf[Ks - I1 + I2]
               + pc * math.log(abs(c)) + ps * math.log(abs(s)))
    parity = (I2 - I1 + Ks) % 2
    if c < 0.0:
        parity = parity + pc
    if s < 0.0:
        parity = parity + ps
    signs = 1.0 - 2.0 * (parity % 2)
    logterm = np.where(valid, logterm, -np.inf)
    peak = logterm.max(axis=2, keepdims=True)
    acc = np.sum(signs * np.exp(logterm - peak) * valid, axis=2)
    return np.exp(peak[:, :, 0]) * acc


def _little_d_spectral(two_l: int, beta: float) -> np.ndarray:
    """Evaluate exp(-i beta J_y) through the Jacobi form of J_y.

    A diagonal similarity with powers of i turns J_y into a real symmetric
    tridiagonal matrix whose spectrum is exactly {-lam, ..., lam}; the
    eigenvalues are snapped to those half-integers.  Backward-stable at any
    spin, at the price of one small eigen-decomposition.
    """
    dim = two_l + 1
    if dim == 1:
        return np.array([[1.0]])
    lam = two_l / 2.0
    m = lam - np.arange(dim - 1)      # descending, pairs (m, m-1)
    off = -0.5 * np.sqrt((lam + m) * (lam - m + 1.0))
    _, V = eigh_tridiagonal(np.zeros(dim), off)
    mu = -lam + np.arange(dim)        # exact ascending spectrum
    M = (V * np.exp(-1j * beta * mu)) @ V.T
    steps = (np.arange(dim)[None, :] - np.arange(dim)[:, None]) % 4
    out = (1j ** steps) * M
    return np.ascontiguousarray(out.real)


@lru_cache(maxsize=1024)
def _little_d_entries(two_l: int, beta: float) -> np.ndarray:
    if beta == 0.0:
        entries = np.eye(two_l + 1)
    elif two_l <= _SUM_MAX_TWO_LAMBDA:
        entries = _little_d_sum(two_l, beta)
    else:
        entries = _little_d_spectral(two_l, beta)
    entries.flags.writeable = False
    return entries


@dataclass(frozen=True)
class LittleDMatrix:
    """Real orthogonal rotation matrix d^lam(beta) in the spin-lam irrep.

    ``entries[i, k] = d_{mu, mu'}(beta)`` with mu = lam - i, mu' = lam - k
    (both indices descending from +lam to -lam).
    """

    spin: Spin
    beta: float
    entries: np.ndarray

    def index_of(self, mu) -> int:
        two_mu = _as_two(mu, "projection mu")
        two_l = self.spin.two_j
        if abs(two_mu) > two_l or (two_mu - two_l) % 2 != 0:
            raise DomainError(f"mu={mu} not a projection of spin {self.spin.j}")
        return (two_l - two_mu) // 2

    def value(self, mu, mu_prime) -> float:
        """Entry d_{mu, mu'}(beta) addressed by (half-)integer projections."""
        return float(self.entries[self.index_of(mu), self.index_of(mu_prime)])


def wigner_little_d(lam, beta: float) -> LittleDMatrix:
    """Full Wigner little-d matrix for spin ``lam`` at angle ``beta``.

    Two evaluation routes are used: the explicit terminating sum with
    log-factorial accumulation for 2*lam <= 24, and the spectral
    (tridiagonal eigen-decomposition) form beyond, where the alternating
    sum would lose more than ~3 digits.  Both produce the convention pinned
    by ``d^j_{n-j,q}(pi/2) == kravchuk_function(j, n, q)``.
    """
    spin = as_spin(lam)
    beta = float(beta)
    if not math.isfinite(beta):
        raise DomainError(f"angle beta must be finite, got {beta}")
    return LittleDMatrix(spin, beta, _little_d_entries(spin.two_j, beta))
