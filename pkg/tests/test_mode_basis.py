import math

import numpy as np
import pytest

from fkimage import (DomainError, ModeIndex, ScreenShape, Spin, build_basis,
                     cartesian_mode, level_spectrum, lk_coefficients, lk_mode)

SQ2 = math.sqrt(0.5)


def interval_formulas(two_jx, two_jy, n):
    """Literal three-interval assignment for j_x >= j_y (test oracle):
    lower triangle lambda = n/2, mid rhomboid lambda = j_y with
    mu = j_y - n_y, upper triangle lambda = j_x + j_y - n/2."""
    assert two_jx >= two_jy
    out = {}
    if n <= two_jy:
        for ny in range(0, n + 1):
            out[(n - ny, ny)] = (n, n - 2 * ny)
    elif n >= two_jx:
        for ny in range(n - two_jx, two_jy + 1):
            out[(n - ny, ny)] = (two_jx + two_jy - n, (n - 2 * ny) - two_jx + two_jy)
    else:
        for ny in range(0, two_jy + 1):
            out[(n - ny, ny)] = (two_jy, two_jy - 2 * ny)
    return out


# ------------------------------------------------------------- levels

@pytest.mark.parametrize("n,lam,size", [(4, 2, 5), (18, 7, 15), (32, 2, 5)])
def test_level_values_on_11_7(n, lam, size):
    lev = level_spectrum(ScreenShape.of(11, 7), n)
    assert lev.spin == Spin.from_j(lam)
    assert lev.size == size


def test_levels_match_interval_formulas(rng):
    for _ in range(30):
        two_jy = int(rng.integers(0, 30))
        two_jx = int(rng.integers(two_jy, 41))
        shape = ScreenShape(Spin(two_jx), Spin(two_jy))
        for n in range(two_jx + two_jy + 1):
            lev = level_spectrum(shape, n)
            oracle = interval_formulas(two_jx, two_jy, n)
            got = {(mi.n_x, mi.n_y): (lev.spin.two_j, tm)
                   for mi, tm in zip(lev.members, lev.two_mu)}
            assert got == oracle, (two_jx, two_jy, n)


def test_boundary_levels_agree_between_formulas():
    # at n = 2 j_y the lower-triangle and mid-rhomboid formulas coincide,
    # at n = 2 j_x the mid-rhomboid and upper-triangle formulas coincide
    for (two_jx, two_jy) in ((10, 6), (22, 14), (9, 4), (7, 7)):
        shape = ScreenShape(Spin(two_jx), Spin(two_jy))
        for n, mid_mu in ((two_jy, lambda nx, ny: two_jy - 2 * ny),
                          (two_jx, lambda nx, ny: two_jy - 2 * ny)):
            lev = level_spectrum(shape, n)
            for mi, tm in zip(lev.members, lev.two_mu):
                assert tm == mid_mu(mi.n_x, mi.n_y)
            assert lev.spin.two_j == min(two_jy, 2 * (two_jx + two_jy) - 2 * n,
                                         n, two_jx)


def test_mode_count_identity(rng):
    shapes = [(0, 0), (1, 0), (0, 3), (4, 4), (3, 5)]
    shapes += [(int(rng.integers(0, 41)), int(rng.integers(0, 41)))
               for _ in range(45)]
    for two_jx, two_jy in shapes:
        shape = ScreenShape(Spin(two_jx), Spin(two_jy))
        total = sum(level_spectrum(shape, n).size
                    for n in range(shape.max_total_mode + 1))
        assert total == shape.mode_count


def test_mu_coverage_and_ordering(rng):
    for _ in range(10):
        shape = ScreenShape(Spin(int(rng.integers(0, 25))),
                            Spin(int(rng.integers(0, 25))))
        for n in range(shape.max_total_mode + 1):
            lev = level_spectrum(shape, n)
            assert lev.two_mu == tuple(
                range(lev.spin.two_j, -lev.spin.two_j - 1, -2))
            n_ys = [mi.n_y for mi in lev.members]
            assert n_ys == sorted(n_ys)
            assert all(mi.total == n for mi in lev.members)


def test_level_domain_errors():
    shape = ScreenShape.of(5, 3)
    with pytest.raises(DomainError):
        level_spectrum(shape, -1)
    with pytest.raises(DomainError):
        level_spectrum(shape, 17)
    with pytest.raises(DomainError):
        level_spectrum(shape, 4.5)


def test_member_lookup():
    lev = level_spectrum(ScreenShape.of(5, 3), 8)
    assert lev.member_for_two_mu(6) == ModeIndex(8, 0)
    with pytest.raises(DomainError):
        lev.member_for_two_mu(7)


# -------------------------------------------------------------- basis

def test_build_basis_5_3():
    basis = build_basis((5, 3))
    assert basis.phi_x.shape == (11, 11)
    assert basis.phi_y.shape == (7, 7)
    assert basis.shape.mode_count == 77
    assert len(basis.levels) == 17


def test_basis_ground_row_shape_1_1():
    basis = build_basis((1, 1))
    assert basis.phi_x[0] == pytest.approx([0.5, SQ2, 0.5], abs=1e-15)


def test_basis_gram_20_12():
    basis = build_basis((20, 12))
    for phi in (basis.phi_x, basis.phi_y):
        assert np.max(np.abs(phi @ phi.T - np.eye(phi.shape[0]))) < 1e-10


def test_basis_tables_frozen():
    basis = build_basis((2, 1))
    with pytest.raises(ValueError):
        basis.phi_x[0, 0] = 7.0


def test_half_integer_screen():
    basis = build_basis((1.5, 1))
    assert basis.shape.pixels == (4, 3)
    total = sum(lev.size for lev in basis.levels)
    assert total == 12


# -------------------------------------------------------------- modes

def test_ground_mode_positive():
    basis = build_basis((5, 3))
    assert np.all(cartesian_mode(basis, (0, 0)) > 0)


def test_cartesian_checkerboard_5_3():
    basis = build_basis((5, 3))
    qx = basis.shape.q_x()[:, None]
    qy = basis.shape.q_y()[None, :]
    checker = (-1.0) ** (qx + qy)      # j_x + j_y even, constant drops out
    for (nx, ny) in ((0, 0), (3, 2), (10, 6), (7, 1)):
        a = cartesian_mode(basis, (10 - nx, 6 - ny))
        b = cartesian_mode(basis, (nx, ny))
        assert np.max(np.abs(a - checker * b)) < 1e-12


def test_cartesian_orthonormality_random_pairs(rng):
    basis = build_basis((5, 3))
    for _ in range(10):
        a = (int(rng.integers(0, 11)), int(rng.integers(0, 7)))
        b = (int(rng.integers(0, 11)), int(rng.integers(0, 7)))
        inner = np.sum(cartesian_mode(basis, a) * cartesian_mode(basis, b))
        assert inner == pytest.approx(1.0 if a == b else 0.0, abs=1e-12)


def test_cartesian_mode_rejects_bad_index():
    basis = build_basis((5, 3))
    with pytest.raises(DomainError):
        cartesian_mode(basis, (11, 0))
    with pytest.raises(DomainError):
        cartesian_mode(basis, (0, -1))


# ----------------------------------------------------------- LK modes

def test_lk_ground_equals_cartesian_ground():
    basis = build_basis((5, 3))
    assert np.max(np.abs(lk_mode(basis, 0, 0)
                         - cartesian_mode(basis, (0, 0)))) < 1e-15


def test_lk_conjugation_symmetry_5_3():
    basis = build_basis((5, 3))
    for lev in basis.levels:
        for m in lev.two_mu:
            a = lk_mode(basis, lev.n, m)
            b = lk_mode(basis, lev.n, -m)
            assert np.max(np.abs(b - np.conj(a))) < 1e-12


def test_lk_m0_modes_are_real():
    basis = build_basis((5, 3))
    for lev in basis.levels:
        if 0 in lev.two_mu:
            assert np.max(np.abs(np.imag(lk_mode(basis, lev.n, 0)))) < 1e-13


def test_lk_gram_identity_5_3():
    basis = build_basis((5, 3))
    stack = np.array([lk_mode(basis, lev.n, m).ravel()
                      for lev in basis.levels for m in lev.two_mu])
    gram = stack.conj() @ stack.T
    assert np.max(np.abs(gram - np.eye(77))) < 1e-10
    completeness = stack.T @ stack.conj()
    assert np.max(np.abs(completeness - np.eye(77))) < 1e-10


def test_lk_coefficients_support():
    basis = build_basis((5, 3))
    coeffs = lk_coefficients(basis, 8, 4)
    lev, = [l for l in basis.levels if l.n == 8]
    support = {(mi.n_x, mi.n_y) for mi in lev.members}
    nz = {tuple(idx) for idx in np.argwhere(np.abs(coeffs) > 0)}
    assert nz <= support
    assert np.linalg.norm(coeffs) == pytest.approx(1.0, abs=1e-12)


def test_lk_rejects_bad_labels():
    basis = build_basis((5, 3))
    with pytest.raises(DomainError):
        lk_mode(basis, 4, 3)        # parity mismatch (level mu spacing)
    with pytest.raises(DomainError):
        lk_mode(basis, 4, 6)        # |m| beyond 2 lambda
    with pytest.raises(DomainError):
        lk_mode(basis, 8, 8)        # mid-rhomboid level: natural difference
    with pytest.raises(DomainError):  # but not a mu label
        lk_mode(basis, 17, 0)
