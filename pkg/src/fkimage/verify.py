"""Self-contained verification suite aggregating the numerical invariants of
every module: special functions, basis construction, transforms, group
algebra, and file round trips.

Two checks (``rotation_pi_is_pixel_inversion`` and
``image_action_homomorphism``) fail on genuinely rectangular screens.  This
is a property of the construction, not a bug: the mid-rhomboid levels carry
the flat effective spin min(j_x, j_y) instead of n/2, so a half-turn
rotation multiplies them by (-1)^{2 j_min} rather than the (-1)^n that an
exact pixel inversion requires, and the antisymmetric Fourier phases pick
up a level-central offset that a four-parameter group element cannot
track.  Both effects vanish on square screens.  See the README for the
full discussion.
"""

from __future__ import annotations

import math
import os
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from . import fourier_transforms as ft
from . import group_algebra as ga
from .glyph import f_glyph
from .imageio import load_complex, load_image, pixels_to_gray, read_pgm, \
    save_complex, write_pgm
from .mode_basis import ScreenShape, build_basis, cartesian_mode, \
    level_spectrum, lk_mode
from .render import RenderSpec, scale_to_unit
from .special_functions import Spin, kravchuk_function, wigner_little_d

__all__ = ["CheckResult", "run_verification", "DEFAULT_SHAPES", "KNOWN_LIMITATIONS"]

DEFAULT_SHAPES = ((5, 3), (11, 7), (20, 12))

# Checks that cannot pass on rectangular screens; kept in the suite so the
# behavior is measured and reported rather than hidden.
KNOWN_LIMITATIONS = ("rotation_pi_is_pixel_inversion", "image_action_homomorphism")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    known_limitation: bool = False


def _random_element(rng) -> ga.FourierGroupElement:
    return ga.FourierGroupElement(
        chi=rng.uniform(0.0, 4.0 * math.pi),
        psi=rng.uniform(0.0, 2.0 * math.pi),
        theta=rng.uniform(0.0, math.pi),
        phi=rng.uniform(0.0, 2.0 * math.pi),
    )


def _random_image(rng, shape) -> np.ndarray:
    return (rng.standard_normal(shape.pixels)
            + 1j * rng.standard_normal(shape.pixels))


def _triangle_mid_assignments(two_jx, two_jy, n):
    """The interval formulas written out separately (used as an oracle for
    the boundary levels)."""
    lo, hi = min(two_jx, two_jy), max(two_jx, two_jy)
    out = {}
    if n <= lo:                      # lower triangle
        for ny in range(0, n + 1):
            out[(n - ny, ny)] = (n, (n - 2 * ny))
    elif n >= hi:                    # upper triangle
        for ny in range(n - two_jx, two_jy + 1):
            out[(n - ny, ny)] = (two_jx + two_jy - n,
                                 (n - 2 * ny) - two_jx + two_jy)
    else:                            # mid rhomboid
        if two_jx >= two_jy:
            for ny in range(0, two_jy + 1):
                out[(n - ny, ny)] = (two_jy, two_jy - 2 * ny)
        else:
            for ny in range(n - two_jx, n + 1):
                out[(n - ny, ny)] = (two_jx, 2 * (n - ny) - two_jx)
    return out


# ---------------------------------------------------------------------------
# individual checks; each returns (max_deviation, tolerance, detail)
# ---------------------------------------------------------------------------

def _check_littled_orthogonality(ctx):
    worst = 0.0
    betas = [0.21, math.pi / 2, 1.0, math.pi, 2.5, 4.0, 5.9, 7.3, 11.0]
    for two_l in list(range(0, 21)) + [25, 31, 40, 61, 80]:
        eye = np.eye(two_l + 1)
        for beta in betas:
            d = wigner_little_d(Spin(two_l), beta).entries
            worst = max(worst, float(np.max(np.abs(d @ d.T - eye))))
    return worst, 1e-9, "max |d d^T - I| over 2*lambda <= 80"


def _check_littled_addition(ctx):
    rng = ctx["rng"]
    worst = 0.0
    for two_l in (1, 2, 5, 14, 24, 31, 40):
        for _ in range(4):
            b1, b2 = rng.uniform(-7, 7, size=2)
            d1 = wigner_little_d(Spin(two_l), b1).entries
            d2 = wigner_little_d(Spin(two_l), b2).entries
            d12 = wigner_little_d(Spin(two_l), b1 + b2).entries
            worst = max(worst, float(np.max(np.abs(d1 @ d2 - d12))))
    return worst, 1e-9, "max |d(b1) d(b2) - d(b1+b2)|"


def _check_littled_periodicity(ctx):
    worst = 0.0
    for two_l in (1, 2, 7, 24, 33):
        for beta in (0.4, 2.2, 5.0):
            d = wigner_little_d(Spin(two_l), beta).entries
            d2pi = wigner_little_d(Spin(two_l), beta + 2 * math.pi).entries
            d4pi = wigner_little_d(Spin(two_l), beta + 4 * math.pi).entries
            sign = -1.0 if two_l % 2 else 1.0
            worst = max(worst, float(np.max(np.abs(d2pi - sign * d))))
            worst = max(worst, float(np.max(np.abs(d4pi - d))))
    return worst, 1e-10, "period 4*pi, anti-period 2*pi for half-integer spin"


def _check_littled_kravchuk(ctx):
    worst = 0.0
    for two_j in range(0, 41):
        d = wigner_little_d(Spin(two_j), math.pi / 2).entries
        for n in range(two_j + 1):
            for col in range(two_j + 1):
                q = (two_j - 2 * col) / 2.0
                worst = max(worst, abs(d[two_j - n, col]
                                       - kravchuk_function(Spin(two_j), n, q)))
    return worst, 1e-10, "d^j_{n-j,q}(pi/2) vs Kravchuk function, 2j <= 40"


def _check_kravchuk_orthonormality(ctx):
    worst = 0.0
    for two_j in (1, 2, 3, 8, 21, 40):
        dim = two_j + 1
        table = np.array([[kravchuk_function(Spin(two_j), n, (2 * i - two_j) / 2.0)
                           for i in range(dim)] for n in range(dim)])
        worst = max(worst, float(np.max(np.abs(table @ table.T - np.eye(dim)))))
    return worst, 1e-10, "sum_q Psi_n Psi_n' = delta"


def _check_mode_count(ctx):
    rng = ctx["rng"]
    bad = 0
    for _ in range(50):
        shape = ScreenShape(Spin(int(rng.integers(0, 41))),
                            Spin(int(rng.integers(0, 41))))
        total = sum(level_spectrum(shape, n).size
                    for n in range(shape.max_total_mode + 1))
        if total != shape.mode_count:
            bad += 1
    return float(bad), 0.5, "sum over levels of (2 lambda + 1) = N_x N_y, 50 shapes"


def _check_boundary_levels(ctx):
    rng = ctx["rng"]
    bad = 0
    for _ in range(50):
        two_jx = int(rng.integers(0, 41))
        two_jy = int(rng.integers(0, 41))
        shape = ScreenShape(Spin(two_jx), Spin(two_jy))
        for n in {min(two_jx, two_jy), max(two_jx, two_jy)}:
            if n > shape.max_total_mode:
                continue
            lev = level_spectrum(shape, n)
            oracle = _triangle_mid_assignments(two_jx, two_jy, n)
            got = {(mi.n_x, mi.n_y): (lev.spin.two_j, tm)
                   for mi, tm in zip(lev.members, lev.two_mu)}
            if got != oracle:
                bad += 1
    return float(bad), 0.5, "triangle vs mid-rhomboid formulas at boundary levels"


def _check_mu_coverage(ctx):
    rng = ctx["rng"]
    bad = 0
    for _ in range(25):
        shape = ScreenShape(Spin(int(rng.integers(0, 31))),
                            Spin(int(rng.integers(0, 31))))
        for n in range(shape.max_total_mode + 1):
            lev = level_spectrum(shape, n)
            expect = tuple(range(lev.spin.two_j, -lev.spin.two_j - 1, -2))
            if lev.two_mu != expect:
                bad += 1
            if [mi.n_y for mi in lev.members] != sorted(mi.n_y for mi in lev.members):
                bad += 1
    return float(bad), 0.5, "mu runs +lambda..-lambda step 1, n_y ascending"


def _check_checkerboard(ctx):
    # mode (2jx-nx, 2jy-ny) = (-1)^(jx+jy) * (-1)^(qx+qy) * mode (nx, ny)
    # for integer spins; the constant drops out when jx+jy is even.
    worst = 0.0
    for (jx, jy) in ((5, 3), (4, 4), (6, 2), (2, 1)):
        basis = ctx["get_basis"]((jx, jy))
        qx = basis.shape.q_x()[:, None]
        qy = basis.shape.q_y()[None, :]
        checker = (-1.0) ** (jx + jy) * (-1.0) ** (qx + qy)
        for _ in range(6):
            nx = int(ctx["rng"].integers(0, basis.shape.n_x))
            ny = int(ctx["rng"].integers(0, basis.shape.n_y))
            a = cartesian_mode(basis, (basis.shape.j_x.two_j - nx,
                                       basis.shape.j_y.two_j - ny))
            b = cartesian_mode(basis, (nx, ny))
            worst = max(worst, float(np.max(np.abs(a - checker * b))))
    return worst, 1e-12, "antipodal-mode checkerboard relation (integer spins)"


def _check_basis_gram(ctx):
    worst = 0.0
    for key, basis in ctx["basis"].items():
        for phi in (basis.phi_x, basis.phi_y):
            eye = np.eye(phi.shape[0])
            worst = max(worst, float(np.max(np.abs(phi @ phi.T - eye))))
            worst = max(worst, float(np.max(np.abs(phi.T @ phi - eye))))
    return worst, 1e-10, "1-D Gram and completeness on all screens"


def _lk_stack(basis):
    mats = []
    for lev in basis.levels:
        for two_mu in lev.two_mu:
            mats.append(lk_mode(basis, lev.n, two_mu).ravel())
    return np.array(mats)


def _check_lk_basis(ctx):
    worst = 0.0
    for key, basis in ctx["basis"].items():
        stack = _lk_stack(basis)
        gram = stack.conj() @ stack.T
        worst = max(worst, float(np.max(np.abs(gram - np.eye(len(stack))))))
        comp = stack.T @ stack.conj()        # resolution of identity over pixels
        worst = max(worst, float(np.max(np.abs(comp - np.eye(stack.shape[1])))))
    return worst, 1e-10, "LK modes orthonormal and complete"


def _check_lk_conjugation(ctx):
    worst = 0.0
    basis = ctx["get_basis"]((5, 3))
    for lev in basis.levels:
        for two_mu in lev.two_mu:
            a = lk_mode(basis, lev.n, two_mu)
            b = lk_mode(basis, lev.n, -two_mu)
            worst = max(worst, float(np.max(np.abs(b - np.conj(a)))))
    return worst, 1e-12, "Lambda_{n,-m} = conj(Lambda_{n,m}) on (5,3)"


def _check_unitarity(ctx):
    rng = ctx["rng"]
    worst = 0.0
    for key, basis in ctx["basis"].items():
        for _ in range(ctx["images"]):
            img = _random_image(rng, basis.shape)
            norm = np.linalg.norm(img)
            coeffs = ft.analyze(basis, img)
            outs = [
                ft.synthesize(basis, ft.rotate_coeffs(basis, coeffs, rng.uniform(0, 7))),
                ft.synthesize(basis, ft.ks_coeffs(coeffs, rng.uniform(0, 7))),
                ft.synthesize(basis, ft.ka_coeffs(coeffs, rng.uniform(0, 7))),
                ft.synthesize(basis, ft.gyrate_coeffs(basis, coeffs, rng.uniform(0, 7))),
                ft.apply_element(basis, img, _random_element(rng)),
            ]
            for out in outs:
                worst = max(worst, abs(np.linalg.norm(out) / norm - 1.0))
    return worst, 1e-10, "relative norm change of R, K_S, K_A, G, D"


def _check_rotation_group_law(ctx):
    rng = ctx["rng"]
    worst = 0.0
    for key, basis in ctx["basis"].items():
        coeffs = ft.analyze(basis, _random_image(rng, basis.shape))
        t1, t2 = rng.uniform(-3, 3, size=2)
        a = ft.rotate_coeffs(basis, ft.rotate_coeffs(basis, coeffs, t1), t2)
        b = ft.rotate_coeffs(basis, coeffs, t1 + t2)
        worst = max(worst, float(np.max(np.abs(a - b))))
        full = ft.rotate_coeffs(basis, coeffs, 2.0 * math.pi)
        worst = max(worst, float(np.max(np.abs(full - coeffs))))
    return worst, 1e-9, "rotations add; rotate(2 pi) = identity"


def _check_six_sixths(ctx):
    basis = ctx["get_basis"]((20, 12))
    img = f_glyph().astype(complex)
    coeffs = ft.analyze(basis, img)
    six = coeffs.copy()
    for _ in range(6):
        six = ft.rotate_coeffs(basis, six, math.pi / 6.0)
    one = ft.rotate_coeffs(basis, coeffs, math.pi)
    worst = float(np.max(np.abs(ft.synthesize(basis, six - one))))
    return worst, 1e-8, "six pi/6 rotations equal one pi rotation (glyph)"


def _check_rotation_pi_parity(ctx):
    worst = 0.0
    for key, basis in ctx["basis"].items():
        img = _random_image(ctx["rng"], basis.shape)
        rot = ft.rotate_image(basis, img, math.pi)
        worst = max(worst, float(np.max(np.abs(rot - img[::-1, ::-1]))))
    return worst, 1e-9, "rotate(pi) vs pixel map (q_x,q_y) -> (-q_x,-q_y)"


def _check_gyration_group_law(ctx):
    rng = ctx["rng"]
    worst = 0.0
    for key, basis in ctx["basis"].items():
        coeffs = ft.analyze(basis, _random_image(rng, basis.shape))
        g1, g2 = rng.uniform(-3, 3, size=2)
        a = ft.gyrate_coeffs(basis, ft.gyrate_coeffs(basis, coeffs, g1), g2)
        b = ft.gyrate_coeffs(basis, coeffs, g1 + g2)
        worst = max(worst, float(np.max(np.abs(a - b))))
    return worst, 1e-9, "gyrations add"


def _check_level_invariance(ctx):
    worst = 0.0
    basis = ctx["get_basis"]((11, 7))
    rng = ctx["rng"]
    for _ in range(5):
        n = int(rng.integers(0, basis.shape.max_total_mode + 1))
        lev, nx, ny = basis.level_arrays(n)
        coeffs = np.zeros(basis.shape.pixels, dtype=complex)
        coeffs[nx[0], ny[0]] = 1.0
        for out in (ft.rotate_coeffs(basis, coeffs, 0.7),
                    ft.gyrate_coeffs(basis, coeffs, 1.1)):
            mask = np.ones(basis.shape.pixels, dtype=bool)
            mask[nx, ny] = False
            worst = max(worst, float(np.max(np.abs(out[mask]))))
    return worst, 0.0, "rotation/gyration amplitude never leaves a level (exact)"


def _check_rotation_realness(ctx):
    rng = ctx["rng"]
    worst = 0.0
    for key, basis in ctx["basis"].items():
        img = rng.standard_normal(basis.shape.pixels)
        out = ft.rotate_image(basis, img, rng.uniform(0, 7))
        worst = max(worst, float(np.max(np.abs(np.imag(out)))))
    return worst, 1e-10, "rotation of a real image is real"


def _check_fourier_phases(ctx):
    rng = ctx["rng"]
    basis = ctx["get_basis"]((5, 3))
    coeffs = ft.analyze(basis, _random_image(rng, basis.shape))
    worst = 0.0
    # identity and 2 pi periodicity (integer mode numbers)
    worst = max(worst, float(np.max(np.abs(ft.ks_coeffs(coeffs, 0.0) - coeffs))))
    worst = max(worst, float(np.max(np.abs(ft.ks_coeffs(coeffs, 2 * math.pi) - coeffs))))
    # additivity
    b1, b2 = rng.uniform(-4, 4, size=2)
    a = ft.ka_coeffs(ft.ka_coeffs(coeffs, b1), b2)
    worst = max(worst, float(np.max(np.abs(a - ft.ka_coeffs(coeffs, b1 + b2)))))
    # K_A at pi is the (-1)^(n_x - n_y) checker
    nx = np.arange(basis.shape.n_x)[:, None]
    ny = np.arange(basis.shape.n_y)[None, :]
    worst = max(worst, float(np.max(np.abs(
        ft.ka_coeffs(coeffs, math.pi) - coeffs * (-1.0) ** (nx - ny)))))
    # K_S commutes with rotation
    t, chi = rng.uniform(0, 4, size=2)
    a = ft.ks_coeffs(ft.rotate_coeffs(basis, coeffs, t), chi)
    b = ft.rotate_coeffs(basis, ft.ks_coeffs(coeffs, chi), t)
    worst = max(worst, float(np.max(np.abs(a - b))))
    return worst, 1e-12, "fractional Fourier phase laws"


def _check_gyration_sandwich(ctx):
    rng = ctx["rng"]
    basis = ctx["get_basis"]((11, 7))
    coeffs = ft.analyze(basis, _random_image(rng, basis.shape))
    worst = 0.0
    for gamma in (math.pi / 16, math.pi / 8, 3 * math.pi / 16, math.pi / 4):
        a = ft.gyrate_coeffs(basis, coeffs, gamma)
        b = ft.gyrate_coeffs_sandwich(basis, coeffs, gamma)
        worst = max(worst, float(np.max(np.abs(a - b))))
    return worst, 1e-10, "direct gyration vs K_A(pi/4) R K_A(-pi/4)"


def _check_apply_reductions(ctx):
    rng = ctx["rng"]
    basis = ctx["get_basis"]((5, 3))
    img = _random_image(rng, basis.shape)
    worst = 0.0
    out = ft.apply_element(basis, img, ga.FourierGroupElement.identity())
    worst = max(worst, float(np.max(np.abs(out - img))))
    theta = rng.uniform(0, 2)
    a = ft.apply_element(basis, img, ga.FourierGroupElement(0, 0, 2 * theta, 0))
    worst = max(worst, float(np.max(np.abs(a - ft.gyrate_image(basis, img, theta)))))
    chi, psi, phi = rng.uniform(0, 4, size=3)
    b = ft.apply_element(basis, img, ga.FourierGroupElement(chi, psi, 0, phi))
    coeffs = ft.analyze(basis, img)
    c = ft.synthesize(basis, ft.ks_coeffs(
        ft.ka_coeffs(coeffs, (psi + phi) / 2), chi / 2))
    worst = max(worst, float(np.max(np.abs(b - c))))
    return worst, 1e-12, "Euler element reduces to its factors"


def _check_matrix_homomorphism(ctx):
    rng = ctx["rng"]
    worst = 0.0
    for _ in range(50):
        a, b = _random_element(rng), _random_element(rng)
        lhs = ga.to_matrix(ga.compose(a, b))
        rhs = ga.to_matrix(a) @ ga.to_matrix(b)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst, 1e-12, "to_matrix(compose(a,b)) = to_matrix(a) to_matrix(b)"


def _check_from_matrix_roundtrip(ctx):
    rng = ctx["rng"]
    worst = 0.0
    bad_range = 0
    for _ in range(200):
        e = _random_element(rng)
        u = ga.to_matrix(e)
        r = ga.from_matrix(u)
        worst = max(worst, float(np.max(np.abs(ga.to_matrix(r) - u))))
        if not (0 <= r.chi < 4 * math.pi and 0 <= r.psi < 2 * math.pi
                and 0 <= r.theta <= math.pi and 0 <= r.phi < 2 * math.pi):
            bad_range += 1
    worst = max(worst, float(bad_range))
    return worst, 1e-10, "to_matrix(from_matrix(U)) = U, canonical ranges"


def _check_image_homomorphism(ctx):
    rng = ctx["rng"]
    basis = ctx["get_basis"]((5, 3))
    worst = 0.0
    for _ in range(ctx["pairs"]):
        a, b = _random_element(rng), _random_element(rng)
        img = _random_image(rng, basis.shape)
        lhs = ft.apply_element(basis, img, ga.compose(a, b))
        rhs = ft.apply_element(basis, ft.apply_element(basis, img, b), a)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst, 1e-9, "apply(compose(a,b)) vs apply(a) after apply(b)"


def _check_inverse_roundtrip(ctx):
    rng = ctx["rng"]
    basis = ctx["get_basis"]((5, 3))
    worst = 0.0
    for _ in range(ctx["pairs"]):
        e = _random_element(rng)
        img = _random_image(rng, basis.shape)
        back = ft.apply_element(basis, ft.apply_element(basis, img, e),
                                ga.inverse(e))
        worst = max(worst, float(np.max(np.abs(back - img))))
    return worst, 1e-9, "apply(inverse(e)) undoes apply(e)"


def _check_file_roundtrips(ctx):
    rng = ctx["rng"]
    worst = 0.0
    with tempfile.TemporaryDirectory() as tmp:
        arr = (rng.standard_normal((9, 6)) + 1j * rng.standard_normal((9, 6)))
        path = os.path.join(tmp, "x.fkimg")
        save_complex(path, arr)
        back = load_complex(path)
        if not np.array_equal(back.view(np.float64), arr.view(np.float64)):
            worst = max(worst, 1.0)
        gray = rng.integers(0, 256, size=(7, 5))
        for binary in (True, False):
            p = os.path.join(tmp, f"g{binary}.pgm")
            write_pgm(p, gray, 255, binary=binary)
            g2, mv = read_pgm(p)
            if mv != 255 or not np.array_equal(gray, g2):
                worst = max(worst, 1.0)
        values = rng.uniform(0, 1, size=(8, 4))
        p = os.path.join(tmp, "q.pgm")
        write_pgm(p, pixels_to_gray(values, 65535), 65535)
        _, pix = load_image(p)
        worst = max(worst, float(np.max(np.abs(pix - values))))
    return worst, 0.5 / 255.0, "complex files bit-exact; PGM to quantization"


def _check_render_rules(ctx):
    basis = ctx["get_basis"]((5, 3))
    ground = cartesian_mode(basis, (0, 0))
    unit = scale_to_unit(ground, RenderSpec(scaling="fixed"))
    worst = 0.0
    if not np.all(unit > 0.5):
        worst = 1.0
    flat = scale_to_unit(np.full((4, 4), 2.7), RenderSpec(scaling="adaptive"))
    worst = max(worst, float(np.max(np.abs(flat - 0.5))))
    return worst, 1e-12, "fixed-range positivity; constant image maps to mid-gray"


_CHECKS = [
    ("littled_orthogonality", _check_littled_orthogonality),
    ("littled_addition_law", _check_littled_addition),
    ("littled_periodicity", _check_littled_periodicity),
    ("littled_kravchuk_crosscheck", _check_littled_kravchuk),
    ("kravchuk_orthonormality", _check_kravchuk_orthonormality),
    ("level_mode_count", _check_mode_count),
    ("level_boundary_consistency", _check_boundary_levels),
    ("level_mu_coverage", _check_mu_coverage),
    ("checkerboard_relation", _check_checkerboard),
    ("cartesian_basis_gram", _check_basis_gram),
    ("lk_basis_gram", _check_lk_basis),
    ("lk_conjugation_symmetry", _check_lk_conjugation),
    ("transform_unitarity", _check_unitarity),
    ("rotation_group_law", _check_rotation_group_law),
    ("rotation_six_sixths", _check_six_sixths),
    ("rotation_pi_is_pixel_inversion", _check_rotation_pi_parity),
    ("gyration_group_law", _check_gyration_group_law),
    ("level_invariance", _check_level_invariance),
    ("rotation_realness", _check_rotation_realness),
    ("fourier_phase_laws", _check_fourier_phases),
    ("gyration_direct_vs_sandwich", _check_gyration_sandwich),
    ("apply_element_reductions", _check_apply_reductions),
    ("matrix_homomorphism", _check_matrix_homomorphism),
    ("from_matrix_roundtrip", _check_from_matrix_roundtrip),
    ("image_action_homomorphism", _check_image_homomorphism),
    ("inverse_image_roundtrip", _check_inverse_roundtrip),
    ("file_roundtrips", _check_file_roundtrips),
    ("render_rules", _check_render_rules),
]


def run_verification(shapes=DEFAULT_SHAPES, tolerance=None, images=20,
                     pairs=25, seed=2024):
    """Run every invariant check and return a list of CheckResult.

    ``tolerance``, when given, replaces each check's default tolerance.
    ``images``/``pairs`` control the sample counts of the randomized checks.
    """
    rng = np.random.default_rng(seed)
    bases = {tuple(k): build_basis(ScreenShape.of(*k)) for k in shapes}
    cache = dict(bases)

    def get_basis(key):
        key = tuple(key)
        if key not in cache:
            cache[key] = build_basis(ScreenShape.of(*key))
        return cache[key]

    ctx = {"rng": rng, "basis": bases, "images": images, "pairs": pairs,
           "get_basis": get_basis}
    results = []
    for name, fn in _CHECKS:
        t0 = time.monotonic()
        deviation, default_tol, detail = fn(ctx)
        tol = default_tol if tolerance is None else float(tolerance)
        elapsed = time.monotonic() - t0
        results.append(CheckResult(
            name=name,
            passed=bool(deviation <= tol),
            detail=f"{detail}: deviation {deviation:.3e} (tolerance {tol:.1e})",
            seconds=elapsed,
            known_limitation=name in KNOWN_LIMITATIONS,
        ))
    return results
