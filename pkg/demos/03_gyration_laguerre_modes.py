"""
Gyrations and the angular-momentum-like modes
=============================================

Gyration rotates phase space in the mixed (q_x, p_y) and (q_y, p_x)
planes.  At a quarter turn it carries the Cartesian modes onto the
Laguerre-Kravchuk modes, finite rectangular cousins of Laguerre-Gauss
beams: complex, conjugation-paired in +-m, with real m = 0 members.
"""

import math
import os

import numpy as np

from fkimage import (RenderSpec, build_basis, cartesian_mode,
                     gyrate_image, lk_mode, render)
from fkimage.figures import mode_gallery

out_dir = "demo_output/gyration"
os.makedirs(out_dir, exist_ok=True)

basis = build_basis((11, 7))

# gyrate one Cartesian mode through the quarter turn staircase
mode = cartesian_mode(basis, (10, 8)).astype(complex)
for gamma in (0.0, math.pi / 16, math.pi / 8, 3 * math.pi / 16, math.pi / 4):
    img = gyrate_image(basis, mode, gamma)
    render(img, RenderSpec(scaling="adaptive", channel="abs"),
           f"{out_dir}/abs_gamma{gamma:.4f}.pgm")
    print(f"gamma={gamma:.4f}: norm={np.linalg.norm(img):.12f} "
          f"max|Im|={np.max(np.abs(img.imag)):.3e}")
render(gyrate_image(basis, mode, math.pi / 4),
       RenderSpec(scaling="adaptive", channel="phase"),
       f"{out_dir}/phase_quarter.pgm")

# conjugation pairing of the quarter-turn family
basis53 = build_basis((5, 3))
for (n, m) in ((4, 2), (8, 6), (12, -2)):
    a = lk_mode(basis53, n, m)
    b = lk_mode(basis53, n, -m)
    print(f"Lambda({n},{-m}) vs conj Lambda({n},{m}): "
          f"{np.max(np.abs(b - np.conj(a))):.3e}")
print("Lambda(6,0) imaginary part:",
      np.max(np.abs(lk_mode(basis53, 6, 0).imag)))

manifest = mode_gallery(basis53, f"{out_dir}/lk_gallery", kind="lk")
print(f"LK gallery: {manifest['count']} modes, sheet {manifest['sheet']}")
