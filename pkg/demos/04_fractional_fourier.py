"""
Fractional Fourier transforms on the screen
===========================================

The symmetric transform multiplies mode (n_x, n_y) by exp(-i chi (n_x+n_y))
and the antisymmetric one by exp(-i beta (n_x-n_y)); both are diagonal in
the mode basis, hence trivially unitary, and the symmetric one commutes
with everything in the group.  A quarter-period antisymmetric transform is
the x-vs-y Fourier transform of the screen.
"""

import math
import os

import numpy as np

from fkimage import (RenderSpec, analyze, build_basis, f_glyph,
                     fractional_fourier_image, ka_coeffs, ks_coeffs, render,
                     rotate_coeffs)

out_dir = "demo_output/fractional_fourier"
os.makedirs(out_dir, exist_ok=True)

basis = build_basis((20, 12))
glyph = f_glyph()
coeffs = analyze(basis, glyph)

# phases only: the mode spectrum magnitude never changes
for chi in (0.0, math.pi / 4, math.pi / 2):
    out = ks_coeffs(coeffs, chi)
    print(f"chi={chi:.4f}: max |amplitude change| ="
          f" {np.max(np.abs(np.abs(out) - np.abs(coeffs))):.3e}")

# the symmetric transform commutes with rotations
a = ks_coeffs(rotate_coeffs(basis, coeffs, 0.7), 1.1)
b = rotate_coeffs(basis, ks_coeffs(coeffs, 1.1), 0.7)
print("K_S / rotation commutator:", np.max(np.abs(a - b)))

# antisymmetric transforms add angles
c = ka_coeffs(ka_coeffs(coeffs, 0.3), 0.9)
print("K_A additivity:", np.max(np.abs(c - ka_coeffs(coeffs, 1.2))))

# fractional stages of the glyph, rendered as magnitude
for k, beta in enumerate((math.pi / 8, math.pi / 4, math.pi / 2)):
    img = fractional_fourier_image(basis, glyph, chi=0.0, beta=beta)
    render(img, RenderSpec(scaling="adaptive", channel="abs"),
           f"{out_dir}/ka_stage{k}.pgm")
    print(f"beta={beta:.4f}: norm {np.linalg.norm(img):.12f}")
