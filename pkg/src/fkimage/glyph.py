"""Built-in test glyph: a white letter F on black, 41x25 pixels.

The screen has (j_x, j_y) = (20, 12).  The letter is deliberately free of
any reflection or rotation symmetry, which makes it a good probe for the
orientation behavior of the unitary transforms.
"""

from __future__ import annotations

import numpy as np

from .mode_basis import ScreenShape

__all__ = ["f_glyph", "F_GLYPH_SHAPE"]

F_GLYPH_SHAPE = ScreenShape.from_pixels(41, 25)


def f_glyph() -> np.ndarray:
    """41x25 binary image (1.0 on 0.0) of the letter F, indexed [ix, iy]."""
    pixels = np.zeros(F_GLYPH_SHAPE.pixels)
    # stem: 3 px wide, 19 px tall
    pixels[13:16, 3:22] = 1.0
    # top arm: full width of the letter
    pixels[16:28, 19:22] = 1.0
    # middle arm: shorter
    pixels[16:24, 11:14] = 1.0
    return pixels
