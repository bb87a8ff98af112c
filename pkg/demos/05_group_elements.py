"""
Group elements: composing, inverting, serializing
=================================================

A general transform is parametrized by (chi; psi, theta, phi), realized as
a 2x2 unitary matrix for bookkeeping.  Elements compose and invert in
parameter space; applying an element and then its inverse restores any
image exactly.  On rectangular screens, note that parameter-space
composition tracks the matrix group but not the extra central phases the
flat levels attach to the antisymmetric transform (see the README), so
sequential application is the authoritative way to compose pipelines.
"""

import numpy as np

from fkimage import (FourierGroupElement, apply_element, build_basis,
                     compose, element_from_json, element_to_json, f_glyph,
                     inverse, to_matrix)

basis = build_basis((20, 12))
glyph = f_glyph().astype(complex)

e = FourierGroupElement(chi=1.2, psi=0.4, theta=0.9, phi=2.2)
print("element:", element_to_json(e))
print("matrix:\n", np.round(to_matrix(e), 6))

inv = inverse(e)
print("inverse:", element_to_json(inv))

# applying e then its inverse is exact to machine precision
once = apply_element(basis, glyph, e)
back = apply_element(basis, once, inv)
print("round-trip pixel error:", np.max(np.abs(back - glyph)))

# parameter composition matches matrix multiplication exactly
c = compose(e, inv)
print("compose(e, inverse(e)) ->", element_to_json(c))

# pure gyrations compose additively in theta
g1 = FourierGroupElement(0, 0, 0.5, 0)
g2 = FourierGroupElement(0, 0, 0.7, 0)
print("gyrations add:", compose(g1, g2).theta)

# JSON round trip (the CLI wire format)
decoded = element_from_json(element_to_json(e))
print("JSON round trip ok:", decoded == e)
