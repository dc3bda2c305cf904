"""Build the cyclic cover of a plane cubic and check its deck transformation.

The cover of V(F) is V(x_n^d - F).  Scaling the new coordinate by a primitive
d-th root of unity leaves that equation fixed, which is what the last check
below confirms.
"""
from cyclic_covers import (Hypersurface, apply_linear, canonical_scalar, cyclic_cover,
                           deck_transform, prime_field)

field = prime_field(13)
base = Hypersurface.from_text("x0^3+2*x0*x1*x2+x1^3+5*x2^3", 3, field)
cover = cyclic_cover(base)
deck = deck_transform(cover)

print("base :", base.equation)
print("cover:", cover.equation)
print("deck transform rows:", deck.rows)

moved = canonical_scalar(apply_linear(cover.equation, deck))
print("equation fixed by the deck transform:", moved == cover.equation)
