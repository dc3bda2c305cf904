"""Hide a cover behind a random change of coordinates, then recover the base.

We start from a smooth cubic curve Y, form its cover, apply a random g in
GL_4(F_13), and hand only the result to recover_branch.  The recovered branch
curve must be projectively equivalent to Y, and base_equivalence produces
the explicit 3x3 witness.
"""
from cyclic_covers import (Hypersurface, apply_linear, base_equivalence, cover_equation,
                           prime_field, random_invertible, recover_branch, verify_equivalence)

field = prime_field(13)
Y = Hypersurface.from_text("x0^3+2*x0*x1*x2+x1^3+5*x2^3", 3, field)
g = random_invertible(field, 4, 2024)
H = Hypersurface(apply_linear(cover_equation(Y.equation), g))
print("disguised cover:", H.equation)

rec = recover_branch(H)
print("recovered branch:", rec.branch.equation)
print("Galois point used:", rec.galois_point.coords)

T = base_equivalence(Y, rec.branch, g @ rec.witness)
print("base witness:", T.rows)
print("verified:", verify_equivalence(Y, rec.branch, T))
