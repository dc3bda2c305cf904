"""List the outer Galois points of the Fermat cubic surface over F_13.

There are four, one at each coordinate vertex.  Normalising along all of them
gives the Fermat shape with r = 3 and an empty tail.
"""
from cyclic_covers import Hypersurface, enumerate_galois, prime_field, structure_normalize

X = Hypersurface.from_text("x0^3+x1^3+x2^3+x3^3", 4, prime_field(13))
report = enumerate_galois(X)
for P in report.points:
    print("Galois point", P.coords)
print("count", len(report.points), "bound", report.bound)

form = structure_normalize(X, report.points)
print("r =", form.r, "tail is zero:", form.tail.is_zero())
