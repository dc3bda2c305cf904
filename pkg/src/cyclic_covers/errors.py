"""Exception hierarchy.

Everything raised on purpose derives from :class:`CoverError`.  The
:class:`Falsification` branch is special: those errors can only fire if a
structural theorem about Galois points or cover equivalences fails on a
concrete input, so callers (the census in particular) treat them as results
rather than as operational failures.
"""


class CoverError(Exception):
    pass


class CharDividesDegree(CoverError, ValueError):
    def __init__(self, p, d):
        super().__init__(f"characteristic {p} divides degree {d}: gcd(p, d) must be 1")
        self.p = p
        self.d = d


class InfiniteField(CoverError, ValueError):
    pass


class NotHomogeneous(CoverError, ValueError):
    def __init__(self, first, second):
        super().__init__(f"polynomial is not homogeneous: {first} and {second} differ in degree")
        self.monomials = (first, second)


class PolynomialSyntaxError(CoverError, ValueError):
    def __init__(self, message, text, position):
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")
        self.text = text
        self.position = position


class VariableOutOfRange(CoverError, IndexError):
    pass


class IndexOutOfRange(CoverError, IndexError):
    pass


class DimensionMismatch(CoverError, ValueError):
    pass


class SingularMatrix(CoverError, ValueError):
    pass


class NotLinear(CoverError, ValueError):
    pass


class SelfReference(CoverError, ValueError):
    pass


class ZeroPolynomial(CoverError, ValueError):
    pass


class DependentPoints(CoverError, ValueError):
    pass


class CapExceeded(CoverError, RuntimeError):
    def __init__(self, needed, cap, what="matrices"):
        super().__init__(f"search needs {needed} {what}, cap is {cap}")
        self.needed = needed
        self.cap = cap


class EnumerationCapExceeded(CapExceeded):
    def __init__(self, needed, cap):
        super().__init__(needed, cap, what="points")


class NoRootOfUnity(CoverError, ValueError):
    def __init__(self, d, min_extension):
        super().__init__(
            f"no primitive {d}-th root of unity in the field; "
            f"smallest extension containing one has degree {min_extension}"
        )
        self.d = d
        self.min_extension = min_extension


class PointOnHypersurface(CoverError, ValueError):
    pass


class NoGaloisPointFound(CoverError, LookupError):
    def __init__(self, ext_max):
        super().__init__(f"no outer Galois point rational over F_(p^k), k <= {ext_max}")
        self.ext_max = ext_max


class NotACoverShape(CoverError, ValueError):
    pass


class NotAnEquivalence(CoverError, ValueError):
    pass


class Falsification(CoverError):
    """A structural guarantee failed on a concrete input.

    ``bundle`` holds whatever data is needed to replay the failure.
    """

    def __init__(self, message, bundle=None):
        super().__init__(message)
        self.bundle = bundle or {}


class ShapeVerificationFailed(Falsification):
    pass


class BlockStructureViolation(Falsification):
    pass


class GaloisBoundViolation(Falsification):
    pass
