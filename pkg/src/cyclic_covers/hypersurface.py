"""Hypersurfaces V(F) and bounded smoothness checks (Jacobian criterion)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _fast
from .errors import EnumerationCapExceeded, InfiniteField, ZeroPolynomial
from .fields import Field, check_degree, extension_field, prime_field
from .poly import Polynomial, _eval_raw, canonical_scalar, parse, partial_derivative
from .projlin import ProjectivePoint, count_projective_points, projective_points

__all__ = [
    "Hypersurface",
    "SmoothnessCertificate",
    "singular_points",
    "smoothness_certificate",
    "point_count",
    "smooth_modulo_primes",
    "DEFAULT_POINT_CAP",
]

DEFAULT_POINT_CAP = 1 << 24


class Hypersurface:
    """V(F) for a nonzero homogeneous F, stored with F scalar-canonical.

    Over a finite field of characteristic p the degree must be prime to p
    unless ``allow_char_dividing_degree`` is set; such hypersurfaces can be
    compared and scanned for singular points but not fed to the Galois
    machinery.
    """

    __slots__ = ("equation", "char_divides_degree")

    def __init__(self, equation: Polynomial, *, allow_char_dividing_degree: bool = False):
        if equation.is_zero():
            raise ZeroPolynomial("hypersurface equation must be nonzero")
        divides = equation.field.is_finite and math.gcd(equation.field.p, equation.degree) != 1
        if divides and not allow_char_dividing_degree:
            check_degree(equation.field, equation.degree)
        self.equation = canonical_scalar(equation)
        self.char_divides_degree = divides

    @classmethod
    def from_text(cls, text: str, nvars: int, field: Field, **kwargs) -> "Hypersurface":
        return cls(parse(text, nvars, field), **kwargs)

    @property
    def field(self) -> Field:
        return self.equation.field

    @property
    def nvars(self) -> int:
        return self.equation.nvars

    @property
    def ambient_dim(self) -> int:
        return self.equation.nvars - 1

    @property
    def degree(self) -> int:
        return self.equation.degree

    def contains(self, point: ProjectivePoint) -> bool:
        return _eval_raw(self.lifted_equation(point.field), point.coords) == point.field.zero

    def lifted_equation(self, target: Field) -> Polynomial:
        return self.equation.lift(target)

    def __eq__(self, other):
        return isinstance(other, Hypersurface) and self.equation == other.equation

    def __hash__(self):
        return hash(self.equation)

    def __str__(self):
        return f"V({self.equation.to_text()})"

    def __repr__(self):
        return f"Hypersurface({self.equation.to_text()!r}, P^{self.ambient_dim}, {self.field.spec_text()})"


def _target_field(field: Field, k: int) -> Field:
    field.require_finite("point search")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        return field
    if field.kind != "prime":
        raise ValueError("extension search is only supported over prime base fields")
    return extension_field(field.p, k)


def _check_cap(target: Field, size: int, cap: int):
    n = count_projective_points(target.order, size)
    if n > cap:
        raise EnumerationCapExceeded(n, cap)
    return n


def _is_singular_raw(partials, F, coords, include_value):
    zero = F.field.zero
    if include_value and _eval_raw(F, coords) != zero:
        return False
    return all(_eval_raw(G, coords) == zero for G in partials)


def singular_points(X: Hypersurface, k: int = 1, cap: int = DEFAULT_POINT_CAP):
    """Points of P^m(F_(p^k)) where every partial derivative of the equation vanishes.

    When p divides the degree the Euler relation no longer puts singular
    points on X automatically, so the equation itself is required to vanish
    as well.
    """
    if not X.field.is_finite:
        raise InfiniteField("singular point search needs a finite field; use smooth_modulo_primes over Q")
    target = _target_field(X.field, k)
    _check_cap(target, X.nvars, cap)
    F = X.lifted_equation(target)
    include_value = X.char_divides_degree
    partials = [partial_derivative(F, i) for i in range(F.nvars)]
    out = []
    if _fast.supported(target):
        for block in _fast.point_blocks(target.p, F.nvars):
            for row in block[_fast.singular_mask(F, block, include_value)]:
                coords = tuple(int(v) for v in row)
                if _is_singular_raw(partials, F, coords, include_value):
                    out.append(ProjectivePoint._raw(target, coords))
        return out
    for P in projective_points(target, F.nvars):
        if _is_singular_raw(partials, F, P.coords, include_value):
            out.append(P)
    return out


def _defined_over_smaller(point: ProjectivePoint, k: int) -> bool:
    field = point.field
    for j in range(1, k):
        if k % j == 0 and all(field.in_subfield(c, j) for c in point.coords):
            return True
    return False


@dataclass
class SmoothnessCertificate:
    """No singular point rational over F_(p^k) for k <= k_max unless listed.

    An empty list is evidence, not proof, of smoothness over the closure.
    """

    k_max: int
    singular: list = dc_field(default_factory=list)  # (k, ProjectivePoint), k minimal

    @property
    def clean(self) -> bool:
        return not self.singular

    def to_json(self):
        return {"k_max": self.k_max, "singular": [{"k": k, "point": P.to_json()} for k, P in self.singular]}


def smoothness_certificate(X: Hypersurface, k_max: int = 2, cap: int = DEFAULT_POINT_CAP) -> SmoothnessCertificate:
    found = []
    for k in range(1, k_max + 1):
        for P in singular_points(X, k, cap):
            if k == 1 or not _defined_over_smaller(P, k):
                found.append((k, P))
    return SmoothnessCertificate(k_max, found)


def point_count(X: Hypersurface, k: int = 1, cap: int = DEFAULT_POINT_CAP) -> int:
    """Number of points of X rational over F_(p^k)."""
    target = _target_field(X.field, k)
    _check_cap(target, X.nvars, cap)
    F = X.lifted_equation(target)
    if _fast.supported(target):
        return int(sum(np.count_nonzero(_fast.evaluate_block(F, b) == 0) for b in _fast.point_blocks(target.p, F.nvars)))
    zero = target.zero
    return sum(1 for P in projective_points(target, F.nvars) if _eval_raw(F, P.coords) == zero)


def reduce_mod(F: Polynomial, p: int) -> Polynomial | None:
    """Reduction of a rational polynomial modulo p; None if a denominator is divisible by p."""
    Fp = prime_field(p)
    terms = {}
    for e, c in F.raw_terms().items():
        if c.denominator % p == 0:
            return None
        v = c.numerator * pow(c.denominator, -1, p) % p
        if v:
            terms[e] = v
    return Polynomial(Fp, F.nvars, F.degree, terms, check=False)


def smooth_modulo_primes(X: Hypersurface, primes=(5, 7, 11, 13), cap: int = DEFAULT_POINT_CAP):
    """For X over Q: {p: bool} telling whether the reduction mod p has no F_p-rational singular point.

    Primes dividing the degree, a denominator, or the leading coefficient are
    skipped.  A singular X over Q is singular modulo almost every prime, so a
    ``True`` entry is evidence of smoothness, never proof.
    """
    if X.field.kind != "rational":
        raise ValueError("smooth_modulo_primes expects a hypersurface over Q")
    out = {}
    lead = X.equation.raw_terms()[X.equation.leading_monomial()]
    for p in primes:
        if X.degree % p == 0 or lead.numerator % p == 0:
            continue
        G = reduce_mod(X.equation, p)
        if G is None or G.is_zero():
            continue
        out[p] = not singular_points(Hypersurface(G), 1, cap)
    return out
