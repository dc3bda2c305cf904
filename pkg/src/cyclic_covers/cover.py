"""Cyclic d-fold covers V(x_new^d - F) and their deck transformation."""

from __future__ import annotations

from .errors import NoRootOfUnity, ZeroPolynomial
from .fields import FieldElement, check_degree, root_extension_degree, root_of_unity
from .hypersurface import Hypersurface
from .poly import Polynomial, split_variable
from .projlin import ProjectiveTransform

__all__ = ["cyclic_cover", "cover_equation", "deck_transform", "as_cover"]


def cover_equation(F: Polynomial) -> Polynomial:
    """x_m^d - F(x_0, ..., x_(m-1)) in one more variable (not normalised)."""
    n = F.nvars
    f = F.field
    top = Polynomial(f, n + 1, F.degree, {(0,) * n + (F.degree,): f.one}, check=False)
    return top - F.embed(n + 1)


def cyclic_cover(Y: Hypersurface) -> Hypersurface:
    """The cover of P^m branched along Y, as a hypersurface of P^(m+1).

    The new variable is x_(m+1).
    """
    check_degree(Y.field, Y.degree)
    return Hypersurface(cover_equation(Y.equation))


def deck_transform(C: Hypersurface, d: int | None = None) -> ProjectiveTransform:
    """diag(1, ..., 1, rho) for the canonical primitive d-th root of unity rho."""
    d = C.degree if d is None else d
    rho = root_of_unity(C.field, d)
    if rho is None:
        ext = root_extension_degree(C.field, d) if C.field.is_finite else None
        raise NoRootOfUnity(d, ext)
    n = C.nvars
    return ProjectiveTransform.diagonal(C.field, [C.field.one] * (n - 1) + [rho.value])


def as_cover(H: Hypersurface):
    """Recognise H = V(c x_last^d + B) with B free of x_last.

    Returns ``(Y, sign)`` with ``H ~ x_last^d - sign * Y.equation``, or None if
    a term mixes x_last with exponent strictly between 0 and d, the x_last^d
    term is missing, or nothing is left for the base.
    """
    f = H.field
    d = H.degree
    parts = split_variable(H.equation, H.nvars - 1)
    if any(not parts[k].is_zero() for k in range(1, d)):
        return None
    top = parts[d].raw_terms().get((0,) * (H.nvars - 1), f.zero) if d else f.zero
    if top == f.zero or parts[0].is_zero():
        return None
    base = parts[0].scale(f.neg(f.inv(top)))
    try:
        Y = Hypersurface(base)
    except ZeroPolynomial:
        return None
    lead = Y.equation.leading_monomial()
    sign = base.raw_terms()[lead]
    return Y, FieldElement(f, sign)
