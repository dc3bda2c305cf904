"""Recover the branch hypersurface of a cyclic cover, and turn an equivalence of
covers into an equivalence of their branch loci.

Both procedures follow the argument that covers determine their branch
hypersurfaces: locate an outer Galois point, move it to [0:...:0:1], show the
map between covers is block diagonal there and read off the base block.
Every structural claim made on the way is checked at runtime; a failed check
raises :class:`~cyclic_covers.errors.BlockStructureViolation` or
:class:`~cyclic_covers.errors.ShapeVerificationFailed` instead of being assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cover import as_cover, cover_equation
from .errors import (
    BlockStructureViolation,
    DimensionMismatch,
    NoGaloisPointFound,
    NotACoverShape,
    NotAnEquivalence,
    ShapeVerificationFailed,
)
from .fields import extension_field, nth_roots
from .galois import is_outer_galois, iter_galois_points, tschirnhaus
from .hypersurface import DEFAULT_POINT_CAP, Hypersurface
from .poly import Polynomial, apply_linear, canonical_scalar
from .projlin import ProjectivePoint, ProjectiveTransform

__all__ = ["Recovery", "recover_branch", "base_equivalence"]


@dataclass
class Recovery:
    """Branch hypersurface Y of H together with a substitution witness.

    canonical_scalar(apply_linear(H.equation, witness)) equals the canonical
    form of cover_equation(base).  ``branch`` is V(base) with its equation
    rescaled to canonical form; the rescaled cover x^d - c*base is in general
    only a twist of the cover of base, which is why ``base`` is kept too.
    """

    branch: Hypersurface
    witness: ProjectiveTransform
    galois_point: ProjectivePoint
    base: Polynomial

    def to_json(self):
        return {
            "base_poly": self.base.to_text(),
            "branch_canonical": self.branch.equation.to_text(),
            "witness_matrix": self.witness.to_json(),
            "galois_point_used": self.galois_point.to_json(),
            "field": self.witness.field.spec_text(),
        }


def recover_branch(H: Hypersurface, hint: ProjectivePoint | None = None, ext_max: int = 1,
                   cap: int = DEFAULT_POINT_CAP) -> Recovery:
    """Find Y with H projectively equivalent to V(x_last^d - Y).

    Uses ``hint`` as the outer Galois point when given, otherwise the first
    one in canonical order.  Raises NotACoverShape when the point is not an
    outer Galois point of H.
    """
    if hint is None:
        found = next(iter_galois_points(H, ext_max, cap), None)
        if found is None:
            raise NoGaloisPointFound(ext_max)
        Q = found[1]
    else:
        Q = hint
    t = tschirnhaus(H, Q)
    if not t.is_galois:
        bad = next(i for i, c in enumerate(t.coefficients, start=1) if not c.is_zero())
        raise NotACoverShape(f"{Q} is not an outer Galois point of {H}: coefficient c_{bad} is nonzero")
    base = -t.tail
    Y = Hypersurface(base)
    lhs = canonical_scalar(apply_linear(H.lifted_equation(Q.field), t.transform))
    if lhs != canonical_scalar(cover_equation(base)):
        raise ShapeVerificationFailed(f"witness for {H} does not reproduce the cover shape")
    return Recovery(Y, t.transform, Q, base)


def _lift_transform(g: ProjectiveTransform, target):
    return ProjectiveTransform(target, [[g.field.lift(x, target) for x in row] for row in g.rows], check=False)


def _root_field(field, a, d):
    """Smallest field F_(p^k) (k >= 1) over a prime field holding a d-th root of a."""
    if nth_roots(field, a, d):
        return field
    if field.kind != "prime":
        return None
    for k in range(2, 9):
        E = extension_field(field.p, k)
        if nth_roots(E, field.lift(a, E), d):
            return E
    return None


def base_equivalence(Y1: Hypersurface, Y2: Hypersurface, g: ProjectiveTransform) -> ProjectiveTransform:
    """Base transform T with canonical(Y1.equation o T) == canonical(Y2.equation).

    ``g`` must carry the cover of Y1 to a cover of Y2: apply_linear(cover(Y1), g)
    is a scalar multiple of x_last^d - c * Y2.equation for some nonzero c.
    Allowing c matters because equations are stored rescaled, and rescaling
    the base only twists the cover.

    If g moves [0:...:0:1] to another outer Galois point Q of cover(Y1), an
    automorphism of cover(Y1) swapping the two points is built first.  That
    automorphism scales coordinates by a d-th root; when the base field lacks
    it the whole computation moves to the smallest extension that has it and
    the returned transform lives there.
    """
    if Y1.nvars != Y2.nvars or g.size != Y1.nvars + 1:
        raise DimensionMismatch("base hypersurfaces and cover transform have incompatible sizes")
    f = g.field
    F1 = Y1.lifted_equation(f)
    F2 = Y2.lifted_equation(f)
    d, n = F1.degree, F1.nvars
    L = n  # index of the cover variable
    C1 = cover_equation(F1)
    image = as_cover(Hypersurface(apply_linear(C1, g)))
    if image is None or image[0].equation != canonical_scalar(F2):
        raise NotAnEquivalence("g does not carry cover(Y1) to a cover of Y2")

    Q = ProjectivePoint(f, g.column(L))
    e_last = ProjectivePoint.standard(f, n + 1, L)
    if Q != e_last:
        H1 = Hypersurface(C1)
        if not is_outer_galois(H1, Q):
            raise BlockStructureViolation(f"image {Q} of the standard Galois point is not an outer Galois point")
        if Q.coords[L] != f.zero:
            raise BlockStructureViolation(f"outer Galois point {Q} of the cover lies off the branch hyperplane")
        p = ProjectivePoint(f, Q.coords[:L])
        t = tschirnhaus(Hypersurface(F1), p)
        if not t.is_galois:
            raise BlockStructureViolation(f"{p} is not an outer Galois point of the branch locus")
        W = t.transform.rows
        F1W = apply_linear(F1, t.transform)
        b = F1W.raw_terms()[tuple(d if i == n - 1 else 0 for i in range(n))]
        minus_b = f.neg(b)
        target = _root_field(f, minus_b, d)
        if target is None:
            raise BlockStructureViolation(f"no d-th root of {f.format(minus_b)} in any extension of degree <= 8")
        if target != f:
            return base_equivalence(
                Hypersurface(Y1.equation.lift(target)),
                Hypersurface(Y2.equation.lift(target)),
                _lift_transform(g, target),
            )
        alpha = nth_roots(f, minus_b, d)[0]
        # W~ = diag(W, 1); tau swaps x_(n-1) and x_L with scalings alpha, 1/alpha.
        Wt = tuple(tuple(W[i]) + (f.zero,) for i in range(n)) + (tuple(f.zero for _ in range(n)) + (f.one,),)
        tau = [[f.one if i == j else f.zero for j in range(n + 1)] for i in range(n + 1)]
        tau[L][L] = f.zero
        tau[n - 1][n - 1] = f.zero
        tau[L][n - 1] = alpha
        tau[n - 1][L] = f.inv(alpha)
        sigma_rows = linalg.matmul(f, linalg.matmul(f, Wt, tuple(map(tuple, tau))), linalg.inverse(f, Wt))
        sigma = ProjectiveTransform(f, sigma_rows, check=False)
        if canonical_scalar(apply_linear(C1, sigma)) != canonical_scalar(C1):
            raise BlockStructureViolation("swap of Galois points is not an automorphism of the cover")
        g = sigma.inverse() @ g

    rows = g.rows
    if any(rows[i][L] != f.zero for i in range(n)):
        raise BlockStructureViolation("adjusted cover transform does not fix [0:...:0:1]")
    if any(rows[L][j] != f.zero for j in range(n)):
        raise BlockStructureViolation("last row of the cover transform has a nonzero linear part")
    M = tuple(tuple(rows[i][:n]) for i in range(n))
    T = ProjectiveTransform(f, M)
    if canonical_scalar(apply_linear(F1, T)) != canonical_scalar(F2):
        raise BlockStructureViolation("extracted base block does not map Y1 to Y2")
    return T
