"""Outer Galois points.

A point P off X = V(F) is an outer Galois point exactly when, in coordinates
with P = [0:...:0:1], the equation can be brought to x_last^d + G(x').  The
test here moves P to the last coordinate, removes the x_last^(d-1) term with
a Tschirnhaus shear and checks that every remaining mixed coefficient
vanishes.  No function-field computation is involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import _fast, linalg
from .errors import (
    CharDividesDegree,
    PointOnHypersurface,
    ShapeVerificationFailed,
)
from .fields import nth_roots
from .hypersurface import DEFAULT_POINT_CAP, Hypersurface, _check_cap, _defined_over_smaller, _target_field
from .poly import (
    Polynomial,
    _eval_raw,
    apply_linear,
    canonical_scalar,
    partial_derivative,
    shear_substitute,
    split_variable,
)
from .projlin import ProjectivePoint, ProjectiveTransform, basis_completion, projective_points

__all__ = [
    "TschirnhausResult",
    "GaloisReport",
    "StructureForm",
    "tschirnhaus",
    "is_outer_galois",
    "iter_galois_points",
    "enumerate_galois",
    "structure_normalize",
]

GROUP_NOTE = "cyclic of order d"


@dataclass
class TschirnhausResult:
    point: ProjectivePoint
    transform: ProjectiveTransform
    coefficients: list  # c_1 .. c_(d-1), polynomials in the first nvars-1 variables
    tail: Polynomial

    def normal_form(self) -> Polynomial:
        """x_last^d + sum c_i x_last^(d-i) + G in the full set of variables."""
        tail = self.tail
        n = tail.nvars + 1
        d = tail.degree
        f = tail.field
        out = Polynomial(f, n, d, {(0,) * (n - 1) + (d,): f.one}, check=False)
        for i, c in enumerate(self.coefficients, start=1):
            terms = {e + (d - i,): v for e, v in c.raw_terms().items()}
            out = out + Polynomial(f, n, d, terms, check=False)
        return out + tail.embed(n)

    @property
    def is_galois(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)


def _require_galois_ready(X: Hypersurface):
    if X.char_divides_degree:
        raise CharDividesDegree(X.field.p, X.degree)
    if X.degree < 2:
        raise ValueError("Galois point tests need degree >= 2")


def shear_at(F: Polynomial, j: int):
    """Normalise the x_j^d coefficient to 1 and shear away the x_j^(d-1) term.

    Returns ``(G, S)`` with ``G = apply_linear(F, S) / c0`` where c0 is the
    x_j^d coefficient of F and S replaces x_j by x_j - c_1/(d c0).
    """
    f = F.field
    n, d = F.nvars, F.degree
    top = F.raw_terms().get(tuple(d if t == j else 0 for t in range(n)), f.zero)
    if top == f.zero:
        raise PointOnHypersurface(f"coordinate point e_{j} lies on the hypersurface")
    F = F.scale(f.inv(top))
    c1 = split_variable(F, j)[d - 1]
    factor = f.neg(f.inv(f.from_int(d)))
    L = c1.scale(factor).embed(n, [t for t in range(n) if t != j])
    G = shear_substitute(F, j, L)
    row = [f.zero] * n
    row[j] = f.one
    for e, c in L.raw_terms().items():
        row[e.index(1)] = c
    S = tuple(tuple(row) if r == j else tuple(f.one if r == t else f.zero for t in range(n)) for r in range(n))
    return G, S


def tschirnhaus(X: Hypersurface, P: ProjectivePoint) -> TschirnhausResult:
    _require_galois_ready(X)
    F = X.lifted_equation(P.field)
    if _eval_raw(F, P.coords) == P.field.zero:
        raise PointOnHypersurface(f"{P} lies on {X}")
    n, d = F.nvars, F.degree
    f = P.field
    A = basis_completion([P], n).inverse()
    F0 = apply_linear(F, A)
    G, S = shear_at(F0, n - 1)
    parts = split_variable(G, n - 1)
    coefficients = [parts[d - i] for i in range(1, d)]
    transform = ProjectiveTransform(f, linalg.matmul(f, A.rows, S), check=False)
    return TschirnhausResult(P, transform, coefficients, parts[0])


def is_outer_galois(X: Hypersurface, P: ProjectivePoint) -> bool:
    return tschirnhaus(X, P).is_galois


# --- enumeration ---------------------------------------------------------------

class _PyGaloisFilter:
    """Pure-Python version of the necessary condition in :class:`_fast.GaloisFilter`."""

    def __init__(self, F: Polynomial):
        self.F = F
        self.partials = [partial_derivative(F, i) for i in range(F.nvars)]

    def __call__(self, coords) -> bool:
        F, f = self.F, self.F.field
        d = F.degree
        a = _eval_raw(F, coords)
        if a == f.zero:
            return False
        if d <= 2:
            return True
        grad = [_eval_raw(G, coords) for G in self.partials]
        L = Polynomial.linear_form(f, grad)
        D1 = Polynomial.zero(f, F.nvars, d - 1)
        for c, G in zip(coords, self.partials):
            if c != f.zero:
                D1 = D1 + G.scale(c)
        da = f.mul(f.from_int(d), a)
        return D1.scale(f.pow(da, d - 2)) == L ** (d - 1)


def iter_galois_points(X: Hypersurface, ext_max: int = 1, cap: int = DEFAULT_POINT_CAP):
    """Yield (k, P) for every outer Galois point rational over F_(p^k), k <= ext_max.

    Points are listed once, at the smallest k over which they are defined, in
    canonical order within each k.  Every yielded point passed the exact
    test; the vectorised and pure-Python filters only discard points that
    cannot qualify.
    """
    _require_galois_ready(X)
    for k in range(1, ext_max + 1):
        target = _target_field(X.field, k)
        _check_cap(target, X.nvars, cap)
    for k in range(1, ext_max + 1):
        target = _target_field(X.field, k)
        F = X.lifted_equation(target)
        if _fast.supported(target):
            filt = _fast.GaloisFilter(F)
            for block in _fast.point_blocks(target.p, F.nvars):
                for row in block[filt.mask(block)]:
                    P = ProjectivePoint._raw(target, tuple(int(v) for v in row))
                    if is_outer_galois(X, P):
                        yield k, P
            continue
        filt = _PyGaloisFilter(F)
        for P in projective_points(target, F.nvars):
            if k > 1 and _defined_over_smaller(P, k):
                continue
            if filt(P.coords) and is_outer_galois(X, P):
                yield k, P


@dataclass
class GaloisReport:
    """Outer Galois points found by exhaustive search over small fields.

    ``delta_lower_bound`` counts rational points only; the true number of
    outer Galois points is taken over the algebraic closure and can be larger.
    """

    points: list  # ProjectivePoint, ordered by extension degree then canonically
    degrees: list  # extension degree at which each point was found
    search_extension_max: int
    search_complete_over_searched_fields: bool
    bound: int
    degree: int
    group_structure_note: str = GROUP_NOTE
    counts_by_degree: dict = dc_field(default_factory=dict)

    @property
    def delta_lower_bound(self) -> int:
        return len(self.points)

    @property
    def structure_theorem_inapplicable(self) -> bool:
        return self.degree < 3

    @property
    def bound_respected(self) -> bool:
        return self.structure_theorem_inapplicable or self.delta_lower_bound <= self.bound

    def rational_points(self):
        """Points found over the base field itself (k = 1)."""
        return [P for P, k in zip(self.points, self.degrees) if k == 1]

    def to_json(self):
        return {
            "points": [{"k": k, "point": P.to_json()} for P, k in zip(self.points, self.degrees)],
            "search_extension_max": self.search_extension_max,
            "search_complete_over_searched_fields": self.search_complete_over_searched_fields,
            "delta_lower_bound": self.delta_lower_bound,
            "bound": self.bound,
            "bound_respected": self.bound_respected,
            "structure_theorem_inapplicable": self.structure_theorem_inapplicable,
            "group_structure_note": self.group_structure_note,
            "counts_by_degree": {str(k): v for k, v in sorted(self.counts_by_degree.items())},
            "note": "rational points over the searched fields only; a lower bound for the count over the closure",
        }


def enumerate_galois(X: Hypersurface, ext_max: int = 1, cap: int = DEFAULT_POINT_CAP) -> GaloisReport:
    points, degrees = [], []
    counts = {k: 0 for k in range(1, ext_max + 1)}
    for k, P in iter_galois_points(X, ext_max, cap):
        points.append(P)
        degrees.append(k)
        counts[k] += 1
    return GaloisReport(
        points=points,
        degrees=degrees,
        search_extension_max=ext_max,
        search_complete_over_searched_fields=True,
        bound=X.nvars,
        degree=X.degree,
        counts_by_degree=counts,
    )


# --- structure normal form -------------------------------------------------------

@dataclass
class StructureForm:
    """apply_linear(X.equation, transform) is proportional to :meth:`shape`.

    The shape is  sum_j b_j x_j^d + G(x_0, ..., x_(s-1))  over the Fermat block
    j = nvars-1, ..., nvars-1-r, with b_(nvars-1) = 1.  The other b_j are 1
    whenever the field has the needed d-th roots.
    """

    transform: ProjectiveTransform
    r: int
    tail: Polynomial  # G, in the first nvars - r - 1 variables
    block_coefficients: list  # b_j for j = nvars-1 down to nvars-1-r (raw)
    points: list

    @property
    def nvars(self):
        return self.tail.nvars + self.r + 1

    def shape(self) -> Polynomial:
        f = self.tail.field
        n, d = self.nvars, self.tail.degree
        terms = {}
        for i, b in enumerate(self.block_coefficients):
            j = n - 1 - i
            terms[tuple(d if t == j else 0 for t in range(n))] = b
        return Polynomial(f, n, d, terms, check=False) + self.tail.embed(n)

    def to_json(self):
        f = self.tail.field
        return {
            "matrix": self.transform.to_json(),
            "r": self.r,
            "G": self.tail.to_text(),
            "block_coefficients": [f.format(b) for b in self.block_coefficients],
            "shape": self.shape().to_text(),
        }


def structure_normalize(X: Hypersurface, points) -> StructureForm:
    """Bring X to Fermat-block normal form using the given outer Galois points."""
    _require_galois_ready(X)
    if not points:
        raise ValueError("structure_normalize needs at least one outer Galois point")
    f = points[0].field
    if any(P.field != f for P in points):
        raise ValueError("points must share a field")
    for P in points:
        if not is_outer_galois(X, P):
            raise ValueError(f"{P} is not an outer Galois point of {X}")
    pts = sorted(points, key=ProjectivePoint.sort_key)
    F = X.lifted_equation(f)
    n, d = F.nvars, F.degree
    r = len(pts) - 1
    s = n - r - 1
    A = basis_completion(pts, n).inverse()
    W = A.rows
    G = apply_linear(F, A)
    for i in range(r + 1):
        G, S = shear_at(G, n - 1 - i)
        W = linalg.matmul(f, W, S)
    block = list(range(n - 1, n - 2 - r, -1))
    pure = {tuple(d if t == j else 0 for t in range(n)): j for j in block}
    for e in G.raw_terms():
        if e in pure:
            continue
        if any(e[t] for t in range(s, n)):
            raise ShapeVerificationFailed(f"term {e} mixes the Fermat block after normalisation of {X}")
    coeffs = {j: G.raw_terms().get(e, f.zero) for e, j in pure.items()}
    if any(c == f.zero for c in coeffs.values()):
        raise ShapeVerificationFailed("a Fermat block coefficient vanished")
    G = G.scale(f.inv(coeffs[n - 1]))
    scaling = [f.one] * n
    block_coefficients = []
    for j in block:
        b = G.raw_terms()[pure_exp(n, d, j)]
        roots = nth_roots(f, f.inv(b), d) if f.is_finite else []
        if roots:
            scaling[j] = roots[0]
            b = f.one
        block_coefficients.append(b)
    D = tuple(tuple(scaling[i] if i == t else f.zero for t in range(n)) for i in range(n))
    W = linalg.matmul(f, W, D)
    G = apply_linear(G, D)
    tail_terms = {e[:s]: c for e, c in G.raw_terms().items() if e not in pure}
    tail = Polynomial(f, s, d, tail_terms, check=False)
    form = StructureForm(ProjectiveTransform(f, W, check=False), r, tail, block_coefficients, pts)
    if canonical_scalar(apply_linear(F, form.transform)) != canonical_scalar(form.shape()):
        raise ShapeVerificationFailed(f"normal form of {X} does not reconcile with its transform")
    return form


def pure_exp(n, d, j):
    return tuple(d if t == j else 0 for t in range(n))
