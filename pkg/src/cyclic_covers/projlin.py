"""Projective points, projective transformations and matrix enumeration.

A :class:`ProjectiveTransform` acts on points by ``P -> M P`` and on
polynomials by precomposition, ``F -> F(M x)`` (see
:func:`cyclic_covers.poly.apply_linear`).  With these conventions
``V(F(M x)) = M^-1 V(F)``.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterator, Sequence

from . import linalg
from .errors import CapExceeded, DependentPoints, DimensionMismatch, IndexOutOfRange, SingularMatrix
from .fields import Field, FieldElement
from .rng import SplitMix64

__all__ = [
    "ProjectivePoint",
    "ProjectiveTransform",
    "projective_points",
    "count_projective_points",
    "transposition",
    "basis_completion",
    "gl_order",
    "enumerate_invertible",
    "enumerate_pgl",
    "random_invertible",
]


class ProjectivePoint:
    """A point of P^m with canonical coordinates (first nonzero entry is 1)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: Field, coords: Sequence):
        raw = [field.coerce(c) for c in coords]
        lead = next((c for c in raw if c != field.zero), None)
        if lead is None:
            raise ValueError("all coordinates are zero")
        if lead != field.one:
            inv = field.inv(lead)
            raw = [field.mul(c, inv) for c in raw]
        self.field = field
        self.coords = tuple(raw)

    @classmethod
    def _raw(cls, field, coords):
        pt = cls.__new__(cls)
        pt.field = field
        pt.coords = coords
        return pt

    @classmethod
    def standard(cls, field, size, i):
        if not 0 <= i < size:
            raise IndexOutOfRange(f"standard point e_{i} in {size} coordinates")
        return cls._raw(field, tuple(field.one if j == i else field.zero for j in range(size)))

    @classmethod
    def parse(cls, field, text):
        """Accept ``0,0,1`` or ``[0:0:1]``."""
        body = text.strip().strip("[]")
        sep = ":" if ":" in body else ","
        return cls(field, [field.parse_element(t) for t in body.split(sep)])

    def __len__(self):
        return len(self.coords)

    @property
    def size(self):
        return len(self.coords)

    def __getitem__(self, i):
        return FieldElement(self.field, self.coords[i])

    def sort_key(self):
        return tuple(self.field.sort_key(c) for c in self.coords)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def __str__(self):
        return "[" + ":".join(self.field.format(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"ProjectivePoint({self})"

    def to_json(self):
        return [self.field.format(c) for c in self.coords]


def count_projective_points(q: int, size: int) -> int:
    return (q ** size - 1) // (q - 1)


def projective_points(field: Field, size: int) -> Iterator[ProjectivePoint]:
    """Every point of P^(size-1) over a finite field, in canonical order."""
    field.require_finite("point enumeration")
    elems = field.elements()
    zero, one = field.zero, field.one
    for lead in range(size - 1, -1, -1):
        prefix = (zero,) * lead + (one,)
        for tail in itertools.product(elems, repeat=size - 1 - lead):
            yield ProjectivePoint._raw(field, prefix + tail)


def _canonical_rows(field, rows):
    lead = next((x for r in rows for x in r if x != field.zero), None)
    if lead is None or lead == field.one:
        return rows
    inv = field.inv(lead)
    return tuple(tuple(field.mul(x, inv) for x in r) for r in rows)


class ProjectiveTransform:
    """Invertible matrix modulo scalars; stored with first nonzero entry 1."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows, *, check=True):
        raw = linalg.as_rows(field, rows)
        if check and linalg.determinant(field, raw) == field.zero:
            raise SingularMatrix("projective transform needs an invertible matrix")
        self.field = field
        self.rows = _canonical_rows(field, raw)

    @classmethod
    def identity(cls, field, size):
        return cls(field, linalg.identity(field, size), check=False)

    @classmethod
    def diagonal(cls, field, entries):
        n = len(entries)
        raw = [field.coerce(e) for e in entries]
        return cls(field, tuple(tuple(raw[i] if i == j else field.zero for j in range(n)) for i in range(n)))

    @classmethod
    def from_json(cls, field, data):
        return cls(field, [[field.parse_element(x) for x in row] for row in data])

    @property
    def size(self):
        return len(self.rows)

    @property
    def matrix(self):
        return [[FieldElement(self.field, x) for x in row] for row in self.rows]

    def __matmul__(self, other: "ProjectiveTransform") -> "ProjectiveTransform":
        if self.size != other.size:
            raise DimensionMismatch("transforms of different sizes")
        return ProjectiveTransform(self.field, linalg.matmul(self.field, self.rows, other.rows), check=False)

    def inverse(self) -> "ProjectiveTransform":
        return ProjectiveTransform(self.field, linalg.inverse(self.field, self.rows), check=False)

    def __pow__(self, k: int) -> "ProjectiveTransform":
        if k < 0:
            return self.inverse() ** (-k)
        result = ProjectiveTransform.identity(self.field, self.size)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, point: ProjectivePoint) -> ProjectivePoint:
        if point.size != self.size:
            raise DimensionMismatch("point and transform sizes differ")
        return ProjectivePoint(self.field, linalg.matvec(self.field, self.rows, point.coords))

    __call__ = apply

    def is_identity(self):
        return self.rows == linalg.identity(self.field, self.size)

    def __eq__(self, other):
        return isinstance(other, ProjectiveTransform) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"ProjectiveTransform({self.to_json()})"

    def to_json(self):
        return [[self.field.format(x) for x in row] for row in self.rows]

    def column(self, j):
        return tuple(row[j] for row in self.rows)


def transposition(field: Field, size: int, i: int, j: int) -> ProjectiveTransform:
    """Permutation matrix exchanging coordinates i and j."""
    if not (0 <= i < size and 0 <= j < size):
        raise IndexOutOfRange(f"transposition ({i} {j}) in {size} coordinates")
    perm = list(range(size))
    perm[i], perm[j] = perm[j], perm[i]
    rows = tuple(tuple(field.one if c == perm[r] else field.zero for c in range(size)) for r in range(size))
    return ProjectiveTransform(field, rows, check=False)


def basis_completion(points: Sequence[ProjectivePoint], size: int) -> ProjectiveTransform:
    """Transform T with T(points[i]) = e_(size-1-i).

    The matrix B = T^-1 has the points as its last columns (points[0] in the
    last column); the remaining columns are standard vectors, taken greedily in
    index order whenever they keep the set independent.
    """
    if not points:
        raise ValueError("need at least one point")
    field = points[0].field
    if len(points) > size:
        raise DependentPoints(f"{len(points)} points cannot be independent in {size} coordinates")
    for P in points:
        if P.size != size:
            raise DimensionMismatch("point size differs from transform size")
    vecs = [P.coords for P in points]
    if linalg.rank(field, vecs) < len(vecs):
        raise DependentPoints("points have linearly dependent representatives")
    fillers = []
    current = list(vecs)
    for j in range(size):
        if len(current) == size:
            break
        e = tuple(field.one if t == j else field.zero for t in range(size))
        if linalg.rank(field, current + [e]) == len(current) + 1:
            current.append(e)
            fillers.append(e)
    columns = [None] * size
    for i, v in enumerate(vecs):
        columns[size - 1 - i] = v
    free = iter(fillers)
    for c in range(size):
        if columns[c] is None:
            columns[c] = next(free)
    B = linalg.transpose(columns)
    return ProjectiveTransform(field, linalg.inverse(field, B), check=False)


def gl_order(q: int, m: int) -> int:
    return math.prod(q ** m - q ** i for i in range(m))


def enumerate_invertible(field: Field, m: int, cap: int, start: int = 0, stop: int | None = None):
    """Every invertible m x m matrix (raw row tuples), row-major lexicographic.

    Entries follow the field's canonical element order.  ``start``/``stop``
    select a slice of the stream; slices merged in order reproduce the full
    sequence, so the search can be split across workers.
    """
    field.require_finite("matrix enumeration")
    total = gl_order(field.order, m)
    if total > cap:
        raise CapExceeded(total, cap)
    elems = field.elements()
    vectors = list(itertools.product(elems, repeat=m))

    def extend(rows):
        if len(rows) == m:
            yield tuple(rows)
            return
        for v in vectors:
            if linalg.rank(field, rows + [v]) == len(rows) + 1:
                yield from extend(rows + [v])

    return itertools.islice(extend([]), start, stop)


def enumerate_pgl(field: Field, m: int, cap: int) -> Iterator[ProjectiveTransform]:
    """One representative (first nonzero entry 1) per element of PGL_m."""
    for rows in enumerate_invertible(field, m, cap):
        lead = next(x for r in rows for x in r if x != field.zero)
        if lead == field.one:
            yield ProjectiveTransform(field, rows, check=False)


def random_invertible(field: Field, m: int, seed: int) -> ProjectiveTransform:
    """Uniform draw from GL_m by rejection, driven by SplitMix64(seed).

    Entries are taken row-major, each an index into the canonical element
    list; singular draws are discarded and the stream continues.
    """
    field.require_finite("random matrices")
    rng = SplitMix64(seed)
    elems = field.elements()
    q = len(elems)
    while True:
        rows = tuple(tuple(elems[rng.below(q)] for _ in range(m)) for _ in range(m))
        if linalg.determinant(field, rows) != field.zero:
            return ProjectiveTransform(field, rows, check=False)
