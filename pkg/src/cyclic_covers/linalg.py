"""Dense exact linear algebra on raw field values.

Matrices are tuples of row tuples.  Elimination always pivots on the first
nonzero entry, so results are deterministic.
"""

from .errors import DimensionMismatch, SingularMatrix


def as_rows(field, M):
    """Raw row tuples from a ProjectiveTransform, nested lists or tuples."""
    rows = getattr(M, "rows", M)
    out = tuple(tuple(field.coerce(x) for x in row) for row in rows)
    n = len(out)
    if any(len(r) != n for r in out):
        raise DimensionMismatch("matrix must be square")
    return out


def identity(field, n):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


def matmul(field, A, B):
    if len(A[0]) != len(B):
        raise DimensionMismatch("inner dimensions differ")
    add, mul, zero = field.add, field.mul, field.zero
    cols = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in cols:
            s = zero
            for a, b in zip(row, col):
                if a != zero and b != zero:
                    s = add(s, mul(a, b))
            out_row.append(s)
        out.append(tuple(out_row))
    return tuple(out)


def matvec(field, A, v):
    add, mul, zero = field.add, field.mul, field.zero
    out = []
    for row in A:
        s = zero
        for a, b in zip(row, v):
            if a != zero and b != zero:
                s = add(s, mul(a, b))
        out.append(s)
    return tuple(out)


def determinant(field, A):
    n = len(A)
    m = [list(r) for r in A]
    det = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != field.zero), None)
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = field.neg(det)
        pv = m[c][c]
        det = field.mul(det, pv)
        inv = field.inv(pv)
        for r in range(c + 1, n):
            f = m[r][c]
            if f != field.zero:
                f = field.mul(f, inv)
                m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[c])]
    return det


def inverse(field, A):
    n = len(A)
    m = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != field.zero), None)
        if piv is None:
            raise SingularMatrix("matrix is not invertible")
        m[c], m[piv] = m[piv], m[c]
        inv = field.inv(m[c][c])
        m[c] = [field.mul(x, inv) for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != field.zero:
                f = m[r][c]
                m[r] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[r], m[c])]
    return tuple(tuple(r[n:]) for r in m)


def rank(field, vectors):
    """Rank of a list of vectors (rows)."""
    m = [list(v) for v in vectors]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != field.zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.inv(m[r][c])
        for i in range(len(m)):
            if i != r and m[i][c] != field.zero:
                f = field.mul(m[i][c], inv)
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def transpose(A):
    return tuple(zip(*A))
