"""Independent reference computations built on sympy and plain loops.

Nothing here calls the package's algebra; tests compare the package against
these functions.
"""

import itertools

import sympy as sp


def symbols(n):
    return sp.symbols(f"x0:{n}")


def to_sympy(F):
    """Polynomial -> sympy expression with integer coefficients (prime fields only)."""
    xs = symbols(F.nvars)
    expr = sp.Integer(0)
    for e, c in F.raw_terms().items():
        term = sp.Integer(int(c))
        for x, k in zip(xs, e):
            term *= x ** k
        expr += term
    return expr


def reduce_mod(expr, n, p):
    """Coefficient dict {exponent: c mod p} of an expression in x0..x(n-1)."""
    xs = symbols(n)
    poly = sp.Poly(sp.expand(expr), *xs)
    out = {}
    for e, c in poly.terms():
        c = int(c) % p
        if c:
            out[tuple(e)] = c
    return out


def substitute(F, rows, p):
    """Coefficients of F(Mx) mod p, expanded by sympy."""
    xs = symbols(F.nvars)
    images = [sum(int(rows[i][j]) * xs[j] for j in range(F.nvars)) for i in range(F.nvars)]
    expr = to_sympy(F).subs(dict(zip(xs, images)), simultaneous=True)
    return reduce_mod(expr, F.nvars, p)


def proportional(a, b, p):
    """True iff coefficient dicts a and b differ by a nonzero scalar mod p."""
    if set(a) != set(b):
        return False
    if not a:
        return True
    k = next(iter(a))
    lam = a[k] * pow(b[k], -1, p) % p
    return all(a[e] == lam * b[e] % p for e in a)


def evaluate(F, point, p):
    total = 0
    for e, c in F.raw_terms().items():
        term = int(c)
        for v, k in zip(point, e):
            term = term * pow(int(v), k, p) % p
        total += term
    return total % p


def projective_points(p, size):
    for v in itertools.product(range(p), repeat=size):
        lead = next((x for x in v if x), None)
        if lead == 1:
            yield v


def singular_points(F, p):
    """Brute force: points where all partials (via sympy diff) vanish mod p."""
    xs = symbols(F.nvars)
    expr = to_sympy(F)
    parts = [sp.Poly(sp.diff(expr, x), *xs) for x in xs]
    out = []
    for P in projective_points(p, F.nvars):
        if all(int(q.eval(dict(zip(xs, P)))) % p == 0 if not q.is_zero else True for q in parts):
            out.append(P)
    return out


def is_outer_galois(F, P, p):
    """Definition check: F(x + tP) = a (t + l(x))^d + G(x) with a = F(P) != 0.

    Expands F(x + tP) in t with sympy, reads l from the t^(d-1) coefficient
    and tests that the remainder does not involve t.
    """
    d = F.degree
    a = evaluate(F, P, p)
    if a == 0:
        return False
    xs = symbols(F.nvars)
    t = sp.Symbol("t")
    expr = sp.expand(to_sympy(F).subs({x: x + t * int(c) for x, c in zip(xs, P)}, simultaneous=True))
    poly_t = sp.Poly(expr, t)
    sub = poly_t.coeff_monomial(t ** (d - 1)) if d >= 1 else 0
    inv = pow(d * a % p, -1, p)
    ell = sp.expand(sub * inv)
    rest = sp.expand(expr - a * (t + ell) ** d)
    rest_poly = sp.Poly(rest, t, *xs)
    for e, c in rest_poly.terms():
        if e[0] > 0 and int(c) % p:
            return False
    return True


def galois_points(F, p):
    return [P for P in projective_points(p, F.nvars) if is_outer_galois(F, P, p)]


def gl_order(q, m):
    out = 1
    for i in range(m):
        out *= q ** m - q ** i
    return out


def gl_count_by_enumeration(p, m):
    count = 0
    for entries in itertools.product(range(p), repeat=m * m):
        M = sp.Matrix(m, m, entries)
        if int(M.det()) % p:
            count += 1
    return count
