"""Vectorised point scans over prime fields.

These kernels only *filter*: every point they flag is re-checked with the
exact routines before it reaches a result.  They require a prime field with
p < 2**31 so that products of residues fit in int64.
"""

from __future__ import annotations

import math

import numpy as np

from .poly import Polynomial, monomials, partial_derivative

CHUNK = 1 << 15


def supported(field) -> bool:
    return field.kind == "prime" and field.p < (1 << 31)


def point_blocks(p: int, size: int, chunk: int = CHUNK):
    """Canonical representatives of P^(size-1)(F_p) as int64 arrays, in canonical order."""
    for lead in range(size - 1, -1, -1):
        t = size - 1 - lead
        total = p ** t
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            block = np.zeros((len(idx), size), dtype=np.int64)
            block[:, lead] = 1
            rem = idx.copy()
            for col in range(size - 1, lead, -1):
                block[:, col] = rem % p
                rem //= p
            yield block


class _Powers:
    """Cached column powers of a point block modulo p."""

    def __init__(self, pts, p):
        self.pts = pts
        self.p = p
        self.cache = {}

    def __call__(self, i, e):
        key = (i, e)
        if key not in self.cache:
            if e == 0:
                self.cache[key] = np.ones(len(self.pts), dtype=np.int64)
            elif e == 1:
                self.cache[key] = self.pts[:, i] % self.p
            else:
                self.cache[key] = self(i, e - 1) * self(i, 1) % self.p
        return self.cache[key]


def evaluate_block(F: Polynomial, pts, powers=None):
    p = F.field.p
    powers = powers or _Powers(pts, p)
    total = np.zeros(len(pts), dtype=np.int64)
    for exp, c in F.raw_terms().items():
        v = np.full(len(pts), c, dtype=np.int64)
        for i, e in enumerate(exp):
            if e:
                v = v * powers(i, e) % p
        total = (total + v) % p
    return total


def singular_mask(F: Polynomial, pts, include_value: bool):
    """True where every partial derivative (and F itself, if asked) vanishes."""
    powers = _Powers(pts, F.field.p)
    mask = np.ones(len(pts), dtype=bool)
    polys = [partial_derivative(F, i) for i in range(F.nvars)]
    if include_value:
        polys.append(F)
    for G in polys:
        if not mask.any():
            break
        mask &= evaluate_block(G, pts, powers) == 0
    return mask


class GaloisFilter:
    """Necessary condition for P to be an outer Galois point of V(F).

    Writing F(x + tP) = sum_j t^j D_j(x), an outer Galois point forces
    F(x + tP) = a (t + lam(x))^d + G(x) with a = F(P).  Comparing the t^(d-1)
    and t^1 coefficients gives  D_1 * (d a)^(d-2) == D_(d-1)^(d-1),  where
    D_(d-1)(x) = grad F(P) . x  and  D_1(x) = P . grad F(x).
    """

    def __init__(self, F: Polynomial):
        self.F = F
        self.p = p = F.field.p
        self.d = d = F.degree
        n = F.nvars
        self.partials = [partial_derivative(F, i) for i in range(n)]
        self.basis = monomials(n, d - 1)
        index = {e: k for k, e in enumerate(self.basis)}
        coef = np.zeros((n, len(self.basis)), dtype=np.int64)
        for i, G in enumerate(self.partials):
            for e, c in G.raw_terms().items():
                coef[i, index[e]] = c
        self.coef = coef
        self.multinomial = np.array(
            [math.factorial(d - 1) // math.prod(math.factorial(x) for x in e) % p for e in self.basis],
            dtype=np.int64,
        )

    def mask(self, pts):
        p, d = self.p, self.d
        powers = _Powers(pts, p)
        a = evaluate_block(self.F, pts, powers)
        keep = a != 0
        if d <= 2 or not keep.any():
            return keep
        pts = pts[keep]
        a = a[keep]
        powers = _Powers(pts, p)
        grad = np.stack([evaluate_block(G, pts, powers) for G in self.partials], axis=1)
        d1 = (pts @ self.coef) % p
        scale = np.ones(len(pts), dtype=np.int64)
        da = d * a % p
        for _ in range(d - 2):
            scale = scale * da % p
        lhs = d1 * scale[:, None] % p
        gpow = _Powers(grad, p)
        rhs = np.empty_like(lhs)
        for k, e in enumerate(self.basis):
            v = np.full(len(pts), self.multinomial[k], dtype=np.int64)
            for i, x in enumerate(e):
                if x:
                    v = v * gpow(i, x) % p
            rhs[:, k] = v
        ok = np.all(lhs == rhs, axis=1)
        out = np.zeros(len(keep), dtype=bool)
        out[np.flatnonzero(keep)[ok]] = True
        return out
