"""Sparse homogeneous polynomials over an exact field.

Terms are stored in a dict keyed by exponent tuples; coefficients are raw
field values (see :mod:`cyclic_covers.fields`) and zero coefficients are never
stored.  The global monomial order is graded lexicographic with
``x0 > x1 > ...``; terms iterate from the largest monomial down.

Text grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := atom ('*' atom)*
    atom   := integer ['/' integer] | '(' element ')' | 'x' index ['^' exponent]

Integers are reduced into the field.  ``(element)`` takes a field element in
the field's own text form, e.g. ``(2*a+1)`` over ``ext:5^2``.
"""

from __future__ import annotations

import math
import re

from . import linalg
from .errors import (
    DimensionMismatch,
    NotHomogeneous,
    NotLinear,
    PolynomialSyntaxError,
    SelfReference,
    SingularMatrix,
    VariableOutOfRange,
    ZeroPolynomial,
)
from .fields import Field, FieldElement

__all__ = [
    "Polynomial",
    "parse",
    "evaluate",
    "partial_derivative",
    "apply_linear",
    "shear_substitute",
    "canonical_scalar",
    "monomials",
    "split_variable",
]


def _order_key(exp):
    return (sum(exp), exp)


def monomials(nvars: int, d: int):
    """All exponent tuples of total degree d in nvars variables, largest first."""
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


def _mono_text(exp):
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


class Polynomial:
    """Homogeneous polynomial of a fixed degree in ``nvars`` variables."""

    __slots__ = ("field", "nvars", "degree", "_terms", "_hash")

    def __init__(self, field: Field, nvars: int, degree: int, terms=None, *, check=True):
        self.field = field
        self.nvars = nvars
        self.degree = degree
        self._hash = None
        if not check:
            self._terms = terms if terms is not None else {}
            return
        clean = {}
        first = None
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise DimensionMismatch(f"monomial {exp} has {len(exp)} exponents, expected {nvars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = field.coerce(c)
            if c == field.zero:
                continue
            if sum(exp) != degree:
                raise NotHomogeneous(_mono_text(first or exp) or "1", _mono_text(exp) or "1")
            first = first or exp
            clean[exp] = c
        self._terms = clean

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, field, nvars, degree):
        return cls(field, nvars, degree, {}, check=False)

    @classmethod
    def variable(cls, field, nvars, i):
        if not 0 <= i < nvars:
            raise VariableOutOfRange(f"x{i} with {nvars} variables")
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(field, nvars, 1, {exp: field.one}, check=False)

    @classmethod
    def linear_form(cls, field, coeffs):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = field.coerce(c)
            if c != field.zero:
                terms[tuple(1 if j == i else 0 for j in range(n))] = c
        return cls(field, n, 1, terms, check=False)

    @classmethod
    def constant(cls, field, nvars, c):
        c = field.coerce(c)
        terms = {} if c == field.zero else {(0,) * nvars: c}
        return cls(field, nvars, 0, terms, check=False)

    # -- access ---------------------------------------------------------------

    def items(self):
        """(exponent tuple, raw coefficient) pairs in global monomial order."""
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    @property
    def terms(self):
        return {e: FieldElement(self.field, c) for e, c in self._terms.items()}

    def raw_terms(self):
        return self._terms

    def coefficient(self, exp):
        return FieldElement(self.field, self._terms.get(tuple(exp), self.field.zero))

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def leading_monomial(self):
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self._terms, key=_order_key)

    def support_variables(self):
        return sorted({i for e in self._terms for i, x in enumerate(e) if x})

    # -- comparison -----------------------------------------------------------

    def _key(self):
        return (self.field, self.nvars, self.degree, frozenset(self._terms.items()))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    # -- arithmetic -----------------------------------------------------------

    def _compatible(self, other):
        if self.field != other.field or self.nvars != other.nvars:
            raise DimensionMismatch("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._compatible(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise NotHomogeneous(_mono_text(self.leading_monomial()), _mono_text(other.leading_monomial()))
        f = self.field
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = f.add(out.get(e, f.zero), c)
            if s == f.zero:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial(f, self.nvars, self.degree, out, check=False)

    def __neg__(self):
        f = self.field
        return Polynomial(f, self.nvars, self.degree, {e: f.neg(c) for e, c in self._terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return Polynomial.zero(f, self.nvars, self.degree)
        return Polynomial(f, self.nvars, self.degree, {e: f.mul(v, c) for e, v in self._terms.items()}, check=False)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._compatible(other)
            terms = _mul_terms(self.field, self._terms, other._terms)
            return Polynomial(self.field, self.nvars, self.degree + other.degree, terms, check=False)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        result = Polynomial.constant(self.field, self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    # -- text -----------------------------------------------------------------

    def to_text(self):
        if not self._terms:
            return "0"
        f = self.field
        parts = []
        for exp, c in self.items():
            mono = _mono_text(exp)
            neg = f.kind == "rational" and c < 0
            if neg:
                c = -c
            if c == f.one and mono:
                body = mono
            else:
                ctext = f.format(c)
                if f.kind == "extension" and not re.fullmatch(r"\d+", ctext):
                    ctext = f"({ctext})"
                body = f"{ctext}*{mono}" if mono else ctext
            if parts:
                parts.append(("-" if neg else "+") + body)
            else:
                parts.append(("-" if neg else "") + body)
        return "".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, nvars={self.nvars}, field={self.field.spec_text()})"

    # -- structural helpers ---------------------------------------------------

    def lift(self, target: Field):
        """Same polynomial with coefficients embedded into an extension field."""
        if target == self.field:
            return self
        terms = {e: self.field.lift(c, target) for e, c in self._terms.items()}
        return Polynomial(target, self.nvars, self.degree, terms, check=False)

    def embed(self, nvars: int, positions=None):
        """Re-index variables: old variable i becomes new variable positions[i]."""
        positions = list(range(self.nvars)) if positions is None else list(positions)
        terms = {}
        for e, c in self._terms.items():
            new = [0] * nvars
            for i, x in enumerate(e):
                new[positions[i]] += x
            terms[tuple(new)] = c
        return Polynomial(self.field, nvars, self.degree, terms, check=False)

    def restrict(self, keep):
        """Drop every variable not in ``keep``; terms using a dropped variable must be absent."""
        keep = list(keep)
        dropped = [i for i in range(self.nvars) if i not in keep]
        terms = {}
        for e, c in self._terms.items():
            if any(e[i] for i in dropped):
                raise ValueError("polynomial depends on a dropped variable")
            terms[tuple(e[i] for i in keep)] = c
        return Polynomial(self.field, len(keep), self.degree, terms, check=False)


def _mul_terms(field, a, b):
    add, mul, zero = field.add, field.mul, field.zero
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = mul(c1, c2)
            if e in out:
                s = add(out[e], v)
                if s == zero:
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = v
    return out


# --- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)(\d+)|(\^)|(\*)|(/)|([+-])|(\())")


class _Parser:
    def __init__(self, text, nvars, field):
        self.text = text
        self.nvars = nvars
        self.field = field
        self.pos = 0

    def error(self, msg):
        raise PolynomialSyntaxError(msg, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self):
        self.skip_ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.error("expected integer")
        self.pos = m.end()
        return int(m.group())

    def expr(self):
        terms = []
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        terms.append(self.term(sign))
        while self.peek() in ("+", "-") and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            terms.append(self.term(sign))
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return terms

    def term(self, sign):
        f = self.field
        coeff = f.from_int(sign)
        exp = [0] * self.nvars
        self.atom(exp, coeff_box := [coeff])
        while self.peek() == "*":
            self.pos += 1
            self.atom(exp, coeff_box)
        return tuple(exp), coeff_box[0], self.pos

    def atom(self, exp, coeff_box):
        f = self.field
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("division by zero")
                value = f.coerce(_frac(num, den, f))
            else:
                value = f.from_int(num)
            coeff_box[0] = f.mul(coeff_box[0], value)
        elif ch == "(":
            close = self.text.find(")", self.pos)
            if close < 0:
                self.error("unclosed parenthesis")
            try:
                value = f.parse_element(self.text[self.pos + 1:close])
            except (ValueError, ZeroDivisionError):
                self.error("bad field element")
            coeff_box[0] = f.mul(coeff_box[0], value)
            self.pos = close + 1
        elif ch == "x":
            self.pos += 1
            if not self.text[self.pos:self.pos + 1].isdigit():
                self.error("expected variable index")
            start = self.pos
            idx = self.integer()
            if idx >= self.nvars:
                self.pos = start
                raise VariableOutOfRange(f"x{idx} with {self.nvars} variables (position {start})")
            e = 1
            if self.peek() == "^":
                self.pos += 1
                e = self.integer()
            exp[idx] += e
        else:
            self.error("expected coefficient or variable" if ch else "unexpected end of input")


def _frac(num, den, field):
    from fractions import Fraction

    if field.kind == "rational":
        return Fraction(num, den)
    d = field.from_int(den)
    if d == field.zero:
        raise ZeroDivisionError("denominator vanishes in the field")
    return field.div(field.from_int(num), d)


def parse(text: str, nvars: int, field: Field) -> Polynomial:
    """Parse ``text`` into a homogeneous polynomial in ``x0 .. x(nvars-1)``."""
    parser = _Parser(text, nvars, field)
    try:
        raw_terms = parser.expr()
    except ZeroDivisionError:
        parser.error("coefficient denominator vanishes in the field")
    degree = None
    first = None
    terms = {}
    for exp, c, _ in raw_terms:
        d = sum(exp)
        if degree is None:
            degree, first = d, exp
        elif d != degree:
            raise NotHomogeneous(_mono_text(first) or "1", _mono_text(exp) or "1")
        s = field.add(terms.get(exp, field.zero), c)
        if s == field.zero:
            terms.pop(exp, None)
        else:
            terms[exp] = s
    return Polynomial(field, nvars, degree, terms, check=False)


# --- evaluation and derivatives ----------------------------------------------

def _eval_raw(F: Polynomial, point):
    f = F.field
    add, mul, pw = f.add, f.mul, f.pow
    total = f.zero
    for exp, c in F._terms.items():
        v = c
        for x, e in zip(point, exp):
            if e:
                v = mul(v, pw(x, e))
                if v == f.zero:
                    break
        total = add(total, v)
    return total


def evaluate(F: Polynomial, point) -> FieldElement:
    if len(point) != F.nvars:
        raise DimensionMismatch(f"point has {len(point)} coordinates, polynomial has {F.nvars} variables")
    raw = [F.field.coerce(x) for x in point]
    return FieldElement(F.field, _eval_raw(F, raw))


def partial_derivative(F: Polynomial, i: int) -> Polynomial:
    if not 0 <= i < F.nvars:
        raise VariableOutOfRange(f"x{i} with {F.nvars} variables")
    f = F.field
    out = {}
    for exp, c in F._terms.items():
        e = exp[i]
        if not e:
            continue
        v = f.mul(c, f.from_int(e))
        if v == f.zero:
            continue
        new = exp[:i] + (e - 1,) + exp[i + 1:]
        out[new] = v
    return Polynomial(f, F.nvars, max(F.degree - 1, 0), out, check=False)


# --- substitutions -------------------------------------------------------------

def apply_linear(F: Polynomial, M) -> Polynomial:
    """Return F(M x): each x_i is replaced by the i-th row of M applied to x.

    ``M`` may be a ProjectiveTransform or a square nested sequence.
    """
    f = F.field
    rows = linalg.as_rows(f, M)
    n = F.nvars
    if len(rows) != n:
        raise DimensionMismatch(f"matrix is {len(rows)}x{len(rows)}, polynomial has {n} variables")
    if not hasattr(M, "rows") and linalg.determinant(f, rows) == f.zero:
        raise SingularMatrix("substitution matrix is singular")
    zero_exp = (0,) * n
    forms = []
    for row in rows:
        forms.append({tuple(1 if j == k else 0 for j in range(n)): c for k, c in enumerate(row) if c != f.zero})
    powers = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            if e == 1:
                powers[key] = forms[i]
            else:
                powers[key] = _mul_terms(f, power(i, e - 1), forms[i])
        return powers[key]

    out = {}
    for exp, c in F._terms.items():
        prod = {zero_exp: c}
        for i, e in enumerate(exp):
            if e:
                prod = _mul_terms(f, prod, power(i, e))
        for e2, v in prod.items():
            s = f.add(out.get(e2, f.zero), v)
            if s == f.zero:
                out.pop(e2, None)
            else:
                out[e2] = s
    return Polynomial(f, n, F.degree, out, check=False)


def shear_substitute(F: Polynomial, i: int, L: Polynomial) -> Polynomial:
    """Return F with x_i replaced by x_i + L, where L is linear and free of x_i.

    Expands each power of x_i binomially; kept separate from :func:`apply_linear`
    so the two can check each other.
    """
    f = F.field
    if not 0 <= i < F.nvars:
        raise VariableOutOfRange(f"x{i} with {F.nvars} variables")
    if L.nvars != F.nvars or L.field != f:
        raise DimensionMismatch("shear form lives in a different ring")
    if not L.is_zero() and L.degree != 1:
        raise NotLinear(f"shear form {L.to_text()} has degree {L.degree}")
    if any(e[i] for e in L._terms):
        raise SelfReference(f"shear form for x{i} involves x{i}")
    if L.is_zero():
        return F
    n = F.nvars
    lpow = [{(0,) * n: f.one}]
    out = {}
    for exp, c in F._terms.items():
        a = exp[i]
        while len(lpow) <= a:
            lpow.append(_mul_terms(f, lpow[-1], L._terms))
        base = exp[:i] + (0,) + exp[i + 1:]
        for k in range(a + 1):
            binom = f.from_int(math.comb(a, k))
            coef = f.mul(c, binom)
            if coef == f.zero:
                continue
            for e2, v in lpow[k].items():
                new = list(x + y for x, y in zip(base, e2))
                new[i] += a - k
                new = tuple(new)
                s = f.add(out.get(new, f.zero), f.mul(coef, v))
                if s == f.zero:
                    out.pop(new, None)
                else:
                    out[new] = s
    return Polynomial(f, n, F.degree, out, check=False)


def canonical_scalar(F: Polynomial) -> Polynomial:
    """Scale F so the coefficient of its largest monomial is 1."""
    if F.is_zero():
        raise ZeroPolynomial("cannot normalise the zero polynomial")
    c = F._terms[F.leading_monomial()]
    if c == F.field.one:
        return F
    return F.scale(F.field.inv(c))


def split_variable(F: Polynomial, i: int):
    """Coefficients of F as a polynomial in x_i.

    Returns a list ``c`` of length ``F.degree + 1`` with
    ``F = sum(c[k] * x_i^k)``; each ``c[k]`` is a polynomial of degree
    ``F.degree - k`` in the other ``nvars - 1`` variables (order kept).
    """
    f = F.field
    parts = [dict() for _ in range(F.degree + 1)]
    for exp, c in F._terms.items():
        parts[exp[i]][exp[:i] + exp[i + 1:]] = c
    return [Polynomial(f, F.nvars - 1, F.degree - k, parts[k], check=False) for k in range(F.degree + 1)]
