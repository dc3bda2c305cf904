"""Exact fields: prime fields F_p, small extensions F_(p^k) and the rationals.

A :class:`Field` does arithmetic on *raw* values so that polynomial and
matrix code can run without wrapping every coefficient:

* prime field: ``int`` in ``range(p)``
* extension:   ``tuple`` of ``k`` ints, the coefficients of
  ``c0 + c1*a + ... + c_(k-1)*a^(k-1)`` where ``a`` is a root of the modulus
* rationals:   :class:`fractions.Fraction`

:class:`FieldElement` wraps a raw value for the public API.

Canonical element order: prime fields by integer value, extensions by
lexicographic order of the coefficient tuple, rationals by
``(denominator, numerator)``.  Zero is the smallest element of every finite
field in this order.
"""

from __future__ import annotations

import functools
import itertools
import math
import re
from fractions import Fraction

from .errors import CharDividesDegree, InfiniteField

__all__ = [
    "Field",
    "FieldElement",
    "prime_field",
    "extension_field",
    "rationals",
    "parse_field",
    "root_of_unity",
    "root_extension_degree",
    "is_prime",
]

_TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n):
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


# --- univariate helpers over F_p (ascending coefficient lists) ---------------

def _upoly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    a = [c % p for c in a[:dm]]
    return a


def _is_irreducible(modulus, p):
    k = len(modulus) - 1
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            factor = list(tail) + [1]
            if not any(_upoly_mod(modulus, factor, p)):
                return False
    return True


def _smallest_irreducible(p, k):
    # Monic x^k + c_(k-1) x^(k-1) + ... + c_0, ordered lexicographically
    # on (c_(k-1), ..., c_0).
    for desc in itertools.product(range(p), repeat=k):
        modulus = list(reversed(desc)) + [1]
        if k == 1 or _is_irreducible(modulus, p):
            return tuple(modulus)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """An exact field.  Use :func:`prime_field`, :func:`extension_field`,
    :func:`rationals` or :func:`parse_field` rather than the constructor."""

    def __init__(self, kind, p=None, k=1, modulus=None):
        self.kind = kind
        self.p = p
        self.k = k
        self.modulus = modulus
        self._exp = None
        self._log = None
        if kind == "prime":
            self.zero, self.one = 0, 1
        elif kind == "extension":
            self.zero = (0,) * k
            self.one = (1,) + (0,) * (k - 1)
        else:
            self.zero, self.one = Fraction(0), Fraction(1)

    # -- identity -------------------------------------------------------------

    def _key(self):
        return (self.kind, self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Field({self.spec_text()!r})"

    def spec_text(self):
        if self.kind == "prime":
            return f"p:{self.p}"
        if self.kind == "extension":
            return f"ext:{self.p}^{self.k}"
        return "Q"

    @property
    def is_finite(self):
        return self.kind != "rational"

    @property
    def characteristic(self):
        return 0 if self.kind == "rational" else self.p

    @property
    def order(self):
        if self.kind == "rational":
            return None
        return self.p ** self.k

    def require_finite(self, what="operation"):
        if not self.is_finite:
            raise InfiniteField(f"{what} needs a finite field, got {self.spec_text()}")

    # -- conversion -----------------------------------------------------------

    def from_int(self, n):
        if self.kind == "prime":
            return n % self.p
        if self.kind == "extension":
            return (n % self.p,) + (0,) * (self.k - 1)
        return Fraction(n)

    def coerce(self, x):
        """Raw value from an int, Fraction, FieldElement or raw value."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise ValueError(f"element of {x.field} used in {self}")
            return x.value
        if self.kind == "extension":
            if isinstance(x, tuple):
                if len(x) != self.k:
                    raise ValueError(f"extension element needs {self.k} coefficients")
                return tuple(c % self.p for c in x)
            return self.from_int(int(x))
        if self.kind == "prime":
            if isinstance(x, Fraction):
                return self.div(x.numerator % self.p, x.denominator % self.p)
            return int(x) % self.p
        return Fraction(x)

    def __call__(self, x):
        return FieldElement(self, self.coerce(x))

    def lift(self, x, target: "Field"):
        """Map a raw value of this prime field into ``target`` (same characteristic)."""
        if target == self:
            return x
        if self.kind != "prime" or target.kind != "extension" or target.p != self.p:
            raise ValueError(f"cannot embed {self} into {target}")
        return (x,) + (0,) * (target.k - 1)

    # -- arithmetic on raw values --------------------------------------------

    def is_zero(self, a):
        return a == self.zero

    def add(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.p
        if self.kind == "extension":
            p = self.p
            return tuple((x + y) % p for x, y in zip(a, b))
        return a + b

    def sub(self, a, b):
        if self.kind == "prime":
            return (a - b) % self.p
        if self.kind == "extension":
            p = self.p
            return tuple((x - y) % p for x, y in zip(a, b))
        return a - b

    def neg(self, a):
        if self.kind == "prime":
            return -a % self.p
        if self.kind == "extension":
            p = self.p
            return tuple(-x % p for x in a)
        return -a

    def mul(self, a, b):
        if self.kind == "prime":
            return a * b % self.p
        if self.kind == "extension":
            if a == self.zero or b == self.zero:
                return self.zero
            if self._tables():
                return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
            return self._poly_mul(a, b)
        return a * b

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "prime":
            return pow(a, -1, self.p)
        if self.kind == "extension":
            if self._tables():
                return self._exp[(-self._log[a]) % (self.order - 1)]
            return self.pow(a, self.order - 2)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.kind == "prime":
            return pow(a, e, self.p)
        if self.kind == "rational":
            return a ** e
        if a == self.zero:
            return self.one if e == 0 else self.zero
        if self._tables():
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        result, base = self.one, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    def _poly_mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return tuple(_upoly_mod(prod, self.modulus, p)) if len(prod) >= k else tuple(prod)

    def _tables(self):
        if self._exp is not None:
            return True
        q = self.order
        if q > _TABLE_LIMIT:
            return False
        factors = _prime_factors(q - 1)
        for g in self._iter_elements():
            if g == self.zero:
                continue
            if all(self._slow_pow(g, (q - 1) // r) != self.one for r in factors):
                break
        exp, x = [], self.one
        for _ in range(q - 1):
            exp.append(x)
            x = self._poly_mul(x, g)
        self._log = {v: i for i, v in enumerate(exp)}
        self._exp = exp
        return True

    def _slow_pow(self, a, e):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self._poly_mul(result, base)
            base = self._poly_mul(base, base)
            e >>= 1
        return result

    # -- enumeration and ordering --------------------------------------------

    def _iter_elements(self):
        if self.kind == "prime":
            return iter(range(self.p))
        return itertools.product(range(self.p), repeat=self.k)

    def elements(self):
        """All raw elements in canonical order (finite fields only)."""
        self.require_finite("element enumeration")
        return list(self._iter_elements())

    def nonzero_elements(self):
        return [x for x in self.elements() if x != self.zero]

    def sort_key(self, a):
        if self.kind == "rational":
            return (a.denominator, a.numerator)
        return a

    def in_subfield(self, a, j):
        """True when ``a`` lies in the subfield F_(p^j) (j must divide k)."""
        if self.kind != "extension":
            return True
        return self.pow(a, self.p ** j) == a

    # -- text -------------------------------------------------------------------

    def format(self, a):
        if self.kind == "prime":
            return str(a)
        if self.kind == "rational":
            return str(a)
        parts = []
        for i in range(self.k - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(parts) if parts else "0"

    _EXT_TERM = re.compile(r"([+-]?)\s*(\d+)?\s*(\*?\s*a(?:\s*\^\s*(\d+))?)?")

    def parse_element(self, text):
        text = text.strip()
        if self.kind == "prime":
            return int(text) % self.p
        if self.kind == "rational":
            return Fraction(text)
        coeffs = [0] * self.k
        pos, s = 0, text.replace(" ", "")
        if not s:
            raise ValueError("empty field element")
        while pos < len(s):
            m = self._EXT_TERM.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad extension element {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                e = int(m.group(4)) if m.group(4) else 1
            else:
                e = 0
            # reduce a^e through the modulus
            term = [0] * (e + 1)
            term[e] = sign * c
            red = _upoly_mod(term, self.modulus, self.p) if e >= self.k else term
            for i, v in enumerate(red):
                coeffs[i] = (coeffs[i] + v) % self.p
            pos = m.end()
            if pos < len(s) and s[pos] not in "+-":
                raise ValueError(f"bad extension element {text!r}")
        return tuple(coeffs)


class FieldElement:
    """Immutable field element with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.value == self.field.zero

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other):
        return self.field.sort_key(self.value) < self.field.sort_key(self._other(other))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field.spec_text()}({self.field.format(self.value)})"


@functools.lru_cache(maxsize=None)
def prime_field(p: int) -> Field:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Field("prime", p=p, k=1)


@functools.lru_cache(maxsize=None)
def extension_field(p: int, k: int) -> Field:
    """F_(p^k) built on the lexicographically smallest monic irreducible of degree k."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1 or k > 8:
        raise ValueError("extension degree must be between 1 and 8")
    if k == 1:
        return prime_field(p)
    return Field("extension", p=p, k=k, modulus=_smallest_irreducible(p, k))


@functools.lru_cache(maxsize=None)
def rationals() -> Field:
    return Field("rational")


def parse_field(text: str) -> Field:
    """Parse ``p:7``, ``ext:7^2`` or ``Q``."""
    s = text.strip()
    if s in ("Q", "QQ"):
        return rationals()
    m = re.fullmatch(r"p:(\d+)", s)
    if m:
        return prime_field(int(m.group(1)))
    m = re.fullmatch(r"ext:(\d+)\^(\d+)", s)
    if m:
        return extension_field(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unrecognised field spec {text!r} (expected p:P, ext:P^K or Q)")


def check_degree(field: Field, d: int):
    """Raise CharDividesDegree unless gcd(char, d) == 1 (no-op over Q)."""
    if field.is_finite and math.gcd(field.p, d) != 1:
        raise CharDividesDegree(field.p, d)


def root_extension_degree(field: Field, d: int) -> int:
    """Smallest j such that F_(q^j) contains a primitive d-th root of unity."""
    field.require_finite("root extension degree")
    check_degree(field, d)
    q, j = field.order, 1
    while (q ** j - 1) % d:
        j += 1
    return j


def _has_order(field, x, d, factors):
    if field.pow(x, d) != field.one:
        return False
    return all(field.pow(x, d // r) != field.one for r in factors)


def root_of_unity(field: Field, d: int):
    """Canonically smallest primitive d-th root of unity, or None."""
    if d < 1:
        raise ValueError("d must be positive")
    if not field.is_finite:
        if d == 1:
            return field(1)
        if d == 2:
            return field(-1)
        return None
    check_degree(field, d)
    if (field.order - 1) % d:
        return None
    factors = _prime_factors(d)
    for x in field.elements():
        if x != field.zero and _has_order(field, x, d, factors):
            return FieldElement(field, x)
    return None


def nth_roots(field: Field, a, d: int):
    """All raw x with x^d == a, in canonical order (finite fields)."""
    return [x for x in field.elements() if field.pow(x, d) == a]
