import pytest

import oracles as O
from cyclic_covers import (
    CharDividesDegree,
    EnumerationCapExceeded,
    Hypersurface,
    InfiniteField,
    ProjectivePoint,
    ZeroPolynomial,
    parse,
    point_count,
    prime_field,
    rationals,
    singular_points,
    smooth_modulo_primes,
    smoothness_certificate,
)
from cyclic_covers.census import random_form
from cyclic_covers.rng import SplitMix64

F3, F5, F7, F13 = (prime_field(p) for p in (3, 5, 7, 13))


def test_construction_is_scalar_canonical():
    X = Hypersurface.from_text("3*x0^3+3*x1^3+3*x2^3", 3, F7)
    assert X.equation == parse("x0^3+x1^3+x2^3", 3, F7)
    assert X.ambient_dim == 2 and X.degree == 3


def test_construction_errors():
    with pytest.raises(CharDividesDegree):
        Hypersurface.from_text("x0^3+x1^3+x2^3", 3, F3)
    with pytest.raises(ZeroPolynomial):
        Hypersurface(parse("0", 3, F7))
    X = Hypersurface.from_text("x0^3+x1^3+x2^3", 3, F3, allow_char_dividing_degree=True)
    assert X.char_divides_degree


def test_singular_points_examples():
    assert singular_points(Hypersurface.from_text("x0^3+x1^3+x2^3", 3, F7)) == []
    sing = singular_points(Hypersurface.from_text("x0^3+x1^3", 3, F7))
    assert sing == [ProjectivePoint(F7, (0, 0, 1))]
    assert singular_points(Hypersurface.from_text("x0^2+x1^2+x2^2", 3, F5)) == []


def test_singular_points_match_oracle_on_random_cubics():
    rng = SplitMix64(2024)
    for _ in range(25):
        F = random_form(F7, 3, 3, rng)
        if F.is_zero():
            continue
        ours = sorted(P.coords for P in singular_points(Hypersurface(F)))
        assert ours == sorted(O.singular_points(F, 7))


def test_char_dividing_degree_requires_vanishing_equation():
    # over F_3, x0^3 + x1^3 + x2^3 has identically zero partials
    X = Hypersurface.from_text("x0^3+x1^3+x2^3", 3, F3, allow_char_dividing_degree=True)
    sing = singular_points(X)
    assert all(O.evaluate(X.equation, P.coords, 3) == 0 for P in sing)
    assert len(sing) == point_count(X)


def test_certificates():
    cert = smoothness_certificate(Hypersurface.from_text("x0^3+x1^3+x2^3+x3^3", 4, F13), k_max=1)
    assert cert.clean and cert.to_json() == {"k_max": 1, "singular": []}
    cert = smoothness_certificate(Hypersurface.from_text("x0^3+x1^3", 3, F7), k_max=2)
    assert cert.to_json() == {"k_max": 2, "singular": [{"k": 1, "point": ["0", "0", "1"]}]}


def test_point_count_over_extension():
    # -1 is not a square mod 7, so the two points of V(x0^2+x1^2) in P^1
    # only appear over F_49
    X = Hypersurface.from_text("x0^2+x1^2", 2, F7)
    assert point_count(X, 1) == 0
    assert point_count(X, 2) == 2


def test_point_count_fermat_cubic_f7():
    X = Hypersurface.from_text("x0^3+x1^3+x2^3", 3, F7)
    brute = sum(1 for P in O.projective_points(7, 3) if O.evaluate(X.equation, P, 7) == 0)
    assert point_count(X) == brute == 9


def test_enumeration_cap():
    X = Hypersurface.from_text("x0^3+x1^3+x2^3+x3^3", 4, F13)
    with pytest.raises(EnumerationCapExceeded):
        singular_points(X, 1, cap=100)


def test_rationals_use_reduction():
    Q = rationals()
    X = Hypersurface.from_text("x0^3+x1^3+x2^3", 3, Q)
    with pytest.raises(InfiniteField):
        singular_points(X)
    assert smooth_modulo_primes(X) == {5: True, 7: True, 11: True, 13: True}
    Y = Hypersurface.from_text("x0^3+x1^3", 3, Q)
    assert not any(smooth_modulo_primes(Y).values())
