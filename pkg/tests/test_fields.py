import itertools
from fractions import Fraction

import pytest

from cyclic_covers import (
    CharDividesDegree,
    FieldElement,
    extension_field,
    is_prime,
    parse_field,
    prime_field,
    rationals,
    root_extension_degree,
    root_of_unity,
)
from cyclic_covers.fields import check_degree, nth_roots
from cyclic_covers.rng import SplitMix64


def test_is_prime_small():
    assert [n for n in range(40) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert is_prime(2**61 - 1)
    assert not is_prime(561)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_inverse_table(p):
    F = prime_field(p)
    for a in F.nonzero_elements():
        assert F.mul(a, F.inv(a)) == F.one


def test_extension_moduli():
    # smallest monic irreducible, compared from the top coefficient down
    assert extension_field(7, 2).modulus == (1, 0, 1)
    assert extension_field(5, 2).modulus == (2, 0, 1)
    assert extension_field(2, 8).modulus == (1, 1, 0, 1, 1, 0, 0, 0, 1)


def test_extension_order_and_generator_power():
    E = extension_field(3, 2)
    assert E.order == 9
    assert len(E.elements()) == 9
    a = E.parse_element("a")
    assert E.pow(a, 8) == E.one


def test_extension_element_text_round_trip():
    E = extension_field(5, 3)
    for x in E.elements():
        assert E.parse_element(E.format(x)) == x


def test_rationals():
    Q = rationals()
    x = Q.coerce(Fraction(2, 3))
    assert Q.mul(x, Q.inv(x)) == 1
    assert not Q.is_finite
    assert Q.sort_key(Fraction(1, 2)) > Q.sort_key(Fraction(5, 1))


def test_parse_field():
    assert parse_field("p:7") == prime_field(7)
    assert parse_field("ext:7^2") == extension_field(7, 2)
    assert parse_field("Q") == rationals()
    with pytest.raises(ValueError):
        parse_field("p:8")


def test_field_element_operators():
    F = prime_field(7)
    a, b = F(3), F(5)
    assert a + b == F(1)
    assert a * b == 1
    assert a / b == F(2)
    assert -a == 4
    assert a ** 6 == 1
    assert isinstance(a + 1, FieldElement)


def test_root_of_unity_examples():
    assert root_of_unity(prime_field(7), 3).value == 2
    assert root_of_unity(prime_field(7), 1).value == 1
    assert root_of_unity(prime_field(5), 3) is None
    assert root_extension_degree(prime_field(5), 3) == 2
    with pytest.raises(CharDividesDegree):
        root_of_unity(prime_field(7), 7)


@pytest.mark.parametrize("p,d", [(7, 3), (13, 3), (13, 4), (13, 6), (11, 5)])
def test_root_of_unity_is_primitive(p, d):
    F = prime_field(p)
    rho = root_of_unity(F, d).value
    powers = [pow(rho, k, p) for k in range(1, d + 1)]
    assert powers[-1] == 1 and 1 not in powers[:-1]


def test_root_of_unity_over_extension():
    E = extension_field(5, 2)
    rho = root_of_unity(E, 3)
    assert rho is not None
    assert rho ** 3 == 1 and rho != 1


def test_check_degree():
    check_degree(prime_field(7), 3)
    with pytest.raises(CharDividesDegree):
        check_degree(prime_field(3), 3)
    check_degree(rationals(), 9)


def test_nth_roots_exhaustive():
    F = prime_field(13)
    for a in F.elements():
        roots = nth_roots(F, a, 3)
        assert sorted(roots) == sorted(x for x in F.elements() if pow(x, 3, 13) == a)


def test_splitmix_reference_values():
    # published reference stream for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_splitmix_below_is_uniform_enough():
    rng = SplitMix64(7)
    counts = [0] * 6
    for _ in range(6000):
        counts[rng.below(6)] += 1
    assert min(counts) > 850


def test_field_axioms_small_exhaustive():
    F = prime_field(5)
    els = F.elements()
    for a, b, c in itertools.product(els, repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
