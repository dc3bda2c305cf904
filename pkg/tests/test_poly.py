import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles as O
from cyclic_covers import (
    NotHomogeneous,
    Polynomial,
    PolynomialSyntaxError,
    SingularMatrix,
    VariableOutOfRange,
    apply_linear,
    canonical_scalar,
    evaluate,
    extension_field,
    monomials,
    parse,
    partial_derivative,
    prime_field,
    rationals,
    shear_substitute,
    split_variable,
)
from cyclic_covers.projlin import transposition

F5, F7 = prime_field(5), prime_field(7)


def test_parse_fermat():
    F = parse("x0^3+x1^3+x2^3", 3, F7)
    assert len(F) == 3 and F.degree == 3


def test_parse_negative_coefficients():
    F = parse("x2^3 - x0^3 - x1^3", 3, F7)
    assert F.raw_terms() == {(0, 0, 3): 1, (3, 0, 0): 6, (0, 3, 0): 6}


def test_parse_not_homogeneous():
    with pytest.raises(NotHomogeneous):
        parse("x0^2+x1^3", 2, F7)


def test_parse_syntax_error_has_position():
    with pytest.raises(PolynomialSyntaxError) as info:
        parse("x0^3 + * x1^3", 2, F7)
    assert info.value.position == 7


def test_parse_variable_out_of_range():
    with pytest.raises(VariableOutOfRange):
        parse("x3^2", 3, F7)


def test_parse_rational_and_extension_coefficients():
    Q = rationals()
    F = parse("1/2*x0^2 - 3/4*x1^2", 2, Q)
    assert F.to_text() == "1/2*x0^2-3/4*x1^2"
    E = extension_field(7, 2)
    G = parse("(a+3)*x0^2+x1^2", 2, E)
    assert G.coefficient((2, 0)).value == E.parse_element("a+3")


def test_parse_fraction_reduces_mod_p():
    assert parse("1/2*x0", 1, F7).raw_terms() == {(1,): 4}


def test_to_text_round_trip():
    F = parse("3*x0^2*x1 + x1^3 + 6*x0*x1*x2", 3, F7)
    assert parse(F.to_text(), 3, F7) == F


def test_evaluate_examples():
    fermat = parse("x0^3+x1^3+x2^3", 3, F7)
    assert evaluate(fermat, (1, 1, 1)) == 3
    assert evaluate(fermat, (0, 0, 0)) == 0
    assert evaluate(parse("x0^2*x1", 2, F5), (2, 3)) == 2


def test_partial_derivative_examples():
    x03 = parse("x0^3", 2, F7)
    assert partial_derivative(x03, 0) == parse("3*x0^2", 2, F7)
    assert partial_derivative(x03, 1).is_zero()
    assert partial_derivative(parse("x0^7", 1, F7), 0).is_zero()


def test_apply_linear_examples():
    F = parse("x0^2*x1", 2, F7)
    assert apply_linear(F, [[1, 0], [0, 1]]) == F
    swap = transposition(F7, 2, 0, 1)
    assert apply_linear(F, swap) == parse("x1^2*x0", 2, F7)
    G = parse("x2^3+3*x0*x2^2+3*x0^2*x2+2*x0^3+x1^3", 3, F7)
    M = [[1, 0, 0], [0, 1, 0], [6, 0, 1]]
    assert apply_linear(G, M) == parse("x2^3+x0^3+x1^3", 3, F7)


def test_shear_examples():
    assert shear_substitute(parse("x0^2", 1, F7), 0, Polynomial.zero(F7, 1, 1)) == parse("x0^2", 1, F7)
    x0 = Polynomial.variable(F7, 3, 0)
    assert shear_substitute(parse("x2^2", 3, F7), 2, x0) == parse("x2^2+2*x0*x2+x0^2", 3, F7)
    G = parse("x2^3+3*x0*x2^2+3*x0^2*x2+2*x0^3+x1^3", 3, F7)
    assert shear_substitute(G, 2, -x0) == parse("x2^3+x0^3+x1^3", 3, F7)


def test_canonical_scalar_examples():
    assert canonical_scalar(parse("2*x0^3+2*x1^3", 2, F7)) == parse("x0^3+x1^3", 2, F7)
    x03 = parse("x0^3", 2, F7)
    assert canonical_scalar(x03) == x03
    assert canonical_scalar(parse("6*x1^3+3*x0^2*x1", 2, F7)) == parse("x0^2*x1+2*x1^3", 2, F7)


def test_monomial_order_graded_lex():
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials(4, 3)) == 20


def test_split_variable():
    F = parse("x2^3+3*x0*x2^2+x1^3", 3, F7)
    parts = split_variable(F, 2)
    assert parts[3] == Polynomial.constant(F7, 2, 1)
    assert parts[2] == parse("3*x0", 2, F7)
    assert parts[1].is_zero()
    assert parts[0] == parse("x1^3", 2, F7)


# --- property tests against sympy ----------------------------------------------

def _poly_strategy(p, nvars, d):
    mons = monomials(nvars, d)
    return st.lists(st.integers(0, p - 1), min_size=len(mons), max_size=len(mons)).map(
        lambda cs: Polynomial(prime_field(p), nvars, d, {m: c for m, c in zip(mons, cs) if c}))


def _matrix_strategy(p, n):
    return st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=40, deadline=None)
@given(data=st.data(), p=st.sampled_from([5, 7, 13]), d=st.integers(1, 4))
def test_apply_linear_matches_sympy(data, p, d):
    F = data.draw(_poly_strategy(p, 3, d))
    M = data.draw(_matrix_strategy(p, 3))
    assume(O.sp.Matrix(M).det() % p != 0)
    assert apply_linear(F, M).raw_terms() == O.substitute(F, M, p)


@settings(max_examples=40, deadline=None)
@given(data=st.data(), p=st.sampled_from([5, 7, 13]))
def test_derivative_matches_sympy(data, p):
    F = data.draw(_poly_strategy(p, 3, 3))
    xs = O.symbols(3)
    for i in range(3):
        expected = O.reduce_mod(O.sp.diff(O.to_sympy(F), xs[i]), 3, p)
        assert partial_derivative(F, i).raw_terms() == expected


@settings(max_examples=40, deadline=None)
@given(data=st.data(), p=st.sampled_from([5, 7, 13]))
def test_multiplication_matches_sympy(data, p):
    F = data.draw(_poly_strategy(p, 3, 2))
    G = data.draw(_poly_strategy(p, 3, 1))
    assert (F * G).raw_terms() == O.reduce_mod(O.to_sympy(F) * O.to_sympy(G), 3, p)


@settings(max_examples=40, deadline=None)
@given(data=st.data(), p=st.sampled_from([5, 7, 13]))
def test_shear_matches_apply_linear(data, p):
    F = data.draw(_poly_strategy(p, 3, 3))
    cs = data.draw(st.lists(st.integers(0, p - 1), min_size=3, max_size=3))
    cs[2] = 0
    L = Polynomial.linear_form(prime_field(p), cs)
    M = [[1, 0, 0], [0, 1, 0], [cs[0], cs[1], 1]]
    assert shear_substitute(F, 2, L) == apply_linear(F, M)


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_canonical_scalar_idempotent_and_scale_invariant(data):
    F = data.draw(_poly_strategy(7, 3, 3))
    c = data.draw(st.integers(1, 6))
    if F.is_zero():
        return
    assert canonical_scalar(canonical_scalar(F)) == canonical_scalar(F)
    assert canonical_scalar(F.scale(c)) == canonical_scalar(F)


def test_apply_linear_rejects_singular_matrix():
    with pytest.raises(SingularMatrix):
        apply_linear(parse("x0^2+x1^2", 2, F7), [[1, 1], [1, 1]])


def test_apply_linear_over_extension_and_rationals():
    E = extension_field(5, 2)
    a = E.parse_element("a")
    F = parse("x0^2+x1^2", 2, E)
    M = [[a, 0], [0, 1]]
    assert apply_linear(F, M).coefficient((2, 0)).value == E.pow(a, 2)
    Q = rationals()
    G = parse("x0^2-x1^2", 2, Q)
    from fractions import Fraction
    H = apply_linear(G, [[Fraction(1, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(-1, 2)]])
    assert H == parse("x0*x1", 2, Q)
