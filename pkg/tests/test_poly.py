import random
from fractions import Fraction

import pytest

from vrg import Poly, VarTable, canonicalize, format_poly, jacobian, parse, weighted_degree
from vrg.errors import NotDivisibleError, ParseError


def P(text, vars):
    return parse(text, vars)


# ---------------------------------------------------------------------------
# parsing and printing
# ---------------------------------------------------------------------------


def test_parse_basic_terms(xy11):
    p = P("X^2*Y + 3/2*Y^3", xy11)
    assert p.terms_dict() == {(2, 1): Fraction(1), (0, 3): Fraction(3, 2)}


def test_parse_zero(xy11):
    assert P("0", xy11).is_zero()


def test_parse_expands_products(xy11):
    assert P("(X-Y)*(X+Y)", xy11) == P("X^2-Y^2", xy11)


def test_parse_unary_minus_and_precedence(xy11):
    assert P("-X^2", xy11) == -P("X", xy11) ** 2
    assert P("2*X+3*Y*X", xy11) == P("X*Y*3+X*2", xy11)


def test_parse_rational_literals(xy11):
    assert P("2/4", xy11).constant_value() == Fraction(1, 2)
    with pytest.raises(ParseError):
        P("3/0", xy11)


def test_parse_rejects_implicit_multiplication(xy11):
    with pytest.raises(ParseError):
        P("2X", xy11)
    with pytest.raises(ParseError):
        P("2 X", xy11)
    with pytest.raises(ParseError):
        P("2(X+Y)", xy11)


def test_parse_unknown_variable_reports_position(xy11):
    with pytest.raises(ParseError) as err:
        P("X + Z", xy11)
    assert err.value.position == 4


def test_parse_syntax_errors(xy11):
    for bad in ("X +", "(X", "X^Y", "X^-2", "*X", "X^2^3", ""):
        with pytest.raises(ParseError):
            P(bad, xy11)


def test_format_round_trip(xy11, xy32):
    for text in ("X^2*Y + 3/2*Y^3", "X^3*Y^2 - X*Y^5", "-X + Y", "7", "0", "X - 1/3"):
        for vars in (xy11, xy32):
            p = P(text, vars)
            assert P(format_poly(p, vars), vars) == p


def test_format_is_identity_on_canonical_strings(xy32):
    text = format_poly(P("X^2*Y^3 + X^2 + Y^3", xy32), xy32)
    assert format_poly(P(text, xy32), xy32) == text


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------


def test_exact_div_examples(xy11):
    assert P("X^2-Y^2", xy11).exact_div(P("X-Y", xy11)) == P("X+Y", xy11)
    assert (P("X", xy11) * Poly.zero(2)).is_zero()
    with pytest.raises(NotDivisibleError):
        P("X^2+Y^2", xy11).exact_div(P("X", xy11))


def test_pow_rejects_negative(xy11):
    with pytest.raises(ValueError):
        P("X", xy11) ** -1


def test_mul_exact_div_round_trip_random(xy11):
    rng = random.Random(11)
    for _ in range(200):
        p = _random_poly(rng, 2)
        q = _random_poly(rng, 2)
        if q.is_zero():
            continue
        assert (p * q).exact_div(q) == p


def _random_poly(rng, n, max_exp=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_exp) for _ in range(n))
        terms[exp] = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    return Poly(n, terms)


# ---------------------------------------------------------------------------
# weighted degree
# ---------------------------------------------------------------------------


def test_weighted_degree_cusp_generator(xy32):
    p = P("X^2+Y^3", xy32)
    # oracle: weighted degree of every term computed directly
    per_term = {2 * 3, 3 * 2}
    assert per_term == {6}
    wd = weighted_degree(p, xy32)
    assert wd.degree == 6 and wd.homogeneous


def test_weighted_degree_plain(xy11):
    assert weighted_degree(P("X+Y", xy11), xy11).degree == 1
    assert weighted_degree(P("X+Y", xy11), xy11).homogeneous
    wd = weighted_degree(P("X^2+Y", xy11), xy11)
    assert wd.degree == 2 and not wd.homogeneous


def test_weighted_degree_zero_undefined(xy11):
    with pytest.raises(ValueError):
        weighted_degree(Poly.zero(2), xy11)


def test_weighted_degree_multiplicative_on_homogeneous(xy32):
    rng = random.Random(5)
    for _ in range(50):
        d1, d2 = rng.randint(1, 4), rng.randint(1, 4)
        p = _random_homogeneous(rng, xy32, d1 * 6)
        q = _random_homogeneous(rng, xy32, d2 * 6)
        if p.is_zero() or q.is_zero():
            continue
        assert (
            weighted_degree(p * q, xy32).degree
            == weighted_degree(p, xy32).degree + weighted_degree(q, xy32).degree
        )


def _random_homogeneous(rng, vars, wdeg):
    terms = {}
    for ex in range(0, wdeg + 1):
        rem = wdeg - ex * vars.weights[0]
        if rem < 0 or rem % vars.weights[1]:
            continue
        if rng.random() < 0.6:
            terms[(ex, rem // vars.weights[1])] = Fraction(rng.randint(-4, 4))
    return Poly(2, terms)


# ---------------------------------------------------------------------------
# derivatives and the Jacobian determinant
# ---------------------------------------------------------------------------


def test_partial_derivative(xy11):
    assert P("X^2*Y^3", xy11).derivative(1) == P("3*X^2*Y^2", xy11)
    assert P("7", xy11).derivative(0).is_zero()
    assert P("X^2+Y^3", xy11).derivative(0) == P("2*X", xy11)


def test_jacobian_sym2(xy11):
    # oracle: det [[1, 1], [Y, X]] assembled by hand from the partials
    f1, f2 = P("X+Y", xy11), P("X*Y", xy11)
    oracle = f1.derivative(0) * f2.derivative(1) - f1.derivative(1) * f2.derivative(0)
    assert oracle == P("X-Y", xy11)
    assert jacobian([f1, f2], xy11) == oracle


def test_jacobian_cusp_matches_known_value(xy32):
    jac = jacobian([P("X^2+Y^3", xy32), P("X^2*Y^3", xy32)], xy32)
    assert jac == P("6*X*Y^2*(X^2-Y^3)", xy32)


def test_jacobian_mixed_matches_known_value(xy12):
    jac = jacobian([P("X^2*Y", xy12), P("X^2+Y", xy12)], xy12)
    assert jac == P("2*X*(Y-X^2)", xy12)


def test_jacobian_multilinear_in_rows(xy11):
    rng = random.Random(23)
    for _ in range(30):
        f1, g1, f2 = (_random_poly(rng, 2) for _ in range(3))
        lhs = jacobian([f1 + g1, f2], xy11)
        rhs = jacobian([f1, f2], xy11) + jacobian([g1, f2], xy11)
        assert lhs == rhs


def test_jacobian_three_variables():
    vars = VarTable(("X1", "X2", "X3"), (1, 1, 1))
    fs = [parse(t, vars) for t in ("X1", "X2^2", "X3^3")]
    assert jacobian(fs, vars) == parse("6*X2*X3^2", vars)


# ---------------------------------------------------------------------------
# canonical associate
# ---------------------------------------------------------------------------


def test_canonicalize_recorded_unit(xy32):
    p = P("6*X^3*Y^2 - 6*X*Y^5", xy32)
    c, unit = canonicalize(p, xy32)
    assert unit == 6
    assert c == P("X^3*Y^2 - X*Y^5", xy32)
    assert c * unit == p


def test_canonicalize_negative_lead_and_content(xy12):
    p = P("2*X*Y - 2*X^3", xy12)
    c, unit = canonicalize(p, xy12)
    assert unit == -2
    assert c == P("X^3 - X*Y", xy12)


def test_canonicalize_rational_content(xy11):
    c, unit = canonicalize(P("1/2*X + 3/4*Y", xy11), xy11)
    assert unit == Fraction(1, 4)
    assert c == P("2*X + 3*Y", xy11)
