import random
from fractions import Fraction

import pytest

from vrg import Poly, canonical, factor, gcd, lcm, parse, squarefree, valuation


def test_gcd_difference_of_squares(xy11):
    assert gcd(parse("X^2-Y^2", xy11), parse("X-Y", xy11), xy11) == parse("X-Y", xy11)


def test_gcd_coprime(xy11):
    assert gcd(parse("X", xy11), parse("Y", xy11), xy11) == parse("1", xy11)


def test_gcd_shared_factor(xy12):
    # oracle: divide both arguments by the candidate and check the
    # quotients have no common factor left
    p = parse("X^2*Y*(Y-X^2)^2", xy12)
    q = parse("X*(Y-X^2)", xy12)
    g = gcd(p, q, xy12)
    assert g == canonical(parse("X*(Y-X^2)", xy12), xy12)
    pq, qq = p.exact_div(g), q.exact_div(g)
    assert gcd(pq, qq, xy12) == parse("1", xy12)


def test_gcd_divides_both_and_any_common_divisor_divides_it(xy11):
    rng = random.Random(9)
    pool = [parse(t, xy11) for t in ("X", "Y", "X-Y", "X+Y", "X^2+Y^3")]
    for _ in range(60):
        shared = _pick_product(rng, pool, 2)
        p = shared * _pick_product(rng, pool, 2)
        q = shared * _pick_product(rng, pool, 2)
        g = gcd(p, q, xy11)
        assert g.divides(p) and g.divides(q)
        # the constructed shared part is a common divisor, so it divides g
        assert shared.divides(g * Fraction(1))


def _pick_product(rng, pool, count):
    out = Poly.const(2, rng.randint(1, 3))
    for _ in range(rng.randint(0, count)):
        out = out * rng.choice(pool) ** rng.randint(1, 2)
    return out


def test_gcd_of_zeros_rejected(xy11):
    with pytest.raises(ValueError):
        gcd(Poly.zero(2), Poly.zero(2), xy11)
    assert gcd(Poly.zero(2), parse("2*X", xy11), xy11) == parse("X", xy11)


def test_lcm_basic(xy11):
    assert lcm(parse("X*Y", xy11), parse("Y", xy11), xy11) == parse("X*Y", xy11)
    assert lcm(parse("X", xy11), parse("Y", xy11), xy11) == parse("X*Y", xy11)


def test_squarefree_square(xy11):
    fac = squarefree(parse("(X-Y)^2", xy11), xy11)
    assert fac.factors == ((parse("X-Y", xy11), 2),)
    assert fac.unit == 1


def test_squarefree_known_mixed_product(xy12):
    fac = squarefree(parse("X^2*Y*(Y-X^2)^2", xy12), xy12)
    got = {(f, m) for f, m in fac.factors}
    assert got == {
        (parse("X", xy12), 2),
        (parse("Y", xy12), 1),
        (canonical(parse("Y-X^2", xy12), xy12), 2),
    }
    assert fac.expand(2) == parse("X^2*Y*(Y-X^2)^2", xy12)


def test_squarefree_already_squarefree(xy11):
    fac = squarefree(parse("X^2-Y^2", xy11), xy11)
    assert fac.factors == ((parse("X^2-Y^2", xy11), 1),)


def test_factor_jacobian_of_cusp(xy32):
    fac = factor(parse("6*X*Y^2*(X^2-Y^3)", xy32), xy32)
    assert fac.unit == 6
    assert set(fac.factors) == {
        (parse("X", xy32), 1),
        (parse("Y", xy32), 2),
        (parse("X^2-Y^3", xy32), 1),
    }


def test_factor_difference_of_squares(xy11):
    fac = factor(parse("X^2-Y^2", xy11), xy11)
    assert set(fac.factors) == {
        (parse("X-Y", xy11), 1),
        (parse("X+Y", xy11), 1),
    }
    assert fac.unit == 1


def test_factor_mixed_jacobian(xy12):
    p = parse("2*X*(Y-X^2)", xy12)
    fac = factor(p, xy12)
    # canonicalizing Y - X^2 flips its sign, which the unit absorbs
    assert fac.unit == -2
    assert set(fac.factors) == {
        (parse("X", xy12), 1),
        (canonical(parse("Y-X^2", xy12), xy12), 1),
    }
    assert fac.expand(2) == p


def test_factor_refines_squarefree(xy11):
    rng = random.Random(17)
    pool = [parse(t, xy11) for t in ("X", "Y", "X-Y", "X+Y", "X^2+Y^3", "X-2*Y")]
    for _ in range(40):
        p = Poly.const(2, rng.randint(1, 4))
        for q in rng.sample(pool, rng.randint(1, 3)):
            p = p * q ** rng.randint(1, 3)
        fac = factor(p, xy11)
        sq = squarefree(p, xy11)
        # group both outputs by multiplicity; the products must agree
        def group(factors):
            out: dict[int, Poly] = {}
            for f, m in factors:
                out[m] = out.get(m, Poly.const(2, 1)) * f
            return {m: canonical(f, xy11) for m, f in out.items()}

        assert group(sq.factors) == group(fac.factors)


def test_valuation_examples(xy32):
    p = parse("X^2*Y^3", xy32)
    assert valuation(parse("X", xy32), p) == 2
    assert valuation(parse("Y", xy32), p) == 3
    assert valuation(parse("X-Y", xy32), parse("X+Y", xy32)) == 0


def test_valuation_additive(xy11):
    rng = random.Random(31)
    q = parse("X-Y", xy11)
    pool = [parse(t, xy11) for t in ("X", "Y", "X-Y", "X+Y")]
    for _ in range(60):
        p1 = _pick_product(rng, pool, 2) + Poly.const(2, 0)
        p2 = _pick_product(rng, pool, 2)
        assert valuation(q, p1 * p2) == valuation(q, p1) + valuation(q, p2)
