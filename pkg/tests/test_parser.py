import random
from fractions import Fraction

import pytest

from skewfrac import (HFRAC, HPOLY, I, J, K, MixedContextError, MultiPoly,
                      ParseError, X, classify, parse, parse_and_eval, quat,
                      sigma)
from skewfrac.fractionfield import component_decompose
from skewfrac.multipoly import T1, T2
from skewfrac.parser import CONST, MULTI, TCTX, XCTX, evaluate
from skewfrac.quaternion import rand_quaternion
from skewfrac.selftest import _rand_fraction, _rand_multipoly

t = HPOLY.t


def test_classify():
    assert classify(parse("3/4 + i")) == CONST
    assert classify(parse("X*i - i*X")) == XCTX
    assert classify(parse("1/(t-i)")) == TCTX
    assert classify(parse("t1*t2 - k")) == MULTI


def test_mixed_context_rejected():
    with pytest.raises(MixedContextError) as e:
        parse_and_eval("X + t1")
    assert "position 5" in str(e.value)
    with pytest.raises(MixedContextError):
        parse_and_eval("t + t2")
    with pytest.raises(MixedContextError):
        parse_and_eval("X * t")


def test_const_eval():
    v, ctx = parse_and_eval("1/2 + i*j")
    assert ctx == CONST and v == quat(Fraction(1, 2)) + K
    v, _ = parse_and_eval("(1 + i)^2")
    assert v == 2 * I
    v, _ = parse_and_eval("i/j")          # right quotient: i * j^-1
    assert v == -K
    v, _ = parse_and_eval("-3")
    assert v == quat(-3)


def test_product_order_preserved():
    v1, _ = parse_and_eval("(t-i)*(t-j)")
    v2, _ = parse_and_eval("(t-j)*(t-i)")
    assert v1 == HFRAC.embed((t - I) * (t - J))
    assert v2 == HFRAC.embed((t - J) * (t - I))
    assert v1 != v2


def test_maximal_munch_rational_literals():
    # digits/digits is always one token
    v, _ = parse_and_eval("13/4^2")
    assert v == quat(Fraction(169, 16))
    v, _ = parse_and_eval("(8)/2/2")      # the trailing 2/2 is the literal 1
    assert v == quat(8)
    v, _ = parse_and_eval("8 / 2 / 2")    # spaced: two right quotients
    assert v == quat(2)


def test_power_binds_tightest():
    v, _ = parse_and_eval("-2^2")
    assert v == quat(-4)
    v, _ = parse_and_eval("(t+1)^2")
    assert v == HFRAC.embed((t + 1) * (t + 1))
    with pytest.raises(ParseError):
        parse("t^-1")
    with pytest.raises(ParseError):
        parse("t^(2)")


def test_error_positions():
    with pytest.raises(ParseError) as e:
        parse("t + (")
    assert "position 6" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse("t $ 1")
    assert "position 3" in str(e.value)
    with pytest.raises(ParseError) as e:
        parse("")
    assert "position 1" in str(e.value)
    with pytest.raises(ParseError):
        parse("t t")          # trailing input


def test_unknown_name():
    with pytest.raises(ParseError) as e:
        parse("t + foo")
    assert "foo" in str(e.value)


def test_let_bindings_splice():
    f = parse("t^2 + 1")
    v, ctx = parse_and_eval("g * (t - i)", {"g": f})
    assert ctx == TCTX
    assert v == HFRAC.embed((t * t + 1) * (t - I))


def test_division_contexts():
    # X-context: division only by constants
    v, _ = parse_and_eval("X/2")
    assert v == X * Fraction(1, 2)
    with pytest.raises(ParseError):
        parse_and_eval("X/X")
    with pytest.raises(ParseError):
        parse_and_eval("(t1+t2)/t1")
    # t-context is a genuine field
    v, _ = parse_and_eval("(t+1)/(t-i)")
    assert v == HFRAC(t + 1, t - I)


def test_const_coerces_into_required_context():
    v, found = parse_and_eval("5", context=TCTX)
    assert found == CONST
    assert v == HFRAC.one * 5
    with pytest.raises(MixedContextError):
        parse_and_eval("X", context=TCTX)


def test_y1_formula_parses_to_t1():
    v, ctx = parse_and_eval("1/4*(X - i*X*i - j*X*j - k*X*k)")
    assert ctx == XCTX
    assert sigma(v) == T1


def test_quaternion_roundtrip():
    rng = random.Random(60)
    for _ in range(120):
        q = rand_quaternion(rng, 12)
        v, ctx = parse_and_eval(str(q))
        assert ctx == CONST and v == q, str(q)


def test_poly_roundtrip():
    rng = random.Random(61)
    for _ in range(60):
        f = HPOLY.sample(rng, rng.randint(0, 4), 6)
        v, _ = parse_and_eval(str(f), context=TCTX)
        assert v == HFRAC.embed(f), str(f)


def test_fraction_roundtrip():
    rng = random.Random(62)
    for _ in range(40):
        x = _rand_fraction(rng, 2, 4)
        v, _ = parse_and_eval(str(x), context=TCTX)
        assert v == x, str(x)


def test_multipoly_roundtrip():
    rng = random.Random(63)
    for _ in range(60):
        p = _rand_multipoly(rng, 2, rng.randint(1, 3), 6)
        text = str(p)
        v, _ = parse_and_eval(text, context=MULTI)
        assert v == p, text


def test_sigma_image_roundtrip():
    # canonical multipoly output re-parses to the same polynomial
    p = sigma(X * I - I * X)
    v, ctx = parse_and_eval(str(p))
    assert ctx == MULTI and v == p
