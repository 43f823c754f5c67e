import random

import pytest

from skewfrac import (DEFAULT_DEPTH_LIMIT, DepthExceededError, HFRAC, I, J, K,
                      tower_constant, tower_field, tower_variable)
from skewfrac.selftest import _rand_tower2


def test_depth_guards():
    with pytest.raises(ValueError):
        tower_field(0)
    with pytest.raises(DepthExceededError):
        tower_field(DEFAULT_DEPTH_LIMIT + 1)
    tower_field(DEFAULT_DEPTH_LIMIT)  # at the cap is fine


def test_fields_are_cached():
    assert tower_field(2) is tower_field(2)
    assert tower_field(2).ring.coeff is tower_field(1)


def test_depth_one_is_hfrac_shape():
    F1 = tower_field(1)
    assert F1.ring.var == "t1"
    assert F1.ring.coeff.name == "HH"


def test_variables_and_constants_are_central():
    t1 = tower_variable(2, 1)
    t2 = tower_variable(2, 2)
    qi = tower_constant(2, I)
    qj = tower_constant(2, J)
    assert t1 * t2 == t2 * t1
    assert t1 * qi == qi * t1, "t1 commutes with embedded constants"
    assert qi * qj == tower_constant(2, K)
    assert qj * qi == tower_constant(2, -K)
    assert t1.is_central() and t2.is_central()
    assert not qi.is_central()


def test_variable_index_range():
    with pytest.raises(ValueError):
        tower_variable(2, 3)
    with pytest.raises(ValueError):
        tower_variable(2, 0)


def test_difference_of_squares_depth2():
    u = tower_variable(2, 2)
    qi = tower_constant(2, I)
    one = tower_field(2).one
    assert (u - qi) * (u + qi) == u * u + one


def test_inverse_depth2():
    rng = random.Random(50)
    F2 = tower_field(2)
    for _ in range(8):
        x = _rand_tower2(rng, F2, 2, fraction=False)
        if not x:
            continue
        assert x * x.inverse() == F2.one
        assert x.inverse() * x == F2.one


def test_axiom_triple_with_fraction():
    rng = random.Random(51)
    F2 = tower_field(2)
    x = _rand_tower2(rng, F2, 2, fraction=True)
    y = _rand_tower2(rng, F2, 2, fraction=False)
    z = _rand_tower2(rng, F2, 2, fraction=False)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
