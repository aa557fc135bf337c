import json
import random
from fractions import Fraction

import pytest

from quadinv.arith import Place, REAL_PLACE, square_class
from quadinv.cohomology import (
    CohomClass,
    UNIT,
    ZERO,
    add,
    cohom_from_json,
    cup,
    is_zero,
    serialize_places,
    symbol,
)

P2 = Place(2)
BRAUER_MINUS_ONE = frozenset({REAL_PLACE, P2})  # the class of (-1)(-1)


def test_symbol_examples():
    assert symbol([-1, -1]) == CohomClass({2: BRAUER_MINUS_ONE})
    assert symbol([2, 2]).is_zero
    assert symbol([-1, -1, -1]) == CohomClass({3: 1})
    assert symbol([1]).is_zero
    assert symbol([]) == UNIT


def test_add_examples():
    assert add(symbol([2]), symbol([3])) == symbol([6])
    x = CohomClass({2: BRAUER_MINUS_ONE})
    assert add(x, x).is_zero
    y = symbol([-1, 2])  # the class {2, 3}? compute: places where (-1,2)_v = -1
    # (-1,2) is +1 everywhere: 2 = norm from Q(i)
    assert y.is_zero
    a = CohomClass({2: frozenset({P2, REAL_PLACE})})
    b = CohomClass({2: frozenset({P2, Place(3)})})
    assert add(a, b) == CohomClass({2: frozenset({Place(3), REAL_PLACE})})


def test_cup_examples():
    assert cup(symbol([-1]), CohomClass({2: BRAUER_MINUS_ONE})) == CohomClass({3: 1})
    assert cup(symbol([2]), CohomClass({2: BRAUER_MINUS_ONE})).is_zero
    x = symbol([-3, 7]) + symbol([-1])
    assert cup(UNIT, x) == x
    assert cup(ZERO, x).is_zero


def test_steinberg_relation():
    rng = random.Random(1)
    for _ in range(200):
        num = rng.randint(-500, 500)
        den = rng.randint(1, 500)
        a = Fraction(num, den)
        if a == 0 or a == 1:
            continue
        assert is_zero(symbol([a, 1 - a])), a


def test_square_relation():
    rng = random.Random(2)
    for _ in range(200):
        a = Fraction(rng.randint(-500, 500) or 3, rng.randint(1, 500))
        assert symbol([a, a]) == symbol([a, -1])


def test_ring_laws_on_random_symbols():
    rng = random.Random(3)

    def rand_symbol():
        return symbol([square_class(rng.randint(-30, 30) or 5) for _ in range(rng.randint(0, 2))])

    for _ in range(150):
        x, y, z = rand_symbol(), rand_symbol(), rand_symbol()
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert (x + y) * z == x * z + y * z


def test_degree_two_parity_and_validation():
    rng = random.Random(4)
    for _ in range(100):
        a = square_class(rng.randint(-200, 200) or 3)
        b = square_class(rng.randint(-200, 200) or 7)
        assert len(symbol([a, b]).component(2)) % 2 == 0
    with pytest.raises(ValueError):
        CohomClass({2: frozenset({REAL_PLACE})})


def test_high_degree_model_is_real_detected():
    # a product of degree-1 classes survives in degree >= 3 iff all negative
    assert symbol([-2, -3, -5]) == CohomClass({3: 1})
    assert symbol([-2, -3, 5]).is_zero
    assert symbol([-1, -1, -1, -1]) == CohomClass({4: 1})
    total = symbol([-2, -3, -5]) + symbol([-1, -7, -11]) + symbol([2, -3, -5])
    assert total.is_zero  # two all-negative summands cancel, the third is zero


def test_canonical_equality_and_components():
    x = symbol([-1, -1])
    assert x.component(2) == BRAUER_MINUS_ONE
    assert x.component(1) == square_class(1)
    assert x.component(0) == 0
    assert x.homogeneous_part(2) == x
    assert x.homogeneous_part(3).is_zero
    assert hash(symbol([-1, -1])) == hash(x)


def test_serialization_round_trip():
    x = UNIT + symbol([-6]) + symbol([-1, -1]) + symbol([-5, -5, -5, -5])
    data = x.to_json()
    assert data == {"0": 1, "1": -6, "2": ["2", "inf"], "4": 1}
    assert cohom_from_json(json.loads(json.dumps(data))) == x
    assert cohom_from_json({}) == ZERO
    assert serialize_places(BRAUER_MINUS_ONE) == ["2", "inf"]


def test_from_json_rejects_bad_fields():
    with pytest.raises(ValueError):
        cohom_from_json({"x": 1})
    with pytest.raises(ValueError):
        cohom_from_json({"1": 0})
    with pytest.raises(ValueError):
        cohom_from_json({"2": ["inf"]})
    with pytest.raises(ValueError):
        cohom_from_json({"3": 2})
