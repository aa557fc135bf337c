import random
from fractions import Fraction

import pytest

from quadinv.arith import (
    FACTOR_BOUND_ENV,
    Place,
    REAL_PLACE,
    SquareClass,
    factor_bound,
    hilbert_symbol,
    relevant_places,
    square_class,
)
from quadinv.oracles import hilbert_symbol_search, isotropy_search


def test_square_class_examples():
    assert square_class(18).rep == 2
    assert square_class(1).rep == 1
    assert square_class(-12).rep == -3
    assert square_class(Fraction(18, 5)).rep == 10
    assert square_class(Fraction(-1, 2)).rep == -2


def test_square_class_rejects_zero():
    with pytest.raises(ValueError):
        square_class(0)
    with pytest.raises(ValueError):
        square_class(Fraction(0))


def test_square_class_square_invariance():
    rng = random.Random(7)
    for _ in range(200):
        a = Fraction(rng.randint(-10**4, 10**4) or 1, rng.randint(1, 10**4))
        b = Fraction(rng.randint(1, 500), rng.randint(1, 500))
        assert square_class(a * b * b) == square_class(a)
        # idempotence on the canonical representative
        assert square_class(square_class(a).rep) == square_class(a)


def test_square_class_group_law():
    a, b = square_class(6), square_class(10)
    assert (a * b).rep == 15
    assert (a * a).is_trivial
    assert (-square_class(3)).rep == -3


def test_factor_bound_override(monkeypatch):
    monkeypatch.setenv(FACTOR_BOUND_ENV, "50")
    assert factor_bound() == 50
    # 2501 = 41*61 factors fine below the bound; a prime cofactor beyond
    # bound**2 cannot be certified
    assert square_class(41 * 61).rep == 41 * 61
    big = 2750159 * 2750161  # primes near 2.75e6, product beyond 50**2 reach
    with pytest.raises(ValueError):
        square_class(big)
    monkeypatch.setenv(FACTOR_BOUND_ENV, "bogus")
    with pytest.raises(ValueError):
        factor_bound()


def test_place_ordering_and_parse():
    places = [Place(5), REAL_PLACE, Place(2)]
    assert sorted(places, key=lambda v: v.sort_key()) == [REAL_PLACE, Place(2), Place(5)]
    assert str(REAL_PLACE) == "inf"
    assert Place.parse("inf") == REAL_PLACE
    assert Place.parse("13") == Place(13)
    with pytest.raises(ValueError):
        Place(6)
    with pytest.raises(ValueError):
        Place.parse("six")


def test_relevant_places_examples():
    assert relevant_places([square_class(1)]) == [REAL_PLACE, Place(2)]
    assert relevant_places([square_class(-3), square_class(10)]) == [
        REAL_PLACE,
        Place(2),
        Place(3),
        Place(5),
    ]
    assert relevant_places([]) == [REAL_PLACE, Place(2)]


def test_hilbert_symbol_examples():
    assert hilbert_symbol(-1, -1, REAL_PLACE) == -1
    assert hilbert_symbol(-1, -1, Place(2)) == -1
    assert hilbert_symbol(2, 3, Place(3)) == -1
    assert hilbert_symbol(5, 7, Place(11)) == 1


def test_hilbert_symbol_against_congruence_search():
    # the closed formulas vs the exhaustive primitive-solution search
    rng = random.Random(11)
    places = [REAL_PLACE, Place(2), Place(3), Place(5), Place(7)]
    for _ in range(60):
        a = square_class(rng.randint(-30, 30) or 1)
        b = square_class(rng.randint(-30, 30) or 1)
        v = rng.choice(places)
        assert hilbert_symbol(a, b, v) == hilbert_symbol_search(a, b, v), (a, b, v)
    # the frozen examples again, through the oracle
    assert hilbert_symbol_search(-1, -1, Place(2)) == -1
    assert hilbert_symbol_search(2, 3, Place(3)) == -1


def test_hilbert_product_formula():
    rng = random.Random(3)
    for _ in range(300):
        a = square_class(Fraction(rng.randint(-10**4, 10**4) or 3, rng.randint(1, 10**4)))
        b = square_class(Fraction(rng.randint(-10**4, 10**4) or 5, rng.randint(1, 10**4)))
        assert [hilbert_symbol(a, b, v) for v in relevant_places([a, b])].count(-1) % 2 == 0


def test_hilbert_bimultiplicative_and_symmetric():
    rng = random.Random(5)
    for _ in range(100):
        a, a2, b = (square_class(rng.randint(-200, 200) or 7) for _ in range(3))
        for v in relevant_places([a, a2, b]):
            assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
            assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)


def test_symbol_norm_duality_small_instances():
    # all symbols +1 <=> z^2 = a x^2 + b y^2 rationally soluble
    soluble = [(2, 7), (1, 1), (3, 13), (-1, 5)]
    insoluble = [(3, 5), (-1, -1), (2, 5), (-1, 3)]
    for a, b in soluble:
        assert all(hilbert_symbol(a, b, v) == 1 for v in relevant_places([square_class(a), square_class(b)]))
        witness = isotropy_search([a, b, -1], 40)
        assert witness is not None
        x, y, z = witness
        assert a * x * x + b * y * y == z * z
    for a, b in insoluble:
        assert any(hilbert_symbol(a, b, v) == -1 for v in relevant_places([square_class(a), square_class(b)]))
        assert isotropy_search([a, b, -1], 40) is None
