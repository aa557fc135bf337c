import random
from fractions import Fraction

import pytest

from quadinv.arith import Place, REAL_PLACE, square_class
from quadinv.cohomology import CohomClass, UNIT, symbol
from quadinv.composition import (
    algebra_from_json,
    cayley_dickson,
    comp_isomorphic,
    e_invariant,
    is_split,
    pfister_form,
)
from quadinv.forms import form, isometric, isotropic


def test_pfister_form_examples():
    assert pfister_form([1]).to_list() == [1, -1]
    assert pfister_form([-1, -1]).to_list() == [1, 1, 1, 1]
    assert pfister_form([]).to_list() == [1]
    assert pfister_form([2, 3]).to_list() == [1, -2, -3, 6]
    with pytest.raises(ValueError):
        pfister_form([1, 1, 1, 1])


def test_e_invariant_examples():
    assert e_invariant([1]).is_zero
    assert e_invariant([-1, -1]) == CohomClass({2: frozenset({Place(2), REAL_PLACE})})
    assert e_invariant([-1, -1, -1]) == CohomClass({3: 1})
    assert e_invariant([]) == UNIT


def test_e_invariant_well_defined_on_isometry_classes():
    rng = random.Random(6)
    for _ in range(100):
        r = rng.randint(1, 3)
        slots = [square_class(rng.randint(-10, 10) or 3) for _ in range(r)]
        scaled = [s * square_class(rng.randint(2, 5) ** 2) for s in slots]
        assert e_invariant(scaled) == e_invariant(slots)
        if r >= 2:
            rewritten = list(slots)
            i, j = rng.sample(range(r), 2)
            rewritten[i], rewritten[j] = rewritten[j], rewritten[i]
            rewritten[j] = -rewritten[i] * rewritten[j]
            assert isometric(pfister_form(slots), pfister_form(rewritten))
            assert e_invariant(rewritten) == e_invariant(slots)


def test_complex_table():
    C = cayley_dickson([-1])
    i = C.basis_element(1)
    assert C.multiply(i, i) == C.one().scaled(-1)
    split = cayley_dickson([1])
    assert split.multiply(split.basis_element(1), split.basis_element(1)) == split.one()


def test_quaternion_table():
    H = cayley_dickson([-1, -1])
    one, i, j, k = (H.basis_element(t) for t in range(4))
    assert H.multiply(i, i) == one.scaled(-1)
    assert H.multiply(j, j) == one.scaled(-1)
    assert H.multiply(i, j) == k
    assert H.multiply(j, i) == k.scaled(-1)
    assert H.multiply(j, k) == i
    assert H.multiply(k, j) == i.scaled(-1)
    assert H.multiply(one, k) == k and H.multiply(k, one) == k


def test_norm_conj_examples():
    H = cayley_dickson([-1, -1])
    assert H.norm(H.one()) == 1
    x = H.element([1, 1, 1, 1])
    assert H.norm(x) == 4
    assert H.conj(x).coords == (Fraction(1), Fraction(-1), Fraction(-1), Fraction(-1))
    assert H.multiply(x, H.conj(x)) == H.one().scaled(4)
    with pytest.raises(ValueError):
        H.element([1, 2, 3])
    # norm values are exact, not square-class representatives
    C = cayley_dickson([-15, -6])
    assert C.norm(C.basis_element(3)) == 90


def test_composition_law_all_ranks():
    rng = random.Random(8)
    for r in range(4):
        for _ in range(120):
            C = cayley_dickson([rng.randint(-15, 15) or -1 for _ in range(r)])
            x = C.element([Fraction(rng.randint(-6, 6), rng.randint(1, 2)) for _ in range(C.dim)])
            y = C.element([Fraction(rng.randint(-6, 6), rng.randint(1, 2)) for _ in range(C.dim)])
            assert C.norm(C.multiply(x, y)) == C.norm(x) * C.norm(y)


def test_algebra_laws_by_rank():
    rng = random.Random(12)
    for _ in range(60):
        r = rng.randint(0, 3)
        C = cayley_dickson([rng.randint(-15, 15) or 2 for _ in range(r)])
        x, y, z = (
            C.element([Fraction(rng.randint(-5, 5)) for _ in range(C.dim)]) for _ in range(3)
        )
        assert C.conj(C.multiply(x, y)) == C.multiply(C.conj(y), C.conj(x))
        sq = C.multiply(x, x)
        trace = x + C.conj(x)
        assert sq - C.multiply(trace, x) + C.one().scaled(C.norm(x)) == C.zero()
        if r <= 2:
            assert C.multiply(C.multiply(x, y), z) == C.multiply(x, C.multiply(y, z))
        else:
            assert C.multiply(C.multiply(x, x), y) == C.multiply(x, C.multiply(x, y))
            assert C.multiply(C.multiply(y, x), x) == C.multiply(y, C.multiply(x, x))
        if r <= 1:
            assert C.multiply(x, y) == C.multiply(y, x)


def test_split_examples():
    assert is_split(cayley_dickson([1]))
    assert not is_split(cayley_dickson([-1, -1]))
    assert not is_split(cayley_dickson([-1, -1, -1]))
    assert is_split(cayley_dickson([1, 1, 1]))


def test_comp_isomorphic_examples():
    # 5 = 1 + 4 is a sum of two squares, so <<-1,-5>> = <<-1,-1>>
    assert comp_isomorphic(cayley_dickson([-1, -1]), cayley_dickson([-1, -5]))
    assert comp_isomorphic(cayley_dickson([1]), cayley_dickson([4]))
    assert not comp_isomorphic(cayley_dickson([-1, -1]), cayley_dickson([1, 1]))
    with pytest.raises(ValueError):
        comp_isomorphic(cayley_dickson([-1]), cayley_dickson([-1, -1]))


def test_pfister_dichotomy():
    rng = random.Random(13)
    for _ in range(80):
        r = rng.randint(1, 3)
        slots = [rng.randint(-30, 30) or 5 for _ in range(r)]
        phi = pfister_form(slots)
        hyperbolic = isometric(phi, form([1, -1] * (phi.dim // 2)))
        assert e_invariant(slots).is_zero == isotropic(phi) == hyperbolic


def test_algebra_from_json():
    C = algebra_from_json({"mu": [-1, -1]})
    assert C.slots == (square_class(-1), square_class(-1))
    assert C.to_json() == {"mu": [-1, -1]}
    with pytest.raises(ValueError):
        algebra_from_json({"mu": [0]})
    with pytest.raises(ValueError):
        algebra_from_json([1, 2])
