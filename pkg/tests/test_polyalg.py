import random

import pytest

from wittmod.exactnum import Scalar
from wittmod.polyalg import (
    LAURENT, PLUS, PolyElement, exponents_within, render_poly, unit_index,
)


def S(k):
    return Scalar.integer(k)


def P(n, mode, terms):
    return PolyElement(n, mode, {e: S(c) for e, c in terms.items()})


def test_mul_example():
    # (t1 + t2)(t1 - t2) = t1^2 - t2^2
    a = P(2, PLUS, {(1, 0): 1, (0, 1): 1})
    b = P(2, PLUS, {(1, 0): 1, (0, 1): -1})
    assert a * b == P(2, PLUS, {(2, 0): 1, (0, 2): -1})


def test_partial_example():
    p = P(2, PLUS, {(2, 1): 3})
    assert p.partial(1) == P(2, PLUS, {(1, 1): 6})
    assert p.partial(2) == P(2, PLUS, {(2, 0): 3})
    assert P(2, PLUS, {(0, 0): 5}).partial(1).is_zero()


def test_partial_laurent_negative():
    p = P(1, LAURENT, {(-1,): 1})
    assert p.partial(1) == P(1, LAURENT, {(-2,): -1})
    # d/dt of t^0 dies in laurent mode too
    assert P(1, LAURENT, {(0,): 1}).partial(1).is_zero()


def test_graded_component():
    p = P(2, LAURENT, {(1, 1): 1, (2, 0): 2, (-1, 1): 7})
    assert p.graded_component(2) == P(2, LAURENT, {(1, 1): 1, (2, 0): 2})
    assert p.graded_component(0) == P(2, LAURENT, {(-1, 1): 7})
    assert p.graded_component(5).is_zero()


def test_plus_mode_rejects_negative():
    with pytest.raises(ValueError, match="negative exponent"):
        P(2, PLUS, {(-1, 0): 1})


def test_mode_mixing_rejected():
    with pytest.raises(ValueError, match="mixed"):
        P(1, PLUS, {(1,): 1}) + P(1, LAURENT, {(1,): 1})


def test_render():
    p = P(2, LAURENT, {(2, 1): 2, (-1, 0): -1})
    assert render_poly(p) == "2*t1^2*t2 - t1^-1"
    assert render_poly(P(2, PLUS, {(0, 0): 1})) == "1"
    assert render_poly(PolyElement.zero(2)) == "0"
    sym = PolyElement(1, PLUS, {(1,): Scalar.param("l1") + S(2)})
    assert render_poly(sym) == "(l1 + 2)*t1"


def test_leibniz_randomized():
    rng = random.Random(314)

    def rand_poly(n, mode):
        terms = {}
        for _ in range(rng.randint(1, 5)):
            if mode == PLUS:
                e = tuple(rng.randint(0, 3) for _ in range(n))
            else:
                e = tuple(rng.randint(-3, 3) for _ in range(n))
            terms[e] = S(rng.randint(-5, 5))
        return PolyElement(n, mode, terms)

    for _ in range(40):
        n = rng.randint(1, 3)
        mode = rng.choice([PLUS, LAURENT])
        f, g = rand_poly(n, mode), rand_poly(n, mode)
        i = rng.randint(1, n)
        assert (f * g).partial(i) == f.partial(i) * g + f * g.partial(i)
        assert f * g == g * f
        h = rand_poly(n, mode)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h


def test_exponents_within():
    assert exponents_within(2, 1, PLUS) == [(0, 0), (0, 1), (1, 0)]
    lau = exponents_within(2, 1, LAURENT)
    assert set(lau) == {(0, 0), (0, 1), (0, -1), (1, 0), (-1, 0)}
    assert len(exponents_within(2, 2, PLUS)) == 6
    assert len(exponents_within(2, 2, LAURENT)) == 13
    # sorted by level then lexicographic
    assert lau[0] == (0, 0)


def test_unit_index():
    assert unit_index(3, 2) == (0, 1, 0)
