import random
from fractions import Fraction

import pytest

from wittmod.exactnum import (
    ExactMatrix, Scalar, Echelon, in_span, kernel_basis, rank, span_dim,
)


def S(k):
    return Scalar.integer(k)


L1 = Scalar.param("l1")
L2 = Scalar.param("l2")


def test_field_identity_example():
    # (l1 + 1)/(l1 - 1) - 2/(l1 - 1) == 1
    one = S(1)
    assert (L1 + one) / (L1 - one) - S(2) / (L1 - one) == one


def test_canonical_reduction():
    assert (L1 * L1 - S(1)) / (L1 + S(1)) == L1 - S(1)
    assert Scalar.rational(2, 4) == Scalar.rational(1, 2)
    assert Scalar.rational(3, -6) == Scalar.rational(-1, 2)
    # denominator sign normalization makes equality structural
    a = S(1) / (S(0) - L1)
    b = (S(0) - S(1)) / L1
    assert a == b and hash(a) == hash(b)


def test_zero_divisor():
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        S(1) / S(0)
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        (L1 - L1).inv()


def test_rational_views():
    x = Scalar.rational(6, 4)
    assert x.is_rational() and x.as_fraction() == Fraction(3, 2)
    assert not L1.is_rational()
    assert (L1 + S(3)).constant_part() == Fraction(3)
    assert (S(1) / L1).constant_part() is None


def test_str_render():
    assert str(S(2) * L1 * L1 * L2 - L1) == "2*l1^2*l2 - l1"
    assert str((L1 + S(2)) / (L1 - S(1))) == "(l1 + 2)/(l1 - 1)"
    assert str(S(0)) == "0"


def test_rank_kernel_example():
    # [[1, l1], [l1, l1^2]] has rank 1, kernel spanned by (-l1, 1)
    m = ExactMatrix.from_entries(2, 2, {
        (0, 0): S(1), (0, 1): L1, (1, 0): L1, (1, 1): L1 * L1})
    assert rank(m) == 1
    ker = kernel_basis(m)
    assert len(ker) == 1
    assert ker[0] == [-L1, S(1)]


def test_in_span_example():
    vs = [{0: S(1)}, {0: L1, 1: S(1)}]
    assert in_span(vs, {0: S(1) + L1, 1: S(1)})
    assert not in_span(vs, {2: S(1)})


def test_echelon_same_span():
    e1, e2 = Echelon(), Echelon()
    e1.add({0: S(1), 1: S(2)})
    e1.add({1: S(1), 2: L1})
    e2.add({0: S(2), 1: S(5), 2: L1})
    e2.add({0: S(1), 1: S(2)})
    assert e1.same_span(e2)
    assert e1.dim == 2
    assert e1.contains({0: S(3), 1: S(7), 2: L1})


def _random_matrix(rng, nr, nc, symbolic=False):
    entries = {}
    for i in range(nr):
        for j in range(nc):
            if rng.random() < 0.4:
                x = Scalar.rational(rng.randint(-6, 6), rng.randint(1, 4))
                if symbolic and rng.random() < 0.2:
                    x = x * L1 + S(rng.randint(-2, 2))
                entries[(i, j)] = x
    return ExactMatrix.from_entries(nr, nc, entries)


def test_rank_nullity_randomized():
    rng = random.Random(20260814)
    for trial in range(25):
        nr, nc = rng.randint(1, 8), rng.randint(1, 8)
        m = _random_matrix(rng, nr, nc, symbolic=(trial % 3 == 0))
        r = rank(m)
        ker = kernel_basis(m)
        assert r + len(ker) == nc
        for v in ker:
            assert all(x.is_zero() for x in m.apply(v))


def test_rank_matches_sympy_oracle():
    sympy = pytest.importorskip("sympy")
    l1 = sympy.Symbol("l1")
    rng = random.Random(7)
    for _ in range(10):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = _random_matrix(rng, nr, nc, symbolic=True)
        sm = sympy.zeros(nr, nc)
        for i in range(nr):
            for j in range(nc):
                x = m.entry(i, j)
                num = sum(c * sympy.prod([sympy.Symbol(n) ** e for n, e in mono])
                          for mono, c in x.num.items())
                den = sum(c * sympy.prod([sympy.Symbol(n) ** e for n, e in mono])
                          for mono, c in x.den.items())
                sm[i, j] = sympy.nsimplify(num) / sympy.nsimplify(den)
        assert rank(m) == sm.rank()


def test_gcd_reduction_matches_sympy_oracle():
    sympy = pytest.importorskip("sympy")
    rng = random.Random(99)

    def rand_poly():
        x = S(0)
        for _ in range(rng.randint(1, 3)):
            c = Scalar.rational(rng.randint(-4, 4), 1)
            term = c
            for _ in range(rng.randint(0, 2)):
                term = term * (L1 if rng.random() < 0.6 else L2)
            x = x + term
        return x

    def to_sympy(x):
        conv = lambda p: sum(
            c * sympy.prod([sympy.Symbol(n) ** e for n, e in mono])
            for mono, c in p.items())
        return sympy.together(conv(x.num) / conv(x.den))

    for _ in range(30):
        a, b = rand_poly(), rand_poly()
        if b.is_zero():
            continue
        q = a / b
        diff = sympy.simplify(to_sympy(q) - to_sympy(a) / to_sympy(b))
        assert diff == 0


def test_matrix_mul_apply():
    m = ExactMatrix.from_entries(2, 2, {(0, 1): S(1), (1, 0): L1})
    sq = m.mul(m)
    assert sq.entry(0, 0) == L1 and sq.entry(1, 1) == L1
    assert sq.entry(0, 1).is_zero()
    assert m.apply([S(1), S(2)]) == [S(2), L1]
    assert m.apply_sparse({0: S(1)}) == {1: L1}
    assert m.column(0) == {1: L1}


def test_span_dim():
    assert span_dim([{0: S(1)}, {0: S(2)}, {1: L1}]) == 2


def test_hypothesis_field_axioms():
    hyp = pytest.importorskip("hypothesis")
    from hypothesis import given, settings, strategies as st

    def scalars():
        base = st.integers(-20, 20).map(S)
        sym = st.integers(-3, 3).map(lambda k: L1 * S(k) + S(1))
        return st.one_of(base, st.tuples(base, sym).map(lambda t: t[0] + t[1]))

    @given(scalars(), scalars(), scalars())
    @settings(max_examples=60, deadline=None)
    def inner(a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + b == b + a
        if not c.is_zero():
            assert (a / c) * c == a

    inner()
