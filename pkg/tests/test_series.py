import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzrec.series import Series, TruncationError, residue_of_product


def S(min_exp, coeffs, trunc=None):
    return Series(min_exp, [Fraction(c) for c in coeffs], trunc)


def geometric(trunc):
    """1 + z + z^2 + ... up to the given order."""
    return S(0, [1] * trunc, trunc)


class TestBasics:
    def test_add_coefficientwise(self):
        a = S(0, [1, 1])  # 1 + z
        b = S(0, [-1, 1])  # -1 + z
        assert a + b == S(1, [2])

    def test_add_identity(self):
        a = S(-1, [2, 0, 3], trunc=4)
        assert a + Series.zero() == a

    def test_add_laurent_merge(self):
        a = S(-1, [1])
        b = S(1, [1])
        c = a + b
        assert c.min_exponent == -1
        assert c.coefficient(-1) == 1 and c.coefficient(0) == 0 and c.coefficient(1) == 1

    def test_mul_polynomials(self):
        assert S(0, [1, 1]) * S(0, [1, -1]) == S(0, [1, 0, -1])

    def test_mul_exponent_cancellation(self):
        assert S(-1, [1]) * S(1, [1]) == S(0, [1])

    def test_mul_geometric_inverse(self):
        prod = geometric(8) * S(0, [1, -1])
        assert prod == S(0, [1], trunc=8)

    def test_trunc_propagation_mul(self):
        a = S(0, [1, 1], trunc=2)
        b = S(1, [1], trunc=5)
        # unknown tail of a starts at z^2, so the product is known below z^3
        assert (a * b).trunc_order == 3

    def test_coeff_and_errors(self):
        a = S(0, [1, 2], trunc=2)
        assert a.coefficient(1) == 2
        assert a.coefficient(-5) == 0
        with pytest.raises(TruncationError):
            a.coefficient(2)

    def test_derivative(self):
        assert S(2, [1]).derivative() == S(1, [2])
        assert S(-1, [1]).derivative() == S(-2, [-1])
        assert S(0, [7]).derivative().is_zero

    def test_residue(self):
        assert S(-1, [1]).residue() == 1
        assert S(-2, [1, 3, 5]).residue() == 3
        assert S(0, [4, 4], trunc=9).residue() == 0
        with pytest.raises(TruncationError):
            S(1, [1], trunc=-1).residue()


class TestInversion:
    def test_invert_geometric(self):
        inv = S(0, [1, -1]).invert_unit(order=6)
        assert inv == geometric(6)

    def test_invert_constant(self):
        assert S(0, [2]).invert_unit() == S(0, [Fraction(1, 2)])

    def test_invert_laurent(self):
        inv = S(1, [1, 1]).invert_unit(order=3)
        # 1/(z(1+z)) = z^-1 (1 - z + z^2 - ...)
        assert inv == S(-1, [1, -1, 1, -1], trunc=3)

    def test_invert_zero_rejected(self):
        with pytest.raises(ValueError):
            Series.zero(5).invert_unit()

    def test_round_trip(self):
        a = S(-2, [3, 1, 0, 5], trunc=4)
        prod = a * a.invert_unit()
        assert prod.coefficient(0) == 1
        assert all(prod.coefficient(n) == 0 for n in range(prod.min_exponent, prod.trunc_order) if n != 0)


class TestCompose:
    def test_geometric_of_z(self):
        outer = S(0, [1, -1]).invert_unit(order=7)  # 1/(1-w)
        inner = Series.identity(7)
        assert outer.compose(inner) == geometric(7)

    def test_identity_inner(self):
        outer = S(-1, [1, 2, 3], trunc=4)
        assert outer.compose(Series.identity(10)).agrees_with(outer)

    def test_exp_log_pair(self):
        z = Series.identity(9)
        a = z.log1p()  # log(1+z)
        e = a.exp()
        assert e.agrees_with(S(0, [1, 1]))

    def test_rejects_constant_term(self):
        with pytest.raises(ValueError):
            S(0, [1, 1]).compose(S(0, [1, 1]))

    def test_laurent_outer(self):
        outer = S(-1, [1])  # 1/w
        inner = S(1, [1, 1], trunc=5)  # z(1+z)
        got = outer.compose(inner)
        assert got.agrees_with(S(-1, [1, -1, 1, -1], trunc=3))


class TestReversion:
    def test_catalan(self):
        a = S(1, [1, -1], trunc=6)  # w - w^2
        b = a.reversion()
        assert b == S(1, [1, 1, 2, 5, 14], trunc=6)

    def test_back_substitution(self):
        a = S(1, [1, -1], trunc=8)
        b = a.reversion()
        assert a.compose(b).agrees_with(Series.identity(8))

    def test_tree_function(self):
        # the inverse of w = z e^{-z} has coefficients m^(m-1)/m!
        order = 9
        z = Series.identity(order + 1)
        w = z * (-z).exp()
        t = w.reversion()
        import math

        for m in range(1, order):
            assert t.coefficient(m) == Fraction(m ** (m - 1), math.factorial(m))

    def test_identity(self):
        assert Series.identity(5).reversion() == Series.identity(5)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            S(0, [1, 1], trunc=4).reversion()
        with pytest.raises(ValueError):
            S(2, [1], trunc=4).reversion()


class TestExpLog:
    def test_exp_zero(self):
        assert Series.zero(5).exp() == S(0, [1], trunc=5)

    def test_exp_z(self):
        e = Series.identity(5).exp()
        assert e == S(0, [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)], trunc=5)

    def test_log1p_zero(self):
        assert Series.zero(4).log1p().is_zero

    def test_log1p_defining_series(self):
        lg = Series.identity(5).log1p()
        assert lg == S(1, [1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4)], trunc=5)

    def test_rejects_constant_term(self):
        with pytest.raises(ValueError):
            S(0, [1, 1], trunc=3).exp()
        with pytest.raises(ValueError):
            S(0, [1, 1], trunc=3).log1p()

    def test_sqrt_unit(self):
        a = S(0, [1, 2, 3], trunc=8)
        r = a.sqrt_unit()
        assert (r * r).agrees_with(a)


def random_series(rng, laurent=True, trunc=8):
    lo = rng.randint(-2, 1) if laurent else 0
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(trunc - lo)]
    return Series(lo, coeffs, trunc)


class TestRingAxioms:
    def test_randomized_ring_axioms(self):
        rng = random.Random(7)
        for _ in range(40):
            a = random_series(rng)
            b = random_series(rng)
            c = random_series(rng)
            assert (a * b).agrees_with(b * a)
            assert ((a + b) + c).agrees_with(a + (b + c))
            assert ((a * b) * c).agrees_with(a * (b * c))
            assert (a * (b + c)).agrees_with(a * b + a * c)

    def test_residue_of_derivative_vanishes(self):
        rng = random.Random(11)
        for _ in range(25):
            a = random_series(rng)
            d = a.derivative()
            if d.trunc_order is None or d.trunc_order > -1:
                assert d.residue() == 0

    def test_determinism(self):
        rng1, rng2 = random.Random(3), random.Random(3)
        a1, b1 = random_series(rng1), random_series(rng1)
        a2, b2 = random_series(rng2), random_series(rng2)
        assert (a1 * b1) == (a2 * b2)
        assert a1.invert_unit() == a2.invert_unit()


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=6)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_fracs, min_size=1, max_size=6))
def test_reversion_round_trips(coeffs):
    if not coeffs[0]:
        coeffs[0] = Fraction(1)
    a = Series(1, coeffs, 8)
    b = a.reversion()
    assert a.compose(b).agrees_with(Series.identity(8))
    assert b.reversion().agrees_with(a)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_fracs, min_size=0, max_size=6))
def test_exp_log_round_trip(coeffs):
    a = Series(1, coeffs, 8)
    assert a.exp().coefficient(0) == 1
    assert (a.exp() - 1).log1p().agrees_with(a)
    assert a.log1p().exp().agrees_with(1 + a)


def test_residue_of_product_matches_full_product():
    rng = random.Random(5)
    for _ in range(20):
        f = random_series(rng)
        g = random_series(rng)
        full = f * g
        if full.trunc_order is not None and full.trunc_order <= -1:
            with pytest.raises(TruncationError):
                residue_of_product(f, g)
        else:
            assert residue_of_product(f, g) == full.residue()
