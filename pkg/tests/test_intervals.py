"""Interval and box arithmetic: containment under exact rational sampling."""

import random
from fractions import Fraction

import pytest

from elindep.intervals import ComplexBox, Interval, dyadic_ceil, dyadic_floor

from support import random_fraction


def rand_interval(rng):
    a = random_fraction(rng, num_max=20, den_max=7, allow_zero=True)
    b = random_fraction(rng, num_max=20, den_max=7, allow_zero=True)
    return Interval(min(a, b), max(a, b))


def sample(rng, iv):
    # exact rational point inside iv
    t = Fraction(rng.randrange(0, 101), 100)
    return iv.lo + t * (iv.hi - iv.lo)


class TestInterval:
    def test_constructors(self):
        assert Interval.point(3).width == 0
        iv = Interval.centered(Fraction(1, 2), Fraction(1, 4))
        assert iv.lo == Fraction(1, 4) and iv.hi == Fraction(3, 4)
        with pytest.raises(ValueError):
            Interval(2, 1)

    def test_arithmetic_containment(self):
        rng = random.Random(2024)
        for _ in range(200):
            u, v = rand_interval(rng), rand_interval(rng)
            x, y = sample(rng, u), sample(rng, v)
            assert (u + v).contains(x + y)
            assert (u - v).contains(x - y)
            assert (u * v).contains(x * y)
            assert u.square().contains(x * x)
            if not v.contains(0):
                assert (u / v).contains(x / y)

    def test_division_by_zero_straddling(self):
        with pytest.raises(ZeroDivisionError):
            Interval(1, 2) / Interval(-1, 1)

    def test_abs_bounds(self):
        iv = Interval(-3, 2)
        assert iv.abs_hi == 3
        assert iv.abs_lo == 0
        assert Interval(1, 2).abs_lo == 1
        assert Interval(-5, -4).abs_lo == 4

    def test_set_operations(self):
        a, b = Interval(0, 2), Interval(1, 3)
        assert a.overlaps(b)
        assert a.intersect(b) == Interval(1, 2)
        assert a.hull(b) == Interval(0, 3)
        assert a.intersect(Interval(5, 6)) is None
        assert Interval(0, 4).contains_interval(b)
        assert Interval(0, 4).contains_interior(b)
        assert not Interval(1, 4).contains_interior(b)

    def test_outer_dyadic_nests(self):
        rng = random.Random(7)
        for _ in range(50):
            iv = rand_interval(rng)
            outer = iv.outer_dyadic(16)
            assert outer.contains_interval(iv)
            # endpoints become dyadic with at most 16 fractional bits
            assert (outer.lo * 2**16).denominator == 1
            assert (outer.hi * 2**16).denominator == 1

    def test_dyadic_rounding(self):
        q = Fraction(1, 3)
        assert dyadic_floor(q, 4) <= q <= dyadic_ceil(q, 4)
        assert dyadic_ceil(q, 4) - dyadic_floor(q, 4) <= Fraction(1, 16)


class TestComplexBox:
    def test_point_and_midpoint(self):
        b = ComplexBox.point(Fraction(1, 2), Fraction(-1, 3))
        assert b.radius == 0
        assert b.midpoint() == (Fraction(1, 2), Fraction(-1, 3))
        c = ComplexBox.from_midpoint(0, 0, Fraction(1, 8))
        assert c.radius >= Fraction(1, 8)
        assert c.contains_point(Fraction(1, 16), Fraction(-1, 16))

    def test_arithmetic_containment(self):
        rng = random.Random(99)
        for _ in range(120):
            b1 = ComplexBox(rand_interval(rng), rand_interval(rng))
            b2 = ComplexBox(rand_interval(rng), rand_interval(rng))
            x = (sample(rng, b1.re), sample(rng, b1.im))
            y = (sample(rng, b2.re), sample(rng, b2.im))
            s = b1 + b2
            assert s.contains_point(x[0] + y[0], x[1] + y[1])
            d = b1 - b2
            assert d.contains_point(x[0] - y[0], x[1] - y[1])
            p = b1 * b2
            assert p.contains_point(x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def test_reciprocal_containment(self):
        # 1/(a+bi) = (a-bi)/(a^2+b^2), on boxes away from zero
        b = ComplexBox(Interval(2, 3), Interval(1, 2))
        x, y = Fraction(5, 2), Fraction(3, 2)
        n = x * x + y * y
        assert b.recip().contains_point(x / n, -y / n)
        with pytest.raises(ZeroDivisionError):
            ComplexBox(Interval(-1, 1), Interval(-1, 1)).recip()

    def test_magnitude_bounds(self):
        b = ComplexBox(Interval(3, 3), Interval(4, 4))
        assert b.mag_lo <= 5 <= b.mag_hi
        assert ComplexBox(Interval(-1, 1), Interval(-1, 1)).mag_lo == 0

    def test_contains_zero(self):
        assert ComplexBox(Interval(-1, 1), Interval(-1, 1)).contains_zero()
        assert not ComplexBox(Interval(1, 2), Interval(-1, 1)).contains_zero()

    def test_outer_dyadic_nests(self):
        b = ComplexBox(Interval(Fraction(1, 3), Fraction(2, 3)), Interval(Fraction(-1, 7), Fraction(1, 7)))
        outer = b.outer_dyadic(20)
        assert outer.contains_box(b)

    def test_intersect(self):
        a = ComplexBox(Interval(0, 2), Interval(0, 2))
        b = ComplexBox(Interval(1, 3), Interval(1, 3))
        got = a.intersect(b)
        assert got == ComplexBox(Interval(1, 2), Interval(1, 2))
        far = ComplexBox(Interval(10, 11), Interval(0, 1))
        assert a.intersect(far) is None
