"""Exact interval and complex-box arithmetic over rational endpoints.

Every operation is outward-closed under exact rational arithmetic, so
containment is conservative by construction: if x is in A and y is in B then
x op y is in A op B, with no rounding anywhere.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)


def dyadic_round(q: Fraction, bits: int) -> Fraction:
    """Nearest dyadic with denominator 2^bits; keeps Newton midpoints small."""
    scale = 1 << bits
    return Fraction(round(q * scale), scale)


def dyadic_floor(q: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    num = q.numerator * scale
    return Fraction(num // q.denominator, scale)


def dyadic_ceil(q: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    num = q.numerator * scale
    return Fraction(-((-num) // q.denominator), scale)


class Interval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(Fraction(x))

    @classmethod
    def centered(cls, mid, rad) -> "Interval":
        mid, rad = Fraction(mid), Fraction(rad)
        if rad < 0:
            raise ValueError("negative radius")
        return cls(mid - rad, mid + rad)

    # -- queries -------------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def rad(self) -> Fraction:
        return (self.hi - self.lo) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def contains_interior(self, other: "Interval") -> bool:
        return self.lo < other.lo and other.hi < self.hi

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def outer_dyadic(self, bits: int) -> "Interval":
        """Smallest enclosing interval with endpoints on the 2^-bits grid.

        Rounding every iterate outward keeps endpoint bit sizes bounded in
        long contraction loops without losing soundness.
        """
        return Interval(dyadic_floor(self.lo, bits), dyadic_ceil(self.hi, bits))

    @property
    def abs_hi(self) -> Fraction:
        """Upper bound of |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    @property
    def abs_lo(self) -> Fraction:
        """Lower bound of |x| over the interval (0 when it straddles 0)."""
        if self.lo <= 0 <= self.hi:
            return _ZERO
        return min(abs(self.lo), abs(self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- arithmetic ------------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Interval | None":
        if isinstance(x, Interval):
            return x
        if isinstance(x, (int, Fraction)):
            return Interval.point(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        products = (
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def square(self) -> "Interval":
        """Tight enclosure of {x^2}; sharper than self*self when 0 is inside."""
        if self.lo <= 0 <= self.hi:
            return Interval(_ZERO, max(self.lo * self.lo, self.hi * self.hi))
        lo2, hi2 = self.lo * self.lo, self.hi * self.hi
        return Interval(min(lo2, hi2), max(lo2, hi2))

    def recip(self) -> "Interval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.recip()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.recip()


class ComplexBox:
    """Axis-aligned rectangle in C with exact rational corners.

    The midpoint/radius view (radius = max half-width, square containment)
    is what gets serialized; internally the two half-widths stay separate so
    interval arithmetic is as tight as possible.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        if not isinstance(re, Interval) or not isinstance(im, Interval):
            raise TypeError("ComplexBox needs two Intervals")
        self.re = re
        self.im = im

    @classmethod
    def point(cls, re, im=0) -> "ComplexBox":
        return cls(Interval.point(re), Interval.point(im))

    @classmethod
    def from_midpoint(cls, re_mid, im_mid, radius) -> "ComplexBox":
        return cls(Interval.centered(re_mid, radius), Interval.centered(im_mid, radius))

    # -- midpoint/radius view ----------------------------------------------

    @property
    def re_mid(self) -> Fraction:
        return self.re.mid

    @property
    def im_mid(self) -> Fraction:
        return self.im.mid

    @property
    def radius(self) -> Fraction:
        return max(self.re.rad, self.im.rad)

    def midpoint(self) -> tuple[Fraction, Fraction]:
        return self.re.mid, self.im.mid

    def dyadic_midpoint(self, bits: int) -> "ComplexBox":
        """A zero-width box at (approximately) the midpoint, dyadic coords.

        The returned point need not be the exact center, only a point that
        lies inside the box, which is all interval Newton requires.
        """
        re = dyadic_round(self.re.mid, bits)
        im = dyadic_round(self.im.mid, bits)
        if not self.re.contains(re):
            re = self.re.mid
        if not self.im.contains(im):
            im = self.im.mid
        return ComplexBox.point(re, im)

    # -- queries ---------------------------------------------------------------

    def contains_point(self, re, im=0) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def contains_box(self, other: "ComplexBox") -> bool:
        return self.re.contains_interval(other.re) and self.im.contains_interval(other.im)

    def contains_interior(self, other: "ComplexBox") -> bool:
        return self.re.contains_interior(other.re) and self.im.contains_interior(other.im)

    def overlaps(self, other: "ComplexBox") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def intersect(self, other: "ComplexBox") -> "ComplexBox | None":
        re = self.re.intersect(other.re)
        im = self.im.intersect(other.im)
        if re is None or im is None:
            return None
        return ComplexBox(re, im)

    def contains_zero(self) -> bool:
        return self.contains_point(0, 0)

    def outer_dyadic(self, bits: int) -> "ComplexBox":
        return ComplexBox(self.re.outer_dyadic(bits), self.im.outer_dyadic(bits))

    @property
    def mag_hi(self) -> Fraction:
        """Rational upper bound for |z| (via |Re| + |Im| >= |z|)."""
        return self.re.abs_hi + self.im.abs_hi

    @property
    def mag_lo(self) -> Fraction:
        """Rational lower bound for |z| (via max(|Re|, |Im|) <= |z|)."""
        return max(self.re.abs_lo, self.im.abs_lo)

    def __repr__(self) -> str:
        return f"ComplexBox(re={self.re!r}, im={self.im!r})"

    def __eq__(self, other):
        if isinstance(other, ComplexBox):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    # -- arithmetic -------------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "ComplexBox | None":
        if isinstance(x, ComplexBox):
            return x
        if isinstance(x, (int, Fraction)):
            return ComplexBox.point(x)
        if isinstance(x, Interval):
            return ComplexBox(x, Interval.point(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexBox(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexBox(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def recip(self) -> "ComplexBox":
        """1/z over the box; requires the box to exclude 0."""
        d = self.re.square() + self.im.square()
        if d.lo <= 0:
            raise ZeroDivisionError("complex box may contain zero")
        inv = d.recip()
        return ComplexBox(self.re * inv, -(self.im * inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.recip()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.recip()
