"""Univariate polynomials over exact rationals.

Coefficients are stored ascending as a tuple of Fractions with trailing zeros
trimmed; the zero polynomial has an empty tuple and degree -1. Everything here
is exact: no floats enter or leave.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Callable, Iterable, Sequence


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def x_power(cls, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (1,))

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Euclidean division over Q: self = q*other + r with deg r < deg other."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lc = other.lc
        q = [Fraction(0)] * max(0, len(rem) - d)
        for i in range(len(rem) - d - 1, -1, -1):
            c = rem[i + d] / lc
            if c:
                q[i] = c
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] -= c * oc
        return Polynomial(q), Polynomial(rem[:d] if d > 0 else ())

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x):
        """Horner evaluation; x may be any type closed under + and *."""
        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose_scale(self, c) -> "Polynomial":
        """Return p(c*z) for an exact rational c."""
        c = _as_fraction(c)
        power = Fraction(1)
        out = []
        for a in self.coeffs:
            out.append(a * power)
            power *= c
        return Polynomial(out)

    def shifted(self, k: int) -> "Polynomial":
        """Multiply by z^k, k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero:
            return self
        return Polynomial((Fraction(0),) * k + self.coeffs)

    def reversed_coeffs(self) -> "Polynomial":
        """Coefficient reversal: roots map to reciprocals when p(0) != 0."""
        return Polynomial(tuple(reversed(self.coeffs)))

    def deflate_z(self) -> tuple[int, "Polynomial"]:
        """Write p = z^k * q with q(0) != 0; returns (k, q). Zero poly gives (0, 0)."""
        if self.is_zero:
            return 0, self
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k, Polynomial(self.coeffs[k:])

    # -- normal forms --------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content; 0 for the zero polynomial."""
        if self.is_zero:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = int_gcd(num, abs(c.numerator))
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_int(self) -> "Polynomial":
        """Integer coefficients, content 1, positive leading coefficient."""
        if self.is_zero:
            return self
        p = self * (1 / self.content())
        if p.lc < 0:
            p = -p
        return p

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def int_coeffs(self) -> list[int]:
        p = self.primitive_int()
        return [int(c) for c in p.coeffs]


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd over Q via a primitive pseudo-remainder sequence.

    The primitive-PRS form keeps intermediate integer coefficients small
    enough for the degree ~40 inputs seen here.
    """
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    a = p.primitive_int()
    b = q.primitive_int()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, r.primitive_int()
    return a.monic()


def _pseudo_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    """lc(b)^(deg a - deg b + 1) * a mod b, staying in integer coefficients."""
    d = a.degree - b.degree
    if d < 0:
        return a
    lc_b = b.lc
    rem = list(a.coeffs)
    for i in range(d, -1, -1):
        c = rem[i + b.degree]
        for j in range(len(rem)):
            rem[j] *= lc_b
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    return Polynomial(rem[: b.degree] if b.degree > 0 else ())


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic radical of p: same roots, all simple."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return Polynomial.one()
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def is_squarefree(p: Polynomial) -> bool:
    return p.degree <= 0 or poly_gcd(p, p.derivative()).degree == 0


def _bareiss_det(rows: list[list], zero, exact_div: Callable):
    """Fraction-free Bareiss determinant over an exact integral domain."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    m = [row[:] for row in rows]
    sign = 1
    prev = None
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if m[i][k] != zero), None)
        if piv is None:
            return zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = t if prev is None else exact_div(t, prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _sylvester_rows(p: Sequence, q: Sequence, zero) -> list[list]:
    """Sylvester matrix rows for sequences of descending coefficients."""
    m = len(p) - 1
    n = len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(p) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(q) + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: Polynomial, q: Polynomial) -> Fraction:
    """Resultant of p and q over Q (Sylvester determinant)."""
    if p.is_zero or q.is_zero:
        return Fraction(0)
    if p.degree == 0 and q.degree == 0:
        return Fraction(1)
    if p.degree == 0:
        return p.lc**q.degree
    if q.degree == 0:
        return q.lc**p.degree
    rows = _sylvester_rows(
        list(reversed(p.coeffs)), list(reversed(q.coeffs)), Fraction(0)
    )
    return _bareiss_det(rows, Fraction(0), lambda a, b: a / b)


def resultant_bivariate(p: Sequence[Polynomial], q: Sequence[Polynomial]) -> Polynomial:
    """Resultant in the outer variable of two polynomials whose coefficients
    are themselves Polynomials (in the surviving variable).

    `p` and `q` list coefficients ascending in the eliminated variable.
    """
    pc = list(p)
    while pc and pc[-1].is_zero:
        pc.pop()
    qc = list(q)
    while qc and qc[-1].is_zero:
        qc.pop()
    if not pc or not qc:
        return Polynomial.zero()
    dp, dq = len(pc) - 1, len(qc) - 1
    if dp == 0 and dq == 0:
        return Polynomial.one()
    if dp == 0:
        return pc[0] ** dq
    if dq == 0:
        return qc[0] ** dp
    rows = _sylvester_rows(list(reversed(pc)), list(reversed(qc)), Polynomial.zero())
    return _bareiss_det(rows, Polynomial.zero(), lambda a, b: a.exact_div(b))


def ratio_set_poly(p: Polynomial, q: Polynomial) -> Polynomial:
    """Squarefree polynomial whose roots are exactly {a/b : p(a)=0, q(b)=0}.

    Requires q(0) != 0 so every quotient is defined. Computed by eliminating
    y from (q(y), p(x*y)); the result lives in x.
    """
    if p.is_zero or q.is_zero:
        raise ValueError("ratio set of the zero polynomial")
    if q[0] == 0:
        raise ValueError("q must not vanish at zero")
    if p.degree == 0 or q.degree == 0:
        return Polynomial.one()
    # p(x*y) as a polynomial in y: coefficient of y^k is p_k * x^k.
    pxy = [Polynomial((0,) * k + (c,)) for k, c in enumerate(p.coeffs)]
    qy = [Polynomial.constant(c) for c in q.coeffs]
    res = resultant_bivariate(qy, pxy)
    if res.is_zero:
        raise ValueError("degenerate ratio-set resultant")
    return squarefree_part(res)
