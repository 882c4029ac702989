"""Certified algebraic numbers: isolation, refinement, and exact decisions.

An algebraic number is a squarefree integer polynomial together with a
certified isolating box. Root isolation pairs a numeric proposer
(mpmath.polyroots) with an exact-rational Krawczyk contraction test; the
proposer only suggests boxes, it never enters the soundness argument:

  * Krawczyk contraction K(B) strictly inside B, with p'(B) excluding zero,
    proves B contains exactly one root (Brouwer for existence, a
    divided-difference argument for uniqueness).
  * Pairwise disjointness plus box count == degree proves every root was
    captured.

All decision loops escalate working precision from Precision.start_bits by
doubling up to Precision.max_bits and then raise PrecisionExceededError, so
no equality or membership answer is ever a guess.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Callable, Iterable

import mpmath

from .errors import PrecisionExceededError
from .intervals import ComplexBox, Interval
from .polynomials import (
    Polynomial,
    is_squarefree,
    poly_gcd,
    ratio_set_poly,
    resultant_bivariate,
    squarefree_part,
)


class Precision:
    """Explicit working-precision context for certified decisions."""

    __slots__ = ("start_bits", "max_bits")

    def __init__(self, start_bits: int = 64, max_bits: int = 1 << 16):
        if start_bits < 8 or max_bits < start_bits:
            raise ValueError("bad precision bounds")
        self.start_bits = start_bits
        self.max_bits = max_bits

    def ladder(self) -> Iterable[int]:
        bits = self.start_bits
        while bits <= self.max_bits:
            yield bits
            bits *= 2

    def exhausted(self, what: str) -> PrecisionExceededError:
        return PrecisionExceededError(
            f"{what} undecided at the {self.max_bits}-bit precision cap"
        )


DEFAULT_PRECISION = Precision()


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        return Fraction(0)
    frac = Fraction(man) * Fraction(2) ** exp
    return -frac if sign else frac


def _krawczyk_step(p: Polynomial, dp: Polynomial, box: ComplexBox, mid_bits: int):
    """One Krawczyk contraction test.

    Returns a strictly smaller certified box (containing exactly one root of
    p, the same root as any root of p in `box`) or None if the test fails.
    """
    m = box.dyadic_midpoint(mid_bits)
    dpm = dp(m)
    if dpm.contains_zero():
        return None
    pm = p(m)
    y = dpm.recip()
    db = dp(box)
    if db.contains_zero():
        return None
    one = ComplexBox.point(1)
    k = m - y * pm + (one - y * db) * (box - m)
    if box.contains_interior(k):
        # round outward onto a dyadic grid so endpoint sizes stay bounded
        # across iterations; the root stays inside
        rounded = k.outer_dyadic(mid_bits + 8)
        refined = rounded.intersect(box)
        return refined if refined is not None else rounded
    return None


def _refine_certified(
    p: Polynomial,
    dp: Polynomial,
    box: ComplexBox,
    target_radius: Fraction,
    max_steps: int = 256,
) -> ComplexBox | None:
    """Shrink a certified box below target_radius by repeated contraction."""
    current = box
    # midpoint granularity a little finer than the target radius
    mid_bits = max(96, _radius_bits(target_radius) + 32)
    for _ in range(max_steps):
        if current.radius <= target_radius:
            return current
        nxt = _krawczyk_step(p, dp, current, mid_bits)
        if nxt is None:
            return None
        if nxt.radius > current.radius * Fraction(15, 16):
            # stalled; give the caller a chance to re-isolate instead
            current = nxt
            continue
        current = nxt
    return current if current.radius <= target_radius else None


def _radius_bits(radius: Fraction) -> int:
    """Smallest b with 2^-b <= radius ... inverted: bits so 2^-bits <= radius."""
    if radius <= 0:
        return 0
    num, den = radius.numerator, radius.denominator
    return max(0, den.bit_length() - num.bit_length() + 1)


class _IsolationCache:
    """Per-polynomial cache of the tightest certified isolation so far.

    Refinement always contracts inside the previously returned boxes, so
    repeated calls at increasing precision yield nested boxes.
    """

    def __init__(self):
        self._store: dict[tuple, tuple[int, tuple[ComplexBox, ...]]] = {}

    def key(self, p: Polynomial) -> tuple:
        return tuple(p.int_coeffs())

    def get(self, p: Polynomial):
        return self._store.get(self.key(p))

    def put(self, p: Polynomial, bits: int, boxes: tuple[ComplexBox, ...]):
        self._store[self.key(p)] = (bits, boxes)


_CACHE = _IsolationCache()


def _propose_roots(p: Polynomial, dps: int):
    coeffs = [
        mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
        for c in reversed(p.coeffs)
    ]
    with mpmath.workdps(dps):
        try:
            roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=dps * 4)
        except (mpmath.libmp.NoConvergence, ZeroDivisionError):
            return None
    return [mpmath.mpc(r) for r in roots]


def isolate_roots(
    p: Polynomial,
    precision_bits: int = 64,
    ctx: Precision = DEFAULT_PRECISION,
) -> list[ComplexBox]:
    """Certified isolating boxes for all complex roots of a squarefree p.

    Each returned box contains exactly one root, boxes are pairwise
    disjoint, there is one per root, and every radius is at most
    2^-precision_bits. Repeated calls at higher precision give boxes nested
    inside earlier ones.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if not is_squarefree(p):
        raise ValueError("isolate_roots requires a squarefree polynomial")
    p = p.primitive_int()
    if p.degree <= 0:
        return []
    target = Fraction(1, 1 << precision_bits)
    dp = p.derivative()

    cached = _CACHE.get(p)
    if cached is not None:
        bits, boxes = cached
        if bits >= precision_bits:
            return list(boxes)
        refined = _refine_boxes(p, dp, boxes, target, ctx)
        if refined is not None:
            _CACHE.put(p, precision_bits, tuple(refined))
            return list(refined)

    if p.degree == 1:
        root = -p[0] / p[1]
        boxes = (ComplexBox.point(root),)
        _CACHE.put(p, max(precision_bits, ctx.max_bits), boxes)
        return list(boxes)

    for bits in ctx.ladder():
        dps = max(30, int(bits * 0.302) + 10 + 2 * p.degree)
        proposals = _propose_roots(p, dps)
        if proposals is None:
            continue
        boxes = _certify_proposals(p, dp, proposals, target, bits)
        if boxes is not None:
            _CACHE.put(p, precision_bits, tuple(boxes))
            return list(boxes)
    raise ctx.exhausted(f"root isolation for degree {p.degree}")


def _certify_proposals(p, dp, proposals, target, bits):
    n = p.degree
    if len(proposals) != n:
        return None
    sep = None
    for i in range(n):
        for j in range(i + 1, n):
            d = abs(proposals[i] - proposals[j])
            sep = d if sep is None else min(sep, d)
    if sep is not None and sep <= 0:
        return None
    r0 = Fraction(1, 1 << min(bits, 256))
    if sep is not None:
        r0 = max(r0, min(_mpf_to_fraction(sep) / 8, Fraction(1, 4)))
    r0 = min(r0, Fraction(1, 16)) if sep is None else r0
    mid_bits = _radius_bits(target) + 32
    boxes = []
    for z in proposals:
        re = _mpf_to_fraction(z.real)
        im = _mpf_to_fraction(z.imag)
        box = ComplexBox.from_midpoint(re, im, r0)
        cert = _krawczyk_step(p, dp, box, mid_bits)
        if cert is None:
            # try a tighter initial guess before giving up on this ladder rung
            cert = _krawczyk_step(p, dp, ComplexBox.from_midpoint(re, im, r0 / 64), mid_bits)
        if cert is None:
            return None
        tight = _refine_certified(p, dp, cert, target)
        if tight is None:
            return None
        boxes.append(tight)
    for i in range(n):
        for j in range(i + 1, n):
            if boxes[i].overlaps(boxes[j]):
                return None
    return boxes


def _refine_boxes(p, dp, boxes, target, ctx):
    out = []
    for box in boxes:
        tight = _refine_certified(p, dp, box, target)
        if tight is None:
            tight = _reisolate_inside(p, dp, box, target, ctx)
            if tight is None:
                return None
        out.append(tight)
    return out


def _reisolate_inside(p, dp, box, target, ctx):
    """Fresh isolation, then pick the root living inside `box` (which is
    certified to contain exactly one root); the result is intersected with
    `box` so nesting is preserved."""
    for bits in ctx.ladder():
        dps = max(30, int(bits * 0.302) + 10 + 2 * p.degree)
        proposals = _propose_roots(p, dps)
        if proposals is None:
            continue
        fresh = _certify_proposals(p, dp, proposals, target, bits)
        if fresh is None:
            continue
        hits = [b for b in fresh if b.overlaps(box)]
        if len(hits) != 1:
            continue
        merged = hits[0].intersect(box)
        return merged if merged is not None else hits[0]
    return None


def refine_root_box(
    p: Polynomial,
    box: ComplexBox,
    precision_bits: int,
    ctx: Precision = DEFAULT_PRECISION,
) -> ComplexBox:
    """Refine a certified isolating box of p below 2^-precision_bits."""
    p = p.primitive_int()
    target = Fraction(1, 1 << precision_bits)
    if box.radius <= target:
        return box
    dp = p.derivative()
    tight = _refine_certified(p, dp, box, target)
    if tight is None:
        tight = _reisolate_inside(p, dp, box, target, ctx)
    if tight is None:
        raise ctx.exhausted("box refinement")
    return tight


class AlgebraicNumber:
    """A root of a squarefree integer polynomial, pinned by a certified box."""

    __slots__ = ("poly", "box", "_rational")

    def __init__(self, poly: Polynomial, box: ComplexBox, _rational: Fraction | None = None):
        self.poly = poly
        self.box = box
        self._rational = _rational

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, q) -> "AlgebraicNumber":
        q = Fraction(q)
        poly = Polynomial((-q.numerator, q.denominator)).primitive_int()
        return cls(poly, ComplexBox.point(q), q)

    @classmethod
    def root_in_box(
        cls,
        poly: Polynomial,
        box: ComplexBox,
        ctx: Precision = DEFAULT_PRECISION,
    ) -> "AlgebraicNumber":
        """The unique root of poly inside `box`; raises if the box does not
        isolate exactly one root."""
        poly = squarefree_part(poly).primitive_int()
        if poly.degree <= 0:
            raise ValueError("polynomial has no roots")
        for bits in ctx.ladder():
            candidates = isolate_roots(poly, bits, ctx)
            hits = [b for b in candidates if b.overlaps(box)]
            if not hits:
                raise ValueError("box contains no root of the polynomial")
            if len(hits) == 1:
                return cls(poly, hits[0])
        raise ctx.exhausted("root-in-box selection")

    @classmethod
    def _from_enclosure(
        cls,
        poly: Polynomial,
        shrink: Callable[[int], ComplexBox],
        ctx: Precision = DEFAULT_PRECISION,
    ) -> "AlgebraicNumber":
        """Select the root of poly pinned by a shrinking guaranteed enclosure.

        shrink(bits) must return a box certain to contain the value; as bits
        grow the enclosure must shrink to the point.
        """
        poly = poly.primitive_int()
        for bits in ctx.ladder():
            candidates = isolate_roots(poly, bits, ctx)
            enclosure = shrink(bits)
            hits = [b for b in candidates if b.overlaps(enclosure)]
            if len(hits) == 1:
                return cls(poly, hits[0])
        raise ctx.exhausted("root selection from enclosure")

    # -- views ---------------------------------------------------------------

    def refined(self, precision_bits: int, ctx: Precision = DEFAULT_PRECISION) -> "AlgebraicNumber":
        if self._rational is not None:
            return self
        box = refine_root_box(self.poly, self.box, precision_bits, ctx)
        return AlgebraicNumber(self.poly, box, self._rational)

    @property
    def degree_bound(self) -> int:
        return self.poly.degree

    def as_rational(self, ctx: Precision = DEFAULT_PRECISION) -> Fraction | None:
        """Exact rational value if this number is rational, else None.

        Uses the rational-root theorem on the defining polynomial; the
        divisor enumeration is capped, so irrational is also returned as
        None only when provably no rational root matches this box.
        """
        if self._rational is not None:
            return self._rational
        if self.poly.degree == 1:
            val = -Fraction(self.poly[0], self.poly[1])
            self._rational = val
            return val
        candidates = _rational_root_candidates(self.poly)
        if candidates is None:
            return None
        live = [c for c in candidates if self.poly(c) == 0]
        for cand in live:
            if alg_equals(self, AlgebraicNumber.from_rational(cand), ctx):
                self._rational = cand
                return cand
        return None

    def __repr__(self) -> str:
        if self._rational is not None:
            return f"AlgebraicNumber({self._rational})"
        mid = self.box.midpoint()
        return (
            f"AlgebraicNumber(deg<={self.poly.degree},"
            f" ~{float(mid[0]):.6g}{float(mid[1]):+.6g}i)"
        )


def _divisors_capped(n: int, cap: int = 4096) -> list[int] | None:
    n = abs(n)
    if n == 0:
        return [0]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
            if len(out) > cap:
                return None
        d += 1
    return sorted(set(out))


def _rational_root_candidates(p: Polynomial) -> list[Fraction] | None:
    k, q = p.deflate_z()
    nums = _divisors_capped(int(q[0]))
    dens = _divisors_capped(int(q.lc))
    if nums is None or dens is None:
        return None
    cands = set()
    if k > 0:
        cands.add(Fraction(0))
    for n in nums:
        for d in dens:
            cands.add(Fraction(n, d))
            cands.add(Fraction(-n, d))
    return sorted(cands)


def alg_equals(
    a: AlgebraicNumber,
    b: AlgebraicNumber,
    ctx: Precision = DEFAULT_PRECISION,
) -> bool:
    """Exact equality of two algebraic numbers."""
    if a._rational is not None and b._rational is not None:
        return a._rational == b._rational
    if not a.box.overlaps(b.box):
        return False
    g = poly_gcd(a.poly, b.poly)
    if g.degree <= 0:
        return False
    gi = g.primitive_int()
    if not is_root_of(a, gi, ctx) or not is_root_of(b, gi, ctx):
        return False
    ia = _root_index(a, gi, ctx)
    ib = _root_index(b, gi, ctx)
    return ia == ib


def _root_index(x: AlgebraicNumber, g: Polynomial, ctx: Precision) -> int:
    """Index of x among the isolated roots of g; x must be a root of g."""
    for bits in ctx.ladder():
        boxes = isolate_roots(g, bits, ctx)
        xb = refine_root_box(x.poly, x.box, bits, ctx)
        hits = [i for i, b in enumerate(boxes) if b.overlaps(xb)]
        if len(hits) == 1:
            return hits[0]
    raise ctx.exhausted("root identification")


def is_root_of(
    x: AlgebraicNumber,
    q: Polynomial,
    ctx: Precision = DEFAULT_PRECISION,
) -> bool:
    """Decide whether x is a root of q (q nonzero)."""
    if q.is_zero:
        raise ValueError("membership in the zero polynomial")
    if x._rational is not None:
        return q(x._rational) == 0
    qs = squarefree_part(q) if not is_squarefree(q) else q
    g = poly_gcd(x.poly, qs)
    if g.degree <= 0:
        return False
    gi = g.primitive_int()
    h = x.poly.exact_div(g).primitive_int()
    if h.degree <= 0:
        return True
    # x is a root of exactly one of g, h (x.poly squarefree); separate boxes.
    for bits in ctx.ladder():
        xb = refine_root_box(x.poly, x.box, bits, ctx)
        gboxes = isolate_roots(gi, bits, ctx)
        if not any(b.overlaps(xb) for b in gboxes):
            return False
        hboxes = isolate_roots(h, bits, ctx)
        if not any(b.overlaps(xb) for b in hboxes):
            return True
    raise ctx.exhausted("root membership")


def alg_is_zero(a: AlgebraicNumber, ctx: Precision = DEFAULT_PRECISION) -> bool:
    if a._rational is not None:
        return a._rational == 0
    if a.poly[0] != 0:
        return False
    return is_root_of(a, Polynomial.x(), ctx)


def _nonzero_poly_part(a: AlgebraicNumber, ctx: Precision) -> tuple[Polynomial, ComplexBox]:
    """Defining data of a known-nonzero a with any z factor stripped."""
    k, q = a.poly.deflate_z()
    if k == 0:
        return a.poly, a.box
    box = a.box
    for bits in ctx.ladder():
        if not box.contains_zero():
            return q.primitive_int(), box
        box = refine_root_box(a.poly, box, bits, ctx)
    raise ctx.exhausted("zero separation")


def alg_div(
    a: AlgebraicNumber,
    b: AlgebraicNumber,
    ctx: Precision = DEFAULT_PRECISION,
) -> AlgebraicNumber:
    """Exact quotient a/b of algebraic numbers (b nonzero)."""
    if alg_is_zero(b, ctx):
        raise ZeroDivisionError("division by the zero algebraic number")
    ar, br = a.as_rational(ctx), b.as_rational(ctx)
    if ar is not None and br is not None:
        return AlgebraicNumber.from_rational(ar / br)
    bpoly, bbox = _nonzero_poly_part(b, ctx)
    rpoly = ratio_set_poly(a.poly, bpoly)

    def shrink(bits: int) -> ComplexBox:
        na = refine_root_box(a.poly, a.box, bits, ctx)
        # refinement nests inside bbox, which already excludes zero
        nb = refine_root_box(b.poly, bbox, bits, ctx)
        return na / nb

    return AlgebraicNumber._from_enclosure(rpoly, shrink, ctx)


def alg_pow(
    a: AlgebraicNumber,
    n: int,
    ctx: Precision = DEFAULT_PRECISION,
) -> AlgebraicNumber:
    """Exact integer power a^n (a nonzero when n < 0)."""
    if n == 0:
        return AlgebraicNumber.from_rational(1)
    if n < 0:
        return alg_pow(_alg_invert(a, ctx), -n, ctx)
    ar = a.as_rational(ctx)
    if ar is not None:
        return AlgebraicNumber.from_rational(ar**n)
    # eliminate y from (p(y), z - y^n)
    second = [Polynomial.x()] + [Polynomial.zero()] * (n - 1) + [Polynomial.constant(-1)]
    first = [Polynomial.constant(c) for c in a.poly.coeffs]
    rpoly = squarefree_part(resultant_bivariate(first, second))

    def shrink(bits: int) -> ComplexBox:
        base = refine_root_box(a.poly, a.box, bits, ctx)
        acc = ComplexBox.point(1)
        for _ in range(n):
            acc = acc * base
        return acc

    return AlgebraicNumber._from_enclosure(rpoly, shrink, ctx)


def _alg_invert(a: AlgebraicNumber, ctx: Precision) -> AlgebraicNumber:
    if alg_is_zero(a, ctx):
        raise ZeroDivisionError("inverse of zero")
    ar = a.as_rational(ctx)
    if ar is not None:
        return AlgebraicNumber.from_rational(1 / ar)
    poly, box = _nonzero_poly_part(a, ctx)
    rpoly = poly.reversed_coeffs().primitive_int()

    def shrink(bits: int) -> ComplexBox:
        nb = refine_root_box(a.poly, box, bits, ctx)
        return nb.recip()

    return AlgebraicNumber._from_enclosure(rpoly, shrink, ctx)


def canonical_root(
    poly: Polynomial,
    ctx: Precision = DEFAULT_PRECISION,
) -> AlgebraicNumber:
    """A deterministic distinguished root of poly: maximal real part, ties
    broken towards the upper half plane. For z^k - q this is the principal
    k-th root."""
    poly = squarefree_part(poly).primitive_int()
    if poly.degree <= 0:
        raise ValueError("polynomial has no roots")
    for bits in ctx.ladder():
        boxes = isolate_roots(poly, bits, ctx)
        order = _try_order_boxes(boxes)
        if order is not None:
            return AlgebraicNumber(poly, boxes[order[-1]])
    raise ctx.exhausted("canonical root selection")


def _try_order_boxes(boxes: list[ComplexBox]) -> list[int] | None:
    """Total order on disjoint boxes by (re, im) when every pair separates
    cleanly in one coordinate; None if some pair is still ambiguous."""
    n = len(boxes)
    if n == 1:
        return [0]

    def cmp(i: int, j: int) -> int | None:
        a, b = boxes[i], boxes[j]
        if not a.re.overlaps(b.re):
            return -1 if a.re.hi < b.re.lo else 1
        if not a.im.overlaps(b.im):
            return -1 if a.im.hi < b.im.lo else 1
        return None

    keys = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = cmp(i, j)
            if c is None:
                return None
            keys[(i, j)] = c

    def full(i, j):
        if i == j:
            return 0
        if (i, j) in keys:
            return keys[(i, j)]
        return -keys[(j, i)]

    return sorted(range(n), key=functools.cmp_to_key(full))


def alg_nth_root(q, k: int, ctx: Precision = DEFAULT_PRECISION) -> AlgebraicNumber:
    """Principal k-th root of a nonzero rational q."""
    q = Fraction(q)
    if k < 1:
        raise ValueError("root order must be positive")
    if q == 0:
        return AlgebraicNumber.from_rational(0)
    if k == 1:
        return AlgebraicNumber.from_rational(q)
    poly = Polynomial((-q.numerator,) + (0,) * (k - 1) + (q.denominator,))
    return canonical_root(poly, ctx)


def _totient(m: int) -> int:
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def is_root_of_unity(
    a: AlgebraicNumber,
    ctx: Precision = DEFAULT_PRECISION,
) -> int | None:
    """Order of a as a root of unity, or None.

    The search is bounded: a root of unity of order m has degree phi(m) over
    the rationals, so only m with phi(m) <= deg(defining poly) can occur.
    """
    deg = a.poly.degree
    if deg <= 0:
        return None
    # quick certified modulus screen
    box = a.box
    for bits in ctx.ladder():
        if box.mag_hi < 1 or box.mag_lo > 1:
            return None
        if box.radius < Fraction(1, 64):
            break
        box = refine_root_box(a.poly, box, bits, ctx)
    one = AlgebraicNumber.from_rational(1)
    m = 1
    bound = 2 * deg * deg + 8
    while m <= bound:
        if _totient(m) <= deg:
            if alg_equals(alg_pow(a, m, ctx), one, ctx):
                return m
        m += 1
    return None
