"""Linear differential operators with Laurent polynomial coefficients.

Operators are finite sums  sum_b  p_b(z) * D^b  where D = d/dz and each p_b
is a Laurent polynomial over Q. The module provides the noncommutative
composition algebra (D z = z D + 1), application to truncated power series,
and the coefficient-transform that sends an annihilator of
f = sum a_n z^n / n!  to an annihilator of  g = sum a_n z^n.

The transform rests on two identities, with W = z^2 D + z:

    g-of-derivative:  sum_n a_{n+b} z^n  =  z^-b (g - r_b),
                      r_b = a_0 + a_1 z + ... + a_{b-1} z^{b-1}
    g-of-z-shift:     multiplying f by z corresponds to applying W to g

so p(z) D^b f maps to p(W) applied to z^-b (g - r_b). Summing over the
terms of the annihilator yields M~ g = r~ with M~ in the Laurent-Weyl
algebra and r~ an explicit Laurent polynomial; clearing powers of z and,
when r~ is nonzero, left-composing with D^(deg r + 1) gives a homogeneous
annihilator of g.
"""

from __future__ import annotations

import math
import re as _re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InputError, InsufficientTruncationError, InternalCheckError
from .polynomials import Polynomial
from .rationals import format_rational, parse_rational


class LaurentPoly:
    """Laurent polynomial over Q: coeffs[i] is the coefficient of z^(zmin+i)."""

    __slots__ = ("zmin", "coeffs")

    def __init__(self, zmin: int, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        cs = cs[lead:]
        zmin += lead
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            zmin = 0
        self.zmin = zmin
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(0, ())

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls(0, (c,))

    @classmethod
    def monomial(cls, c, power: int) -> "LaurentPoly":
        return cls(power, (c,))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "LaurentPoly":
        return cls(0, p.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def zmax(self) -> int:
        return self.zmin + len(self.coeffs) - 1

    def __getitem__(self, power: int) -> Fraction:
        i = power - self.zmin
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.zmin + i, c

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.zmin == other.zmin and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.zmin, self.coeffs))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.zmin, other.zmin)
        hi = max(self.zmax, other.zmax)
        out = [Fraction(0)] * (hi - lo + 1)
        for m, c in self.items():
            out[m - lo] += c
        for m, c in other.items():
            out[m - lo] += c
        return LaurentPoly(lo, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.zmin, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if self.is_zero or other.is_zero:
                return LaurentPoly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b != 0:
                        out[i + j] += a * b
            return LaurentPoly(self.zmin + other.zmin, out)
        c = Fraction(other)
        return LaurentPoly(self.zmin, tuple(v * c for v in self.coeffs))

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by z^k."""
        if self.is_zero:
            return self
        return LaurentPoly(self.zmin + k, self.coeffs)

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly(
            self.zmin - 1,
            tuple((self.zmin + i) * c for i, c in enumerate(self.coeffs)),
        )

    def as_polynomial(self) -> Polynomial:
        if self.is_zero:
            return Polynomial.zero()
        if self.zmin < 0:
            raise ValueError("Laurent polynomial has negative powers")
        return Polynomial((0,) * self.zmin + self.coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({_poly_text(self)})"


def _apply_w(h: LaurentPoly) -> LaurentPoly:
    """(z^2 D + z) applied to a Laurent polynomial: z^m -> (m+1) z^(m+1)."""
    return LaurentPoly(
        h.zmin + 1,
        tuple((h.zmin + i + 1) * c for i, c in enumerate(h.coeffs)),
    )


class DiffOperator:
    """sum over b of coeff[b](z) * D^b with Laurent polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, LaurentPoly]):
        clean: dict[int, LaurentPoly] = {}
        for b, lp in terms.items():
            if b < 0:
                raise ValueError("negative derivative order")
            if not lp.is_zero:
                clean[b] = lp
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def from_poly_coeffs(cls, coeffs: Sequence) -> "DiffOperator":
        """Build sum coeffs[b] * D^b from ordinary polynomial coefficients.

        Each entry may be a Polynomial, a LaurentPoly, a coefficient list, or
        a scalar.
        """
        terms = {}
        for b, c in enumerate(coeffs):
            if isinstance(c, LaurentPoly):
                terms[b] = c
            elif isinstance(c, Polynomial):
                terms[b] = LaurentPoly.from_polynomial(c)
            elif isinstance(c, (list, tuple)):
                terms[b] = LaurentPoly(0, c)
            else:
                terms[b] = LaurentPoly.constant(c)
        return cls(terms)

    @classmethod
    def zero(cls) -> "DiffOperator":
        return cls({})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def order(self) -> int:
        return max(self.terms) if self.terms else -1

    def coefficient(self, b: int) -> LaurentPoly:
        return self.terms.get(b, LaurentPoly.zero())

    def leading_coefficient(self) -> LaurentPoly:
        if self.is_zero:
            raise ValueError("zero operator has no leading coefficient")
        return self.terms[self.order]

    @property
    def zmin(self) -> int:
        return min((lp.zmin for lp in self.terms.values()), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        out = dict(self.terms)
        for b, lp in other.terms.items():
            out[b] = out.get(b, LaurentPoly.zero()) + lp
        return DiffOperator(out)

    def __neg__(self) -> "DiffOperator":
        return DiffOperator({b: -lp for b, lp in self.terms.items()})

    def __sub__(self, other: "DiffOperator") -> "DiffOperator":
        return self + (-other)

    def scale(self, c) -> "DiffOperator":
        c = Fraction(c)
        if c == 0:
            return DiffOperator.zero()
        return DiffOperator({b: lp * c for b, lp in self.terms.items()})

    def shift_z(self, k: int) -> "DiffOperator":
        """Left-multiply by z^k (as a function)."""
        return DiffOperator({b: lp.shift(k) for b, lp in self.terms.items()})

    def primitive_normalized(self) -> "DiffOperator":
        """Divide by the positive rational content; sign is preserved."""
        if self.is_zero:
            return self
        nums: list[int] = []
        dens: list[int] = []
        for lp in self.terms.values():
            for _, c in lp.items():
                nums.append(abs(c.numerator))
                dens.append(c.denominator)
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        l = 1
        for d in dens:
            l = l * d // math.gcd(l, d)
        content = Fraction(g, l)
        if content in (0, 1):
            return self
        return self.scale(1 / content)

    def __repr__(self) -> str:
        return f"DiffOperator({op_to_text(self)})"


def op_compose(left: DiffOperator, right: DiffOperator) -> DiffOperator:
    """Operator product left∘right, using D^b z^c = sum_k C(b,k) ff(c,k) z^(c-k) D^(b-k)."""
    acc: dict[int, dict[int, Fraction]] = {}
    for i, la in left.terms.items():
        for a, ca in la.items():
            for j, lb in right.terms.items():
                for c, cb in lb.items():
                    base = ca * cb
                    ff = Fraction(1)
                    for k in range(0, i + 1):
                        if k > 0:
                            ff *= Fraction(c - (k - 1))
                            if ff == 0:
                                break
                        coeff = base * math.comb(i, k) * ff
                        order = i - k + j
                        zpow = a + c - k
                        row = acc.setdefault(order, {})
                        row[zpow] = row.get(zpow, Fraction(0)) + coeff
    return _from_sparse(acc)


def _from_sparse(acc: Mapping[int, Mapping[int, Fraction]]) -> DiffOperator:
    terms = {}
    for order, row in acc.items():
        live = {p: c for p, c in row.items() if c != 0}
        if not live:
            continue
        lo = min(live)
        hi = max(live)
        coeffs = [live.get(p, Fraction(0)) for p in range(lo, hi + 1)]
        terms[order] = LaurentPoly(lo, coeffs)
    return DiffOperator(terms)


def op_apply(op: DiffOperator, series: Sequence, keep: int) -> dict[int, Fraction]:
    """Apply op to the ordinary power series sum series[t] z^t.

    Returns the coefficients of the image for all exponents below `keep`
    (exponents may be negative for Laurent coefficients). Raises
    InsufficientTruncationError when the input prefix is too short to
    determine them all.
    """
    series = [Fraction(s) for s in series]
    out: dict[int, Fraction] = {}
    lowest = min((lp.zmin - b for b, lp in op.terms.items()), default=0)
    for s in range(lowest, keep):
        out[s] = Fraction(0)
    for b, lp in op.terms.items():
        for a, c in lp.items():
            # z^a D^b maps z^t to ff(t,b) z^(t-b+a)
            for t in range(b, len(series) + 1):
                e = t - b + a
                if e >= keep:
                    break
                if t >= len(series):
                    raise InsufficientTruncationError(
                        f"need series coefficient at index {t}"
                    )
                ff = 1
                for q in range(b):
                    ff *= t - q
                out[e] = out.get(e, Fraction(0)) + c * ff * series[t]
    # exponents >= keep were never fully accumulated; drop any strays
    return {e: v for e, v in out.items() if e < keep}


@dataclass(frozen=True)
class InhomogeneousResult:
    """Operator and polynomial remainder with operator(g) = remainder."""

    operator: DiffOperator
    remainder: Polynomial


def _validate_transform_input(op: DiffOperator, initial_values: Sequence) -> list[Fraction]:
    if op.is_zero:
        raise InputError("cannot transform the zero operator")
    if op.zmin < 0:
        raise InputError("transform input must have polynomial coefficients")
    order = op.order
    vals = [Fraction(v) for v in initial_values]
    if len(vals) < order:
        raise InputError(
            f"operator of order {order} needs {order} initial coefficients, got {len(vals)}"
        )
    return vals[:order]


def psi_transform_with_remainder(
    op: DiffOperator, initial_values: Sequence
) -> InhomogeneousResult:
    """Inhomogeneous annihilator of g = sum a_n z^n given one of f = sum a_n z^n/n!.

    initial_values are a_0 .. a_(order-1), i.e. f(0), f'(0), ...
    Returns (M, r) with M g = r, powers of z already cleared, content
    normalized by a single positive rational.
    """
    a = _validate_transform_input(op, initial_values)

    acc = DiffOperator.zero()
    rem = LaurentPoly.zero()
    for b, p_b in op.terms.items():
        r_b = LaurentPoly(0, a[:b])
        # ladder of W^a ∘ z^(-b) as an operator, and W^a (r_b z^(-b)) as a value
        ladder_op = DiffOperator({0: LaurentPoly.monomial(1, -b)})
        ladder_val = r_b.shift(-b)
        amax = p_b.zmax
        for power in range(0, amax + 1):
            c = p_b[power]
            if c != 0:
                acc = acc + ladder_op.scale(c)
                rem = rem + ladder_val * c
            if power < amax:
                ladder_op = _compose_w(ladder_op)
                ladder_val = _apply_w(ladder_val)

    if acc.is_zero:
        raise InternalCheckError("transform produced the zero operator")

    clear = max(0, -acc.zmin, -(rem.zmin if not rem.is_zero else 0))
    acc = acc.shift_z(clear)
    rem = rem.shift(clear)
    remainder = rem.as_polynomial()

    # one positive scalar for the pair, so the identity M g = r is preserved
    content = _pair_content(acc, remainder)
    if content not in (0, 1):
        acc = acc.scale(1 / content)
        remainder = remainder * (1 / content)
    return InhomogeneousResult(acc, remainder)


def _compose_w(x: DiffOperator) -> DiffOperator:
    """W∘X for W = z^2 D + z, computed termwise.

    z^2 D (L D^o) = z^2 L' D^o + z^2 L D^(o+1), plus z L D^o.
    """
    out: dict[int, LaurentPoly] = {}

    def add(order: int, lp: LaurentPoly):
        if lp.is_zero:
            return
        out[order] = out.get(order, LaurentPoly.zero()) + lp

    for o, lp in x.terms.items():
        add(o, lp.derivative().shift(2) + lp.shift(1))
        add(o + 1, lp.shift(2))
    return DiffOperator(out)


def _pair_content(op: DiffOperator, rem: Polynomial) -> Fraction:
    nums: list[int] = []
    dens: list[int] = []
    for lp in op.terms.values():
        for _, c in lp.items():
            nums.append(abs(c.numerator))
            dens.append(c.denominator)
    for c in rem.coeffs:
        if c != 0:
            nums.append(abs(c.numerator))
            dens.append(c.denominator)
    g = 0
    for n in nums:
        g = math.gcd(g, n)
    l = 1
    for d in dens:
        l = l * d // math.gcd(l, d)
    return Fraction(g, l)


def psi_transform(op: DiffOperator, initial_values: Sequence) -> DiffOperator:
    """Homogeneous annihilator of g = sum a_n z^n from one of sum a_n z^n/n!."""
    pair = psi_transform_with_remainder(op, initial_values)
    result = pair.operator
    if not pair.remainder.is_zero:
        d = pair.remainder.degree
        killer = DiffOperator({d + 1: LaurentPoly.constant(1)})
        result = op_compose(killer, result)
    if result.is_zero:
        raise InternalCheckError("homogenized transform collapsed to zero")
    return result.primitive_normalized()


@dataclass(frozen=True)
class Recurrence:
    """sum_j P_j(t) c_{t+j} = 0 for all t >= 0, coefficients of z^t series."""

    shifts: tuple[tuple[int, Polynomial], ...]

    def bands(self) -> dict[int, Polynomial]:
        return dict(self.shifts)

    @property
    def max_shift(self) -> int:
        return max(j for j, _ in self.shifts)

    @property
    def min_shift(self) -> int:
        return min(j for j, _ in self.shifts)


def recurrence_from_ode(op: DiffOperator) -> Recurrence:
    """Coefficient recurrence of the solution series of an ordinary operator.

    For f = sum c_t z^t:  z^a D^b maps the z^s coefficient to
    ff(s+b-a, b) c_{s+b-a}, so grouping by j = b - a gives polynomials
    P_j(t) with sum_j P_j(t) c_{t+j} = 0 (t >= 0, c at negative index 0).
    """
    if op.is_zero:
        raise InputError("zero operator has no recurrence")
    if op.zmin < 0:
        raise InputError("recurrence needs polynomial coefficients")
    bands: dict[int, Polynomial] = {}
    t = Polynomial.x()
    for b, lp in op.terms.items():
        for a, c in lp.items():
            j = b - a
            ff = Polynomial.one()
            for i in range(b):
                ff = ff * (t + Polynomial.constant(j - i))
            bands[j] = bands.get(j, Polynomial.zero()) + ff * c
    live = sorted((j, p) for j, p in bands.items() if not p.is_zero)
    if not live:
        raise InternalCheckError("operator induced an identically zero recurrence")
    return Recurrence(tuple(live))


# -- serialization ------------------------------------------------------------


def laurent_to_json(lp: LaurentPoly) -> dict:
    return {"zmin": lp.zmin, "coeffs": [format_rational(c) for c in lp.coeffs]}


def laurent_from_json(obj: dict) -> LaurentPoly:
    try:
        zmin = int(obj["zmin"])
        coeffs = [parse_rational(c) for c in obj["coeffs"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad Laurent polynomial object: {exc}") from exc
    return LaurentPoly(zmin, coeffs)


def op_to_json(op: DiffOperator) -> dict:
    return {
        "terms": [
            {"dorder": b, "poly": laurent_to_json(lp)} for b, lp in op.terms.items()
        ]
    }


def op_from_json(obj: dict) -> DiffOperator:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise InputError("operator object needs a 'terms' list")
    terms: dict[int, LaurentPoly] = {}
    if not isinstance(obj["terms"], list):
        raise InputError("'terms' must be a list")
    for entry in obj["terms"]:
        if not isinstance(entry, dict) or "dorder" not in entry or "poly" not in entry:
            raise InputError("each term needs 'dorder' and 'poly'")
        b = entry["dorder"]
        if not isinstance(b, int) or b < 0:
            raise InputError("'dorder' must be a nonnegative integer")
        lp = laurent_from_json(entry["poly"])
        if b in terms:
            raise InputError(f"duplicate derivative order {b}")
        terms[b] = lp
    return DiffOperator(terms)


def _poly_text(lp: LaurentPoly) -> str:
    if lp.is_zero:
        return "0"
    parts = []
    for m, c in lp.items():
        if m == 0:
            body = format_rational(abs(c))
        else:
            zpart = "z" if m == 1 else f"z^{m}"
            if abs(c) == 1:
                body = zpart
            else:
                body = f"{format_rational(abs(c))}*{zpart}"
        parts.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(parts)
    if text.startswith("+ "):
        text = text[2:]
    elif text.startswith("- "):
        text = "-" + text[2:]
    return text


def op_to_text(op: DiffOperator) -> str:
    """Readable one-line form, e.g. (1 - z)*∂^1 + (-1)."""
    if op.is_zero:
        return "0"
    parts = []
    for b in sorted(op.terms, reverse=True):
        poly = _poly_text(op.terms[b])
        if b == 0:
            parts.append(f"({poly})")
        else:
            parts.append(f"({poly})*∂^{b}")
    return " + ".join(parts)


_TERM_RE = _re.compile(r"^\((?P<poly>[^()]*)\)(?:\*(?:∂|D)\^(?P<ord>\d+))?$")
_MONO_RE = _re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?\*?(?P<z>z(?:\^(?P<exp>-?\d+))?)?$"
)


def _split_signed_monomials(text: str) -> list[str]:
    """Split at +/- signs that are not exponent signs (not preceded by ^)."""
    chunks = []
    start = 0
    for i in range(1, len(text)):
        if text[i] in "+-" and text[i - 1] != "^":
            chunks.append(text[start:i])
            start = i
    chunks.append(text[start:])
    return chunks


def _parse_laurent_text(text: str) -> LaurentPoly:
    text = text.strip().replace(" ", "")
    if not text:
        raise InputError("empty polynomial")
    if text == "0":
        return LaurentPoly.zero()
    result = LaurentPoly.zero()
    for chunk in _split_signed_monomials(text):
        sign = Fraction(1)
        if chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = Fraction(-1)
            chunk = chunk[1:]
        m = _MONO_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("z") is None):
            raise InputError(f"cannot parse monomial '{chunk}'")
        coef = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("z") is None:
            power = 0
        elif m.group("exp") is None:
            power = 1
        else:
            power = int(m.group("exp"))
        result = result + LaurentPoly.monomial(sign * coef, power)
    return result


def op_from_text(text: str) -> DiffOperator:
    """Parse the op_to_text format back into an operator."""
    text = text.strip()
    if text == "0":
        return DiffOperator.zero()
    terms: dict[int, LaurentPoly] = {}
    depth = 0
    start = 0
    pieces = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and text.startswith(" + ", i):
            pieces.append(text[start:i])
            start = i + 3
            i += 2
        i += 1
    pieces.append(text[start:])
    for piece in pieces:
        m = _TERM_RE.match(piece.strip())
        if not m:
            raise InputError(f"cannot parse operator term '{piece.strip()}'")
        b = int(m.group("ord")) if m.group("ord") else 0
        lp = _parse_laurent_text(m.group("poly"))
        if b in terms:
            terms[b] = terms[b] + lp
        else:
            terms[b] = lp
    return DiffOperator(terms)
