"""Finite singularity sets of the factorial-removed series, as root sets.

The series g = sum a_n z^n attached to an E-function has positive radius of
convergence and continues along paths avoiding finitely many points. Those
points are always roots of the leading coefficient of an annihilator of g,
which gives a computable superset; for the curated function families the
exact set is known in closed form.

A RootSet stores a primitive squarefree integer polynomial not divisible
by z (the origin is always a regular point of g) plus an includes_zero
flag kept for generality, and remembers whether it is exact
("closed_form") or only an upper bound ("superset").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import (
    DEFAULT_PRECISION,
    AlgebraicNumber,
    Precision,
    alg_div,
    alg_is_zero,
    is_root_of,
)
from .diffop import DiffOperator, psi_transform
from .efunction import EFunction
from .errors import InputError
from .polynomials import Polynomial, poly_gcd, ratio_set_poly, squarefree_part

CLOSED_FORM = "closed_form"
SUPERSET = "superset"


@dataclass(frozen=True)
class RootSet:
    """Roots of a squarefree primitive integer polynomial, z stripped."""

    poly: Polynomial
    includes_zero: bool = False
    provenance: str = CLOSED_FORM

    def __post_init__(self):
        if self.provenance not in (CLOSED_FORM, SUPERSET):
            raise InputError(f"unknown provenance '{self.provenance}'")

    @classmethod
    def from_poly(
        cls, p: Polynomial, provenance: str = CLOSED_FORM, keep_zero: bool = False
    ) -> "RootSet":
        """Normalize an arbitrary polynomial: squarefree, primitive, z removed."""
        if p.is_zero:
            raise InputError("root set of the zero polynomial is not finite")
        zmult, stripped = squarefree_part(p).deflate_z()
        if stripped.degree < 0 or stripped.is_zero:
            stripped = Polynomial.one()
        return cls(
            stripped.primitive_int(),
            includes_zero=keep_zero and zmult > 0,
            provenance=provenance,
        )

    @property
    def is_empty(self) -> bool:
        return self.poly.degree <= 0 and not self.includes_zero

    @property
    def count_bound(self) -> int:
        return max(0, self.poly.degree) + (1 if self.includes_zero else 0)

    @property
    def is_exact(self) -> bool:
        return self.provenance == CLOSED_FORM

    def scaled_by(self, factor) -> "RootSet":
        """Root set {r / factor} for a nonzero rational factor.

        (If the singular points of g(z) are r, those of g(factor*z) are
        r/factor.) Irrational factors do not give Galois-stable sets and
        cannot be represented; use ratio tests instead.
        """
        factor = Fraction(factor)
        if factor == 0:
            raise InputError("scaling factor must be nonzero")
        return RootSet(
            self.poly.compose_scale(factor).primitive_int(),
            includes_zero=self.includes_zero,
            provenance=self.provenance,
        )

    def to_json(self) -> dict:
        return {
            "poly": [int(c) for c in self.poly.int_coeffs()],
            "includes_zero": self.includes_zero,
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RootSet":
        try:
            coeffs = [int(c) for c in obj["poly"]]
            inc = bool(obj["includes_zero"])
            prov = str(obj["provenance"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad root set object: {exc}") from exc
        p = Polynomial(coeffs)
        if p.is_zero:
            raise InputError("root set polynomial must be nonzero")
        base = cls.from_poly(p, provenance=prov, keep_zero=True)
        # the stored poly has z already stripped, so the flag is authoritative
        return cls(base.poly, includes_zero=inc or base.includes_zero, provenance=prov)


def rootset_scale(rs: RootSet, factor) -> RootSet:
    return rs.scaled_by(factor)


def rootsets_disjoint(a: RootSet, b: RootSet) -> bool:
    """Exact disjointness of the two root sets."""
    if a.includes_zero and b.includes_zero:
        return False
    return poly_gcd(a.poly, b.poly).degree <= 0


def singularity_superset(
    f: EFunction, ctx: Precision = DEFAULT_PRECISION
) -> RootSet:
    """Singular support of the factorial-removed series of f.

    Closed-form when the function carries it; otherwise the roots of the
    leading coefficient of the transformed annihilator, which contain every
    true singularity but may also contain apparent ones.
    """
    if f.psi_singularity_poly is not None:
        return RootSet.from_poly(f.psi_singularity_poly, provenance=CLOSED_FORM)
    cached = getattr(f, "_singularity_cache", None)
    if cached is not None:
        return cached
    op = psi_transform(f.annihilator, f.coefficients(f.order))
    lead = op.leading_coefficient().as_polynomial()
    result = RootSet.from_poly(lead, provenance=SUPERSET)
    f._singularity_cache = result
    return result


def hypergeometric_singularities(params) -> RootSet:
    """Exact set for the z-form series: roots of scale * (k z)^k - 1."""
    k = params.k
    poly = Polynomial(
        (-1,) + (0,) * (k - 1) + (params.scale * Fraction(k) ** k,)
    )
    return RootSet.from_poly(poly, provenance=CLOSED_FORM)


def _coerce_point(alpha) -> AlgebraicNumber:
    if isinstance(alpha, AlgebraicNumber):
        return alpha
    return AlgebraicNumber.from_rational(Fraction(alpha))


def ratio_condition(
    set_i: RootSet,
    set_j: RootSet,
    alpha_i,
    alpha_j,
    ctx: Precision = DEFAULT_PRECISION,
) -> bool:
    """True when the scaled sets {r/alpha_i : r in set_i} and
    {s/alpha_j : s in set_j} are disjoint.

    A collision r/alpha_i = s/alpha_j means alpha_i/alpha_j = r/s, so it is
    decided exactly by testing alpha_i/alpha_j against the polynomial whose
    roots are the pairwise ratios; no irrational root set is ever formed.
    """
    ai = _coerce_point(alpha_i)
    aj = _coerce_point(alpha_j)
    if alg_is_zero(ai, ctx) or alg_is_zero(aj, ctx):
        raise InputError("ratio condition needs nonzero points")
    if set_i.is_empty or set_j.is_empty:
        return True
    if set_i.includes_zero and set_j.includes_zero:
        return False
    ratios = ratio_set_poly(set_i.poly, set_j.poly)
    if ratios.degree <= 0:
        return True
    quotient = alg_div(ai, aj, ctx)
    return not is_root_of(quotient, ratios, ctx)
