"""Root-set computation for the factorial-removed series and ratio tests."""

import random
from fractions import Fraction

import pytest

from elindep.algebraic import AlgebraicNumber, alg_nth_root, canonical_root
from elindep.efunction import (
    EFunction,
    HypergeometricParams,
    ef_bessel_j0,
    ef_exp,
    ef_hypergeometric,
    ef_scale,
    ef_sin_integral,
)
from elindep.errors import InputError
from elindep.polynomials import Polynomial
from elindep.singularities import (
    CLOSED_FORM,
    SUPERSET,
    RootSet,
    hypergeometric_singularities,
    ratio_condition,
    rootset_scale,
    rootsets_disjoint,
    singularity_superset,
)


def P(*coeffs):
    return Polynomial(coeffs)


class TestRootSet:
    def test_normalization(self):
        # z^2 (z-1)^2 (2z-4) -> squarefree, primitive, z stripped
        p = P(0, 0, 1) * P(1, -1) ** 2 * P(-4, 2)
        rs = RootSet.from_poly(p)
        assert rs.poly == P(2, -3, 1) or rs.poly == P(-2, 3, -1)
        assert not rs.includes_zero
        rs0 = RootSet.from_poly(p, keep_zero=True)
        assert rs0.includes_zero
        assert rs0.count_bound == 3

    def test_empty(self):
        rs = RootSet.from_poly(P(5))
        assert rs.is_empty
        assert rs.count_bound == 0
        with pytest.raises(InputError):
            RootSet.from_poly(Polynomial.zero())

    def test_scaling_round_trip(self):
        rs = RootSet.from_poly(P(-2, 1) * P(-3, 1))  # {2, 3}
        half = rootset_scale(rs, 2)  # {1, 3/2}
        assert not rootsets_disjoint(half, RootSet.from_poly(P(-1, 1)))
        back = rootset_scale(half, Fraction(1, 2))
        assert back.poly.monic() == rs.poly.monic()
        with pytest.raises(InputError):
            rootset_scale(rs, 0)

    def test_json_round_trip(self):
        rs = RootSet.from_poly(P(0, -2, 1), provenance=SUPERSET, keep_zero=True)
        again = RootSet.from_json(rs.to_json())
        assert again == rs
        with pytest.raises(InputError):
            RootSet.from_json({"poly": [0], "includes_zero": False, "provenance": CLOSED_FORM})


class TestDisjointness:
    def test_shared_root_detected(self):
        a = RootSet.from_poly(P(-1, 1) * P(-2, 1))  # {1, 2}
        b = RootSet.from_poly(P(-2, 1) * P(-5, 1))  # {2, 5}
        assert not rootsets_disjoint(a, b)

    def test_disjoint(self):
        a = RootSet.from_poly(P(-1, 1))
        b = RootSet.from_poly(P(-2, 1))
        assert rootsets_disjoint(a, b)

    def test_irrational_shared_root(self):
        a = RootSet.from_poly(P(-2, 0, 1))  # +-sqrt2
        b = RootSet.from_poly(P(-2, 0, 1) * P(-7, 1))
        assert not rootsets_disjoint(a, b)

    def test_zero_only_collides_with_zero(self):
        a = RootSet.from_poly(P(0, 1), keep_zero=True)
        b = RootSet.from_poly(P(0, 1) * P(-1, 1), keep_zero=True)
        assert not rootsets_disjoint(a, b)
        c = RootSet.from_poly(P(-1, 1))
        assert rootsets_disjoint(a, c)


class TestClosedForms:
    def test_exp(self):
        rs = singularity_superset(ef_exp())
        assert rs.is_exact
        assert rs.poly.monic() == P(-1, 1)  # the single point 1

    def test_bessel(self):
        rs = singularity_superset(ef_bessel_j0())
        assert rs.is_exact
        # transformed series is 1/sqrt(1+z^2): singular at +-i
        assert rs.poly.primitive_int() in (P(1, 0, 1), P(-1, 0, -1))

    def test_sin_integral(self):
        rs = singularity_superset(ef_sin_integral())
        assert rs.is_exact
        # transformed series is arctan(z): branch points at +-i
        assert rs.poly.primitive_int() in (P(1, 0, 1), P(-1, 0, -1))

    def test_scaled_exp(self):
        f = ef_scale(ef_exp(), Fraction(3, 2))
        rs = singularity_superset(f)
        # exp(3z/2): singular point of the transformed series at 2/3
        assert rs.poly.monic() == P(Fraction(-2, 3), 1)


class TestSuperset:
    def test_rebuilt_exp_gives_superset_containing_true_point(self):
        # same ODE as exp but declared without the closed form
        f = EFunction(ef_exp().annihilator, [1], name="e2", coeff_bound=1)
        rs = singularity_superset(f)
        assert rs.provenance == SUPERSET
        # true singular point 1 must divide the superset polynomial
        from elindep.polynomials import poly_gcd

        assert poly_gcd(rs.poly, P(-1, 1)).degree == 1

    def test_superset_cached(self):
        f = EFunction(ef_exp().annihilator, [1], name="e3", coeff_bound=1)
        assert singularity_superset(f) is singularity_superset(f)


class TestHypergeometricLocus:
    def test_k1(self):
        params = HypergeometricParams((), (Fraction(1),), Fraction(1))
        rs = hypergeometric_singularities(params)
        assert rs.poly.monic() == P(-1, 1)

    def test_k2_bessel(self):
        params = HypergeometricParams((), (Fraction(1), Fraction(1)), Fraction(-1, 4))
        rs = hypergeometric_singularities(params)
        # -1/4 * (2z)^2 - 1 = -(z^2+1): singular points +-i
        assert rs.poly.primitive_int() in (P(1, 0, 1), P(-1, 0, -1))

    def test_matches_efunction_route(self):
        # the closed form carried by the constructed function agrees
        for up, low, sc in (
            ([], [1], 1),
            ([], [1, 1], Fraction(-1, 4)),
            ([Fraction(1, 2)], [Fraction(1, 3), 1, 1], 2),
        ):
            f = ef_hypergeometric(up, low, sc)
            params = HypergeometricParams(
                tuple(Fraction(a) for a in up),
                tuple(Fraction(b) for b in low),
                Fraction(sc),
            )
            a = singularity_superset(f)
            b = hypergeometric_singularities(params)
            assert a.poly.monic() == b.poly.monic()

    def test_scale_moves_roots(self):
        params = HypergeometricParams((), (Fraction(1),), Fraction(5))
        rs = hypergeometric_singularities(params)
        # 5z - 1
        assert rs.poly.monic() == P(Fraction(-1, 5), 1)


class TestRatioCondition:
    def test_same_function_same_point_collides(self):
        rs = RootSet.from_poly(P(-1, 1))
        assert not ratio_condition(rs, rs, 1, 1)

    def test_exp_at_distinct_rationals(self):
        rs = RootSet.from_poly(P(-1, 1))
        assert ratio_condition(rs, rs, 1, 2)
        assert ratio_condition(rs, rs, Fraction(2, 3), Fraction(-2, 3))

    def test_symmetry(self):
        rng = random.Random(13)
        for _ in range(20):
            pa = P(rng.randrange(-5, 0), 1) * P(rng.randrange(1, 6), 1)
            pb = P(rng.randrange(-5, 0), 1)
            a, b = RootSet.from_poly(pa), RootSet.from_poly(pb)
            x = Fraction(rng.randrange(1, 9), rng.randrange(1, 5))
            y = -Fraction(rng.randrange(1, 9), rng.randrange(1, 5))
            assert ratio_condition(a, b, x, y) == ratio_condition(b, a, y, x)

    def test_collision_witness(self):
        # sets {1} and {2} at points 1 and 2: 1/1 == 2/2 collides
        a = RootSet.from_poly(P(-1, 1))
        b = RootSet.from_poly(P(-2, 1))
        assert not ratio_condition(a, b, 1, 2)
        assert ratio_condition(a, b, 1, 3)

    def test_irrational_point(self):
        rs = RootSet.from_poly(P(-1, 1))
        s = alg_nth_root(2, 2)
        # 1/1 vs 1/sqrt2 differ
        assert ratio_condition(rs, rs, AlgebraicNumber.from_rational(1), s)
        # sqrt2 vs sqrt2 collide
        assert not ratio_condition(rs, rs, s, s)

    def test_irrational_collision_cross(self):
        # sets {1} and {sqrt 2 roots}: at points 1 and sqrt2, the scaled
        # sets share 1 = sqrt2/sqrt2
        a = RootSet.from_poly(P(-1, 1))
        b = RootSet.from_poly(P(-2, 0, 1))
        s = alg_nth_root(2, 2)
        assert not ratio_condition(a, b, 1, s)

    def test_zero_point_rejected(self):
        rs = RootSet.from_poly(P(-1, 1))
        with pytest.raises(InputError):
            ratio_condition(rs, rs, 0, 1)

    def test_empty_set_always_disjoint(self):
        empty = RootSet.from_poly(P(1))
        rs = RootSet.from_poly(P(-1, 1))
        assert ratio_condition(empty, rs, 5, 5)
        assert ratio_condition(empty, empty, 1, 1)

    def test_root_of_unity_points(self):
        # k=2 hypergeometric sets at points i and -i: quotient -1 hits the
        # ratio -1 of the symmetric set {i/2, -i/2}
        rs = RootSet.from_poly(P(1, 0, 4))
        i_pt = canonical_root(P(1, 0, 1))
        minus_i = alg_nth_root(-1, 2)  # principal sqrt of -1 is i as well
        assert not ratio_condition(rs, rs, i_pt, i_pt)
