"""Shared helpers for the test suite: random instances and slow oracles."""

from fractions import Fraction

import mpmath

from elindep.diffop import DiffOperator
from elindep.efunction import EFunction
from elindep.errors import (
    InputError,
    InsufficientTruncationError,
    UnsupportedOperationError,
)
from elindep.polynomials import Polynomial


def random_fraction(rng, num_max=9, den_max=5, allow_zero=True):
    while True:
        q = Fraction(rng.randint(-num_max, num_max), rng.randint(1, den_max))
        if allow_zero or q != 0:
            return q


def random_polynomial(rng, max_degree, allow_zero=False):
    deg = rng.randint(0, max_degree)
    coeffs = [random_fraction(rng) for _ in range(deg + 1)]
    p = Polynomial(coeffs)
    if not allow_zero and p.is_zero:
        return random_polynomial(rng, max_degree, allow_zero)
    return p


def random_operator(rng, max_order=3, max_degree=3) -> DiffOperator:
    """Random ODE operator with a leading coefficient nonzero at 0."""
    order = rng.randint(1, max_order)
    coeffs = []
    for b in range(order):
        coeffs.append(
            random_polynomial(rng, max_degree)
            if rng.random() < 0.85
            else Polynomial([0])
        )
    lead = random_polynomial(rng, max_degree)
    if lead(Fraction(0)) == 0:
        lead = lead + Polynomial([rng.choice([1, -1, 2])])
    coeffs.append(lead)
    return DiffOperator.from_poly_coeffs(coeffs)


def random_efunction(rng, max_order=3, max_degree=3, check_terms=90) -> EFunction:
    """Random annihilator plus consistent seeds, resampled until usable."""
    while True:
        op = random_operator(rng, max_order, max_degree)
        seeds = [random_fraction(rng) for _ in range(op.order)]
        if all(s == 0 for s in seeds):
            seeds[0] = Fraction(1)
        try:
            f = EFunction(op, seeds)
            f.coefficient(check_terms)
        except (InputError, UnsupportedOperationError, InsufficientTruncationError):
            continue
        return f


def mp_direct_sum(coeff, x, terms, dps=150):
    """Independent series summation: sum coeff(n) x^n / n! at high precision.

    Deliberately avoids the package's evaluator; used as an oracle.
    """
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        xv = mpmath.mpf(x.numerator) / x.denominator
        power = mpmath.mpf(1)
        fact = mpmath.mpf(1)
        for n in range(terms):
            if n:
                power *= xv
                fact *= n
            a = coeff(n)
            if a:
                total += mpmath.mpf(a.numerator) / a.denominator * power / fact
        return total
