"""Exact LLL lattice reduction over the rationals.

Dimensions here are tiny (a handful of values plus one or two embedding
columns), so the classic algorithm with exact Fraction arithmetic is both
fast enough and free of floating-point soundness questions.  Besides the
reduced basis we expose min_i ||b_i*||^2 from the final Gram-Schmidt pass:
every nonzero lattice vector has squared norm at least that minimum, which
is the certified lower bound the relation-exclusion argument needs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

# Lovasz parameter; 3/4 gives the textbook 2^((n-1)/2) approximation factor.
DELTA = Fraction(3, 4)


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _round_half(x: Fraction) -> int:
    # nearest integer, ties toward +infinity; any tie rule works for LLL
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def _gso(basis):
    """Gram-Schmidt data: coefficients mu[i][j] and squared norms B[i]."""
    n = len(basis)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = []
    norms = []
    for i in range(n):
        v = [Fraction(x) for x in basis[i]]
        for j in range(i):
            if norms[j] == 0:
                raise InputError("basis rows are linearly dependent")
            mu[i][j] = _dot(basis[i], bstar[j]) / norms[j]
            v = [a - mu[i][j] * b for a, b in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_dot(v, v))
    return mu, norms


def lll_reduce(rows):
    """Reduce integer basis rows; returns (reduced_rows, min ||b_i*||^2).

    The second value is a proven lower bound on the squared norm of every
    nonzero vector of the lattice spanned by the rows.
    """
    basis = [[int(x) for x in row] for row in rows]
    n = len(basis)
    if n == 0:
        raise InputError("empty basis")
    mu, norms = _gso(basis)
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = _round_half(mu[k][j])
            if q:
                # row operation leaves b* and the norms unchanged
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[j])]
                for jj in range(j):
                    mu[k][jj] -= q * mu[j][jj]
                mu[k][j] -= q
        if norms[k] >= (DELTA - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            basis[k], basis[k - 1] = basis[k - 1], basis[k]
            mu, norms = _gso(basis)
            k = max(k - 1, 1)
    return basis, min(norms)
