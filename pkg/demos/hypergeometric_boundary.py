"""
The exact boundary of the power condition for hypergeometric values
===================================================================
"""

from fractions import Fraction

from elindep.criterion import certify_hypergeometric
from elindep.efunction import HypergeometricParams

# Two series from the power family: k = 1 (exponential type) and k = 2
# (Bessel type), both with unit scale. The points below are arguments of
# the underlying series F(x) = sum x^n / (n!)^k; the exact machinery works
# with the E-function F(z^k) evaluated at k-th roots of those points.
k1 = HypergeometricParams((), (Fraction(1),), Fraction(1))
k2 = HypergeometricParams((), (Fraction(1), Fraction(1)), Fraction(1))

# For unequal powers k_i != k_j the pair test is a single rational
# inequality: alpha_i^{k_j} / alpha_j^{k_i} != (k_j / k_i)^{k_i k_j}.
# With k = (1, 2) the forbidden value is 2^2 = 4.
for pts in ([1, 1], [2, 1], [8, 2]):
    cert = certify_hypergeometric([k1, k2], pts)
    power = next(h for h in cert.hypotheses if h.anchor == "power-ratio-condition")
    print(f"points {pts}: {cert.verdict:22s} power condition {power.outcome}")

# [2, 1] sits exactly on the boundary (2^2 / 1 = 4) and is refused;
# [8, 2] stays clear of it (8^2 / 2 = 32) and is certified.
assert certify_hypergeometric([k1, k2], [2, 1]).verdict == "Inconclusive"
assert certify_hypergeometric([k1, k2], [8, 2]).verdict == "CertifiedIndependent"

# Equal powers never consult the power condition: distinct nonzero
# arguments suffice. Note this is distinctness of the arguments of F, not
# of the E-function. F(2) and F(-2) are fine; the even-function trap
# (think J0(2) = J0(-2)) would be two copies of the *same* argument, and
# the certifier refuses that as a coincident pair.
print()
print("equal k=2 at arguments 2, -2:",
      certify_hypergeometric([k2, k2], [2, -2]).verdict)
print("equal k=2 at arguments 4, 4: ",
      certify_hypergeometric([k2, k2], [4, 4]).verdict)
