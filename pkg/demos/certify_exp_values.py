"""
Certifying that e, e^2 and sqrt(e) share no algebraic relation
==============================================================

Walks the full pipeline once: pick a function, pick points, get a
certificate, then try (and fail) to break it numerically.
"""

from fractions import Fraction

from elindep.criterion import certify_single
from elindep.efunction import ef_exp
from elindep.numeric import falsify

# exp(z) evaluated at 1, 2 and 1/2 gives e, e^2, sqrt(e).
cert = certify_single(ef_exp(), [1, 2, Fraction(1, 2)])
print(cert.to_text())

# The verdict rests on exact arithmetic only: the singular point of the
# associated power series is 1, and the pairwise ratios of the evaluation
# points never map one copy of it onto another.
assert cert.verdict == "CertifiedIndependent"

# Sanity-check the certificate from the other side: search for a small
# integer relation among 1, e, e^2, sqrt(e) at 40 digits. The search must
# come back empty, with a lattice bound that rules out any relation with
# coefficients up to 10^4.
report = falsify(cert, digits=40, coeff_bound=10**4)
print()
print(f"relation found: {report.found}")
print(f"relations with coefficients <= 10^4 excluded: {report.excluded}")
assert not report.found and report.excluded
