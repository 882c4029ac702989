"""
A function built to fool the certifier, and the two ways it is caught
=====================================================================

Distinct evaluation points are not enough for independence. Given any
E-function f and points alpha_1, ..., alpha_n, one can interpolate scaled
copies of f into a new E-function g that takes the SAME value at every
alpha_i. The values g(alpha_1), ..., g(alpha_n) are then trivially
dependent, yet the points are distinct and g is a perfectly ordinary
E-function. This is why the certifier insists on conditions about
singularity sets rather than about points alone.
"""

from elindep.criterion import certify_multi
from elindep.efunction import ef_exp, ef_lagrange_combo
from elindep.numeric import falsify
from elindep.singularities import singularity_superset

# g is the Lagrange interpolation of exp-copies through the points 1 and 2:
# g(1) = g(2) = e.
g = ef_lagrange_combo(ef_exp(), [1, 2])

# The scaled copies drag the singular point of exp along with them, so g's
# transformed series is singular at both 1 and 2.
print("singular points of the combination:", singularity_superset(g).poly)

# Certification must refuse: g shares singular points with itself across
# the point ratio 1/2.
cert = certify_multi([g, g], [1, 2])
print("verdict:", cert.verdict)
assert cert.verdict == "Inconclusive"

# And the numeric side finds the planted relation instantly: the integer
# relation search at 40 digits returns a multiple of (0, 1, -1), i.e.
# 0*1 + 1*g(1) - 1*g(2) = 0.
report = falsify(cert, digits=40, coeff_bound=1000)
print("relation coefficients:", report.coefficients)
assert report.found and report.coefficients[0] == 0

# No contradiction is reported, because the verdict was already
# Inconclusive. A found relation against a certified verdict would be
# flagged loudly instead.
assert not report.contradiction
