"""
Where the transformed series blow up, and why it decides everything
===================================================================

The certificates in this package all reduce to one geometric question:
after replacing each Taylor series sum a_n z^n / n! by sum a_n z^n, where
are the finite singular points, and do the evaluation points keep those
singular sets apart?
"""

from elindep.diffop import op_to_text, psi_transform
from elindep.efunction import ef_bessel_j0, ef_exp, ef_sin_integral
from elindep.singularities import singularity_superset

# exp has coefficient sequence a_n = 1, so the transform is the geometric
# series 1/(1-z): one singular point, z = 1.
exp_set = singularity_superset(ef_exp())
print("exp:", exp_set.poly, "->", exp_set.to_json())

# The transform is computed on the level of annihilating operators. For
# exp the operator D - 1 becomes a first-order operator whose leading
# coefficient vanishes exactly at the singular point.
f = ef_exp()
op = psi_transform(f.annihilator, f.coefficients(f.annihilator.order))
print("transformed operator:", op_to_text(op))

# The Bessel-type series and the sine-integral series look very different
# but their transforms both degenerate at z = +/-i: the leading coefficient
# polynomial is z^2 + 1 in both cases.
for g in (ef_bessel_j0(), ef_sin_integral()):
    rs = singularity_superset(g)
    print(f"{g.name}:", rs.poly)

# That shared locus is not an obstruction by itself. Values of the two
# functions at the *same* point stay independent as long as no ratio of
# evaluation points maps {i, -i} onto itself. The dangerous ratios are the
# ones the certifier checks exactly, e.g. alpha_i / alpha_j = -1:
from elindep.criterion import certify_single

print()
print("J0 at 2 and -2:", certify_single(ef_bessel_j0(), [2, -2]).verdict)
print("J0 at 2 and 3: ", certify_single(ef_bessel_j0(), [2, 3]).verdict)
