"""
Growth rates and the worthiness score
=====================================

How fast does the integral shrink when the parameter vector is scaled?
Three characteristic rates control the answer.  They come from the
critical points of the integrand, which reduce to the roots of a cubic
with integer coefficients.
"""

from zetaforms import cubic_from_vector, lambda_values, worthiness

ONES = (1,) * 8

print("growth cubic at the symmetric point:", cubic_from_vector(ONES))

g = lambda_values(ONES, prec=30)
for i, (mod, lg) in enumerate(zip(g.moduli, g.logs), start=1):
    print("  rate %d  modulus %.10g  log %.10g" % (i, float(mod), float(lg)))

# The score gamma packages the rates together with the arithmetic
# information (how much of the denominator is spurious).  Scores above
# zero mean the family proves a quantitative irrationality statement;
# closer to 1 is better.
w = worthiness(ONES, prec=30)
print("symmetric point: gamma = %.8f" % float(w.gamma))

# Two hand-picked vectors score noticeably higher than the symmetric
# point.  Both appear in the acceptance gate with pinned digits.
for a in ((8, 16, 10, 15, 12, 16, 18, 13), (15, 20, 16, 14, 18, 17, 16, 20)):
    w = worthiness(a, prec=30)
    print("a = %s" % (a,))
    print("  gamma      = %.8f" % float(w.gamma))
    print("  m multiset = %s" % (w.m,))
    print("  log rates  = %s" % ([float(x) for x in w.rates.logs],))

# Degenerate directions exist: vectors whose cubic loses its leading
# coefficient or picks up a multiple root.  Those raise a typed error
# rather than returning garbage rates; see DegenerateGrowthError.
