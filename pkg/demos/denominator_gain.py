"""
How much denominator the construction saves
===========================================

The naive denominator of the rational coefficients is a product of
factorial least common multiples.  The construction clears a large
factor out of it.  The savings are measured by a step function on
(0, 1) whose plateaus encode, prime by prime, how many powers of p
divide out.
"""

from fractions import Fraction

from zetaforms import Phi_n, nu_p, phi_limit, phi_step

A = (15, 20, 16, 14, 18, 17, 16, 20)

st = phi_step(A)

# First few plateaus of the step function.
shown = 0
for lo, hi, v in st.intervals():
    if shown == 6:
        break
    print("phi = %d on [%s, %s)" % (v, lo, hi))
    shown += 1

# The plateau value at {n/p} equals the p-adic valuation of the saved
# factor, for every prime p whose square exceeds the relevant range.
# Here {40/757} lands on the tall plateau, so three powers of 757 are
# cleared at once.
n, p = 40, 757
assert p * p > 18 * n
print("nu_%d at n=%d: %d  (step function gives %d)"
      % (p, n, nu_p(A, n, p), st.value_at(Fraction(n % p, p))))

# Phi_n is the full saved factor at scale n, assembled from exactly
# those valuations.  Its logarithm grows linearly; the slope has a
# closed form through the digamma function.
print("Phi_2 =", Phi_n(A, 2))
lim = phi_limit(A, prec=30)
print("limit of log(Phi_n)/n: %.8f" % float(lim.value))
