"""
The dual series and reciprocal growth
=====================================

Every parameter vector has a dual, living on the series side: a
well-poised hypergeometric sum in eight integer parameters.  At the
origin the series collapses to a single zeta value, and along a scaled
family its decay rate is the reciprocal of the integral's dominant
growth rate.
"""

from mpmath import mp

from zetaforms import dual_params, eval_F7, lambda_values

# Anchor: the series at the origin is exactly twice zeta(5).
f0 = eval_F7((0,) * 8, prec=40)
with mp.workdps(50):
    print("F7(0)      =", mp.nstr(f0.value, 35))
    print("2 zeta(5)  =", mp.nstr(2 * mp.zeta(5), 35))

# The dual of the symmetric point.
b = dual_params((1,) * 8)
print("dual of the symmetric point:", tuple(b))

# Scale the dual vector and watch consecutive values.  The ratio drifts
# toward the reciprocal of the largest growth rate of the primal
# family.  The transient dies off like a constant over the scale, so
# convergence is visible but unhurried.
lam3 = lambda_values((1,) * 8, prec=30).moduli[2]
with mp.workdps(40):
    target = 1 / lam3
    print("target 1/lambda_3 = %.10f" % float(target))
    for n in (5, 10, 20, 30, 40):
        f_prev = eval_F7(tuple((n - 1) * x for x in b), prec=30).value
        f_curr = eval_F7(tuple(n * x for x in b), prec=30).value
        ratio = f_curr / f_prev
        print("  scale %2d: ratio %.10f  (off by %+.1f%%)"
              % (n, float(ratio), 100 * float((ratio - target) / target)))
