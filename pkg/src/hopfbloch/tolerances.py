"""Numerical tolerances shared across the package.

The inputs carry no natural scale (everything is unit-normalized), so a
single set of absolute tolerances is used everywhere.
"""

# unit-norm and generic numerical agreement
EPS_UNIT = 1e-9
EPS_NUM = 1e-9

# hard-zero cutoffs (degenerate denominators, undefined azimuths)
EPS_ZERO = 1e-12

# exclusion band around 1 + x0 = 0 (the |1>_A (x) |psi_B> family)
EPS_DEGENERATE = 1e-9

# inputs within this of unit norm are silently renormalized; beyond it they
# are rejected
NORM_INPUT_TOL = 1e-6
