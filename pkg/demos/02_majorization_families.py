"""Majorization versus the polynomial families that characterize it.

The pair below has equal sums, equal products, and a larger maximum on the
left, yet the left vector does not majorize the right one.  The polynomial
hypotheses still hold for every order up to 3 -- the conditions are strictly
weaker than majorization.
"""

import random

from sympineq import (f_kr_all, m_kr, majorizes, psi_compare,
                      s_r_limit_estimate, schur_ostrowski_sample,
                      t_transform_pair, theorem2_scan)
from sympineq.vectors import RationalVector, partial_sums_desc

x = RationalVector([4, "19/10", "11/10"])
y = RationalVector([3, 3, 1])

verdict = majorizes(x, y)
print("partial sums x:", [str(s) for s in partial_sums_desc(x)])
print("partial sums y:", [str(s) for s in partial_sums_desc(y)])
print("x majorizes y:", verdict.holds, "- first violation:",
      verdict.first_violation)

for r in (1, 2, 3):
    fx, fy = f_kr_all(x, r), f_kr_all(y, r)
    holds = all(fx[k] <= fy[k] for k in range(r, 3 * r + 1))
    print(f"order-{r} hypotheses F_k(x) <= F_k(y):", holds)

# The equivalence scan: since x does not majorize y, a subset-power violation
# must eventually appear.  Nothing shows up through k = 8; the first one sits
# at (r=2, k=11), far beyond where the partial sums already told the story.
for k_max in (8, 16):
    report = theorem2_scan(x, y, k_max)
    print(f"\nscan up to k={k_max}: majorizes={report.majorization_holds}, "
          f"G-violation={report.distinct_var_violation and (report.distinct_var_violation.r, report.distinct_var_violation.k)}, "
          f"M-violation={report.subset_power_violation and (report.subset_power_violation.r, report.subset_power_violation.k)}")

# Why the violation must appear: the k-th root of the subset-power values
# converges to the partial sum from above.
estimates = s_r_limit_estimate(x, 2, 40)
print("\n(M_{k,2}(x))^(1/k) for k = 1, 5, 10, 20, 40:",
      [round(estimates[i - 1], 4) for i in (1, 5, 10, 20, 40)])
print("target: the two largest entries sum to", float(partial_sums_desc(x)[1]))

# Schur-direction sampling at random points: the F and G families run
# concave, the M family convex.
rng = random.Random(7)
point = RationalVector([rng.randint(1, 9) for _ in range(4)])
for family in ("F", "G", "M"):
    sample = schur_ostrowski_sample(family, point, k=4, r=2)
    print(f"Schur-Ostrowski probe {family} at {point}: ok={sample.ok}")

# Transfer-generated pairs majorize by construction, and the family
# directions follow.
x2, y2 = t_transform_pair(random.Random(1), 4)
print("\ntransfer pair majorizes:", majorizes(x2, y2).holds,
      "- M_{3,2} direction:", m_kr(x2, 3, 2) >= m_kr(y2, 3, 2))

# The concave test functions: an empirical probe, not a proof.
rows = psi_compare(x, y, [0.5, 1, 2, 4])
print("psi probe on the non-majorizing pair:",
      [(row.lam, row.holds) for row in rows])
