"""Catalyst products and template variants.

A catalyst is an auxiliary vector c with c_0 = 1; instead of comparing two
vectors directly, one compares the coefficient sequences of the template
products taken over x (x) c and y (x) c.  The coefficients factor through the
tensor product exactly, and for the linear template they are convolutions of
the elementary symmetric values.
"""

from fractions import Fraction

from sympineq import (Catalyst, TruncatedSeries, catalyst_product,
                      check_hypotheses, elementary_all, padded_taylor_template,
                      product_over_vector, series_mul, taylor_template, tensor)
from sympineq.vectors import RationalVector

x = RationalVector([1, 2])
c = Catalyst((Fraction(1), Fraction(1, 2), Fraction(1, 4)))

print("x =", x)
print("catalyst entries:", [str(e) for e in c.entries])
print("x tensor c =", tensor(x, c))

# Route one: per-catalyst-entry products.  Route two: one flat product over
# the tensor vector.  They agree coefficient by coefficient, exactly.
tpl = taylor_template(1)
d = len(x) * len(c)
via_catalyst = catalyst_product(x, c, tpl, d)
via_tensor = product_over_vector(tensor(x, c), tpl, d)
print("\ncatalyst route == tensor route:", via_catalyst == via_tensor)
print("coefficients:", [str(v) for v in via_catalyst.coeffs])

# Route three: convolve the elementary-value sequences scaled by powers of
# each catalyst entry.
es = elementary_all(x)
acc = TruncatedSeries.one(d)
for cj in c.entries:
    seq = [es[m] * cj ** m if m < len(es) else Fraction(0) for m in range(d + 1)]
    acc = series_mul(acc, TruncatedSeries(seq))
print("convolution route agrees:", acc == via_catalyst)

# Tensoring with a catalyst can only help a comparison; the trivial catalyst
# reduces to the plain hypotheses.
y = RationalVector([Fraction(3, 2), Fraction(3, 2)])
plain = check_hypotheses(x, y, 1)
cx = catalyst_product(x, c, tpl, d)
cy = catalyst_product(y, c, tpl, d)
print("\nplain order-1 hypotheses pass:", plain.all_pass)
print("catalyst-extended comparisons pass:",
      all(a <= b for a, b in zip(cx.coeffs, cy.coeffs)))

# Templates may also be padded above their order with coefficients a_j/j!,
# 0 <= a_j < 1, giving order-zero style variants of the exponential template.
padded = padded_taylor_template(2, {3: Fraction(1, 2), 4: Fraction(1, 4)})
print("\npadded template degree:", padded.degree)
print("padded product coefficients:",
      [str(v) for v in product_over_vector(x, padded, 4).coeffs])
