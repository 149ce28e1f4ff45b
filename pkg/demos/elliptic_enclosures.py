"""
Two independent routes to K, certified to agree
===============================================

The arithmetic-geometric mean gives one enclosure of the complete
elliptic integral; exponentiating the certified series and taking a
logarithm gives another.  Both are rigorous, so their intersection
must be nonempty -- and it is, to better than 10^-60 here.
"""

from fractions import Fraction

from ellipmono import agm_K, agm_K_m, exp_K
from ellipmono.constants import enclose_constant

print("modulus r        AGM route / series route")
for r in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
    via_agm = agm_K(r, 256)
    via_series = exp_K(r * r, 280).enclosure.ln().round_to(256)
    assert via_agm.overlaps(via_series)
    print(f"  r = {str(r):5s}   {via_agm.to_decimal(30)}")
    print(f"              {via_series.to_decimal(30)}")

# the lemniscatic point has a Gamma-function closed form
lem = agm_K_m(Fraction(1, 2), 256)
gq = enclose_constant("gamma_quarter", 256)
closed = gq.square() / enclose_constant("sqrt_pi", 256).mul_scalar(4)
print("\nlemniscatic K(m=1/2):")
print(f"  AGM          {lem.to_decimal(40)}")
print(f"  Gamma form   {closed.to_decimal(40)}")
assert lem.overlaps(closed)

# near m = 1 the integral is logarithmic; the defect against
# ln(4/sqrt(1-m)) dies away
from ellipmono import asymptotic_defect

print("\ndefect K - ln(4/sqrt(1-m)):")
for k in (2, 8, 16):
    m = 1 - Fraction(1, 1 << k)
    print(f"  m = 1-2^-{k:<3d} {asymptotic_defect(m, 96).to_decimal(15)}")
