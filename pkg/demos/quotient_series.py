"""
The formal quotient of the two series is sign-definite
======================================================

Long division of sum b_n x^n by sum W_n x^n (both starting at n = 1)
yields exact pi-polynomial coefficients; every one checked so far is
nonnegative, which is what makes the truncated comparisons one-sided.
"""

from ellipmono import j_quotient_coefficients, j_truncation_check

qs = j_quotient_coefficients(6)
print("exact quotient coefficients:")
for k, q in enumerate(qs):
    print(f"  q_{k} = {q.render()}")

print("\nnumeric values:")
for k, q in enumerate(qs):
    print(f"  q_{k} = {q.evaluate(96).to_decimal(25)}")

cert, qs50 = j_truncation_check(50)
print(f"\nfirst 50 coefficients nonnegative: {cert.status.value} "
      f"at {cert.precision_used} bits in {cert.runtime_ms:.0f} ms")
