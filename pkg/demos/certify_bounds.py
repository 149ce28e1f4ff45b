"""
Grid certificates and sharpness probes
======================================

A bound family is certified by enclosing its margin at every grid
point with adaptive precision; a constant is shown sharp by refuting
the bound after an epsilon perturbation.  Certificates serialize to
JSON for archiving.
"""

import json
from fractions import Fraction

from ellipmono import (
    BoundSpec,
    certify_sequence,
    default_grid,
    grid_verify,
    sharpness_probe,
    threshold,
)

# certify the logarithmic lower bound at its sharp parameter on a
# 222-point grid crowding both endpoints
cert = grid_verify(BoundSpec("P1_lower", 0), default_grid(200))
print(f"P1_lower (order 0): {cert.status.value} "
      f"at {cert.precision_used} bits in {cert.runtime_ms:.0f} ms")
print(f"  tightest point: {cert.witnesses[0].location}")

# the same parameter perturbed by 1/100 must fail near 0 -- and the
# prober exhibits the violation
probe = sharpness_probe("P1_lower", Fraction(1, 100))
print(f"\nperturbed by 1/100: {probe.status.value} "
      f"(witness {probe.witnesses[0].location})")

# sign certificates for the difference sequence c_n(p) = b_n - p W_n,
# including the exact boundary zero at the sharp parameter
cert = certify_sequence("c_nonneg", 0, 200, p=threshold(1))
print(f"\nc_n(pi e^(pi/2)/4) >= 0 on 0..200: {cert.status.value}")
print(f"  exact zeros: {cert.boundary_zeros}")

# certificates are plain JSON documents
print("\nfull certificate:")
print(json.dumps(cert.to_json_dict(), indent=2)[:400] + " ...")
