"""Certification machinery: sequence claims, grids, probes, quotients."""

from fractions import Fraction

import pytest

from ellipmono.certify import (
    SEQUENCE_CLAIMS,
    SHARPNESS_FAMILIES,
    BoundSpec,
    Certificate,
    CertStatus,
    Witness,
    certify_sequence,
    default_grid,
    default_pair_grid,
    grid_verify,
    h_monotonicity,
    j_quotient_coefficients,
    j_truncation_check,
    resolve_spec,
    sharpness_probe,
)
from ellipmono.coefficients import b_coeff, threshold, wallis
from ellipmono.intervals import DomainError
from ellipmono.pi_expr import PiExpression

F = Fraction

SMALL_GRID = [F(k, 17) for k in range(1, 17)] + [F(1, 64), 1 - F(1, 64)]
SMALL_PAIRS = default_pair_grid(8)


def test_cert_status_strings():
    assert CertStatus.CERTIFIED.value == "Certified"
    assert CertStatus.REFUTED.value == "Refuted"
    assert CertStatus.UNDECIDED.value == "Undecided"
    assert CertStatus.CERTIFIED == "Certified"  # str-enum comparison


def test_certificate_json_schema_order():
    cert = certify_sequence("u_signs", 0, 10)
    d = cert.to_json_dict()
    assert list(d)[:6] == ["claim", "range", "status", "precision_used",
                           "witnesses", "runtime_ms"]
    assert d["status"] == "Certified"
    assert isinstance(d["runtime_ms"], (int, float))


def test_witness_json():
    w = Witness(location="n=3", value="1/2", note="margin")
    assert w.to_json_dict() == {"location": "n=3", "value": "1/2",
                                "note": "margin"}


# ----------------------------------------------------------------------
# sequence claims

@pytest.mark.parametrize("claim, lo, hi", [
    ("u_signs", 0, 40),
    ("v_positive", 2, 60),
    ("ratio_increasing", 1, 100),
    ("ratio_below_4", 1, 100),
    ("gap_positive", 1, 100),
])
def test_sequence_claims_certify(claim, lo, hi):
    assert claim in SEQUENCE_CLAIMS
    cert = certify_sequence(claim, lo, hi)
    assert cert.status is CertStatus.CERTIFIED, cert.to_json_dict()


def test_c_nonneg_with_boundary_zero():
    cert = certify_sequence("c_nonneg", 0, 50, p=threshold(1))
    assert cert.status is CertStatus.CERTIFIED
    assert cert.boundary_zeros == ["n=1"]


def test_c_nonpos_with_boundary_zero():
    cert = certify_sequence("c_nonpos", 0, 50, p=threshold(0))
    assert cert.status is CertStatus.CERTIFIED
    assert cert.boundary_zeros == ["n=0"]


def test_c_nonpos_rational_four():
    cert = certify_sequence("c_nonpos", 1, 50, p=F(4))
    assert cert.status is CertStatus.CERTIFIED
    assert not cert.boundary_zeros


def test_c_nonneg_refuted_at_four():
    cert = certify_sequence("c_nonneg", 1, 5, p=F(4))
    assert cert.status is CertStatus.REFUTED
    assert cert.witnesses
    assert cert.witnesses[0].location == "n=1"


def test_sequence_domain_errors():
    with pytest.raises(DomainError):
        certify_sequence("no_such_claim", 0, 5)
    with pytest.raises(DomainError):
        certify_sequence("c_nonneg", 0, 5)  # parameter required


# ----------------------------------------------------------------------
# grid families

@pytest.mark.parametrize("family, order", [
    ("P1_lower", 0),
    ("P1_lower", 1),
    ("P1_upper", 0),
    ("P1_upper", 1),
    ("P2_lower", 0),
    ("P2_upper", 0),
    ("EKDIFF_upper", 0),
    ("EKDIFF_lower", 0),
    ("RMK4_QI", 0),
    ("RMK4_YI", 0),
])
def test_scalar_families_certify(family, order):
    cert = grid_verify(BoundSpec(family, order), SMALL_GRID)
    assert cert.status is CertStatus.CERTIFIED, cert.to_json_dict()


@pytest.mark.parametrize("family, order", [
    ("P3_lower", 1),
    ("P3_lower", 2),
    ("P3_upper", 1),
    ("P3_upper", 2),
    ("CP3_lower", 0),
    ("CP3_upper", 0),
])
def test_pair_families_certify(family, order):
    cert = grid_verify(BoundSpec(family, order), SMALL_PAIRS)
    assert cert.status is CertStatus.CERTIFIED, cert.to_json_dict()


def test_identity_family_certifies():
    grid = [F(k, 23) for k in range(1, 23)]
    cert = grid_verify(BoundSpec("M1_identity", 0), grid)
    assert cert.status is CertStatus.CERTIFIED


def test_overshooting_parameter_is_refuted():
    # raising the parameter above its sharp value breaks the lower bound
    # for small x, and the verifier must find the violation, not hide it
    spec = BoundSpec("P1_lower", 0, param_offset=F(1, 2))
    cert = grid_verify(spec, [F(1, 256), F(1, 64), F(1, 16)])
    assert cert.status is CertStatus.REFUTED
    assert cert.witnesses


def test_resolve_spec_defaults():
    spec = resolve_spec(BoundSpec("P1_lower", 0))
    assert spec.param == threshold(1)
    spec = resolve_spec(BoundSpec("P1_upper", 3))
    assert spec.param == F(4)
    described = BoundSpec("P1_lower", 1, threshold(2)).describe()
    assert described["family"] == "P1_lower"
    assert described["order"] == 1
    assert "exp(pi/2)" in described["param"]


def test_unknown_family_rejected():
    with pytest.raises(DomainError):
        grid_verify(BoundSpec("P9_upper", 0), SMALL_GRID)


# ----------------------------------------------------------------------
# grids

def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) >= 200
    assert all(0 < x < 1 for x in grid)
    assert F(1, 1 << 12) in grid and 1 - F(1, 1 << 12) in grid
    assert grid == sorted(grid)


def test_default_pair_grid_shape():
    pairs = default_pair_grid()
    assert len(pairs) >= 200
    cap = 1 - F(1, 1 << 10)
    assert all(0 < x < y < 1 and x + y <= cap for x, y in pairs)


# ----------------------------------------------------------------------
# sharpness probes

@pytest.mark.parametrize("family", SHARPNESS_FAMILIES)
def test_sharpness_probes_refute(family):
    eps = F(1, 100) if family.startswith("P1") else F(1, 1000)
    cert = sharpness_probe(family, eps)
    assert cert.status is CertStatus.REFUTED, cert.to_json_dict()
    assert cert.witnesses
    assert "x=" in cert.witnesses[0].location


def test_sharpness_probe_gives_up_honestly():
    cert = sharpness_probe("EKDIFF_upper", F(1, 1000), max_steps=3)
    assert cert.status is CertStatus.UNDECIDED


def test_sharpness_probe_rejects_unknown_family():
    with pytest.raises(DomainError):
        sharpness_probe("RMK4_QI", F(1, 100))


# ----------------------------------------------------------------------
# symmetrized difference quotient

def test_h_monotone_certifies():
    xs = [F(k, 10) for k in (1, 2, 3, 4)] + [F(k, 10) for k in (6, 7, 8, 9)]
    cert = h_monotonicity(xs)
    assert cert.status is CertStatus.CERTIFIED


def test_h_monotone_rejects_midpoint():
    with pytest.raises(DomainError):
        h_monotonicity([F(1, 4), F(1, 2), F(3, 4)])


# ----------------------------------------------------------------------
# formal quotient coefficients

def test_j_quotient_closed_forms():
    qs = j_quotient_coefficients(2)
    assert qs[0] == PiExpression((F(0), F(1, 4)), exp_scale=True)
    assert qs[1] == PiExpression((F(0), F(-3, 64), F(1, 64)), exp_scale=True)


def test_j_quotient_reconstructs_b():
    # sum_{j<=k} q_j W_{k+1-j} must rebuild b_{k+1} exactly
    qs = j_quotient_coefficients(9)
    for k in range(9):
        acc = PiExpression.zero()
        for j in range(k + 1):
            acc = acc + qs[j] * wallis(k + 1 - j)
        assert acc == b_coeff(k + 1), k


def test_j_truncation_check():
    cert, qs = j_truncation_check(12)
    assert cert.status is CertStatus.CERTIFIED
    assert len(qs) == 12
    assert isinstance(cert, Certificate)
