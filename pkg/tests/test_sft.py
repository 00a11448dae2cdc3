"""Certificates for finitely-generated-up-to-powers ideals and their combinators."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.amalgam import make_amalgamation, make_duplication
from ringlab.ideals import (
    ideal_generated,
    spectrum,
    whole_ideal,
    zero_ideal,
)
from ringlab.rings import make_hom, make_product, make_quotient, make_zmod
from ringlab.sft import (
    CertificateError,
    SftCertificate,
    cert_amalg,
    cert_contract,
    cert_qbar,
    cert_quotient,
    cert_sum,
    check_theorem_sft,
    minimal_exponent,
    trivial_certificate,
    verify_certificate,
)


def _dupl(n, gens):
    A = make_zmod(n)
    return make_duplication(A, ideal_generated(A, gens))


def test_trivial_certificate_verifies():
    R = make_zmod(12)
    I = ideal_generated(R, [4])
    cert = trivial_certificate(I)
    ok, w = verify_certificate(cert)
    assert ok and w is None
    assert cert.exponent == 1
    assert cert.generated == I


def test_verify_rejects_generator_outside_target():
    R = make_zmod(12)
    I = ideal_generated(R, [4])
    bad = SftCertificate(R, I, (6,), 1)
    ok, w = verify_certificate(bad)
    assert not ok and w == 6


def test_verify_rejects_insufficient_exponent():
    R = make_zmod(8)
    I = ideal_generated(R, [2])
    # <4> contains 2^2 but not 2^1
    assert verify_certificate(SftCertificate(R, I, (4,), 1))[0] is False
    assert verify_certificate(SftCertificate(R, I, (4,), 2))[0] is True


def test_minimal_exponent_values():
    R = make_zmod(8)
    I = ideal_generated(R, [2])
    assert minimal_exponent(I, [2]) == 1
    assert minimal_exponent(I, [4]) == 2
    assert minimal_exponent(I, []) == 3  # x^3 = 0 for all x in (2) mod 8


def test_minimal_exponent_unreachable():
    R = make_zmod(6)
    I = ideal_generated(R, [2])
    assert minimal_exponent(I, []) is None  # 4^k is never 0 mod 6


def test_exponent_must_be_positive():
    R = make_zmod(4)
    with pytest.raises(CertificateError):
        SftCertificate(R, zero_ideal(R), (), 0)


def test_cert_quotient_preserves_exponent():
    R = make_zmod(16)
    I = ideal_generated(R, [2])
    cert = trivial_certificate(I, exponent=2)
    K = ideal_generated(R, [8])
    out, Q, pi = cert_quotient(cert, K)
    assert out.exponent == 2
    assert out.ambient.ring_id == Q.ring_id
    assert verify_certificate(out)[0]


def test_cert_quotient_rejects_whole_kernel():
    R = make_zmod(4)
    cert = trivial_certificate(ideal_generated(R, [2]))
    with pytest.raises(CertificateError):
        cert_quotient(cert, whole_ideal(R))


def test_cert_sum_adds_exponents():
    R = make_zmod(36)
    cI = trivial_certificate(ideal_generated(R, [4]), exponent=2)
    cJ = trivial_certificate(ideal_generated(R, [6]), exponent=3)
    out = cert_sum(cI, cJ)
    assert out.exponent == 5
    assert out.target == ideal_generated(R, [2])
    assert out.generators == cI.generators + cJ.generators


def test_cert_amalg_and_contract_roundtrip():
    D = _dupl(12, [6])
    A = D.A
    I = ideal_generated(A, [4])
    _, _, J_S = D.fa_plus_j
    up = cert_amalg(trivial_certificate(I, exponent=2), trivial_certificate(J_S), D)
    assert up.exponent == 3
    assert verify_certificate(up)[0]
    down = cert_contract(up)
    assert down.target == I
    assert down.exponent == 3
    assert verify_certificate(down)[0]


def test_cert_amalg_rejects_certificate_in_b():
    D = _dupl(12, [6])
    certB = trivial_certificate(D.J)  # lives in B, not in f(A)+J
    with pytest.raises(CertificateError):
        cert_amalg(trivial_certificate(zero_ideal(D.A)), certB, D)


def test_cert_contract_rejects_non_extended_target():
    D = _dupl(4, [2])
    # the zero ideal of the amalgamation is not of the form I bowtie J (J != 0)
    cert = trivial_certificate(zero_ideal(D))
    with pytest.raises(CertificateError):
        cert_contract(cert)


def test_cert_qbar_on_duplication_prime():
    D = _dupl(4, [2])
    (Q,) = spectrum(D.B)
    trace = cert_qbar(D, Q)
    assert verify_certificate(trace.combined)[0]
    assert trace.combined.exponent == 3
    assert trace.I_set_equals_f_inv_J
    assert minimal_exponent(trace.combined.target, trace.combined.generators) <= 3


def test_cert_qbar_injected_exponents_sum():
    D = _dupl(4, [2])
    (Q,) = spectrum(D.B)
    trace = cert_qbar(D, Q, sub_exponents=(2, 1, 1))
    assert trace.exponents == (2, 1, 1)
    assert trace.combined.exponent == 4
    assert verify_certificate(trace.combined)[0]


def test_cert_qbar_rejects_non_prime():
    D = _dupl(12, [2])
    I = ideal_generated(D.B, [4])  # (4) is not prime in Z/12
    with pytest.raises(CertificateError):
        cert_qbar(D, I)


def test_cert_qbar_degenerate_whole_j():
    # J = B makes (f(A)+J)/J the zero ring; the Q0 leg must vanish cleanly
    A = make_zmod(2)
    B = make_product([make_zmod(2)] * 2)
    diag = make_hom(A, B, [B.resolve((a, a)) for a in range(2)])
    amalg = make_amalgamation(A, B, diag, whole_ideal(B))
    for Q in spectrum(B):
        trace = cert_qbar(amalg, Q)
        assert trace.Q0 is None
        assert trace.L0 == ()
        assert verify_certificate(trace.combined)[0]


def test_cert_qbar_degenerate_zero_j():
    D = _dupl(6, [])
    for Q in spectrum(D.B):
        trace = cert_qbar(D, Q)
        assert len(trace.Q1) == 1  # Q meet {0}
        assert verify_certificate(trace.combined)[0]


def test_check_theorem_sft_full_duplication():
    rep = check_theorem_sft(_dupl(12, [4]))
    assert rep.verdict == "agree"
    assert rep.all_certified
    assert rep.backward_entries and rep.forward_entries
    for prime, constructed, minimal in rep.exponent_pairs:
        assert minimal is not None and minimal <= constructed


def test_check_theorem_sft_routes_cover_both_transfers():
    rep = check_theorem_sft(_dupl(12, [4]))
    routes = {e.route for e in rep.backward_entries}
    assert "P'^f via cert_amalg" in routes
    assert "Qbar^f via cert_qbar" in routes


@given(st.integers(min_value=2, max_value=16), st.integers(min_value=0, max_value=15))
@settings(max_examples=30, deadline=None)
def test_trivial_certificates_always_verify(n, g):
    R = make_zmod(n)
    I = ideal_generated(R, [g % n])
    cert = trivial_certificate(I)
    assert verify_certificate(cert)[0]
    assert minimal_exponent(I, cert.generators) == 1
