"""SFT certificates and their constructive combinators.

A certificate for an ideal I is a pair (generator list, exponent k) with
ideal(generators) contained in I and x^k in ideal(generators) for every x
in I.  The combinators mirror the constructive steps of the quotient, sum
and amalgamation lemmas; each re-verifies its output semantically and treats
a failure as a hard error, since at finite scale it would falsify the
corresponding lemma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .amalgam import AmalgamationRing, extend_prime_A, extend_prime_B
from .ideals import (
    Ideal,
    ideal_generated,
    ideal_image,
    ideal_preimage,
    ideal_sum,
    ideal_verification_witness,
    is_prime,
    spectrum,
)
from .rings import FiniteRing, RingError, RingHom, make_quotient


class CertificateError(RingError):
    """A combinator produced a non-verifying certificate (potential
    falsification of the underlying lemma) or was fed invalid inputs."""


@dataclass(frozen=True)
class SftCertificate:
    ambient: FiniteRing
    target: Ideal
    generators: tuple[int, ...]
    exponent: int
    provenance: str = ""

    def __post_init__(self):
        if self.target.ring.ring_id != self.ambient.ring_id:
            raise CertificateError("certificate target lives in a different ring")
        if self.exponent < 1:
            raise CertificateError("certificate exponent must be positive")
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))

    @cached_property
    def generated(self) -> Ideal:
        return ideal_generated(self.ambient, self.generators)

    def describe(self) -> str:
        gens = ", ".join(self.ambient.format_element(g) for g in self.generators)
        return f"(<{gens}>, k={self.exponent})"


def verify_certificate(cert: SftCertificate) -> tuple[bool, Optional[int]]:
    """(True, None) if the certificate verifies; else (False, witness index).

    The witness is either a generator outside the target ideal or an x in
    the target with x^k outside the generated subideal.
    """
    gen = cert.generated
    for g in cert.generators:
        if g not in cert.target.element_set:
            return False, g
    if not gen.issubset(cert.target):
        w = next(x for x in gen.elements if x not in cert.target.element_set)
        return False, w
    R = cert.ambient
    for x in cert.target.elements:
        if R.pow_i(x, cert.exponent) not in gen.element_set:
            return False, x
    return True, None


def _require_verified(cert: SftCertificate, context: str) -> SftCertificate:
    ok, w = verify_certificate(cert)
    if not ok:
        raise CertificateError(
            f"{context}: certificate {cert.describe()} for {cert.target.describe()} in "
            f"{cert.ambient.name} fails at {cert.ambient.format_element(w)}"
        )
    return cert


def trivial_certificate(I: Ideal, exponent: int = 1, provenance: str = "trivial") -> SftCertificate:
    """Greedy generator selection with exponent 1 (or a forced larger
    exponent, which still verifies because ideals absorb powers)."""
    R = I.ring
    gens: list[int] = []
    covered = frozenset([0])
    for x in I.elements:
        if x not in covered:
            gens.append(x)
            covered = ideal_generated(R, gens).element_set
    cert = SftCertificate(R, I, tuple(gens), exponent, provenance)
    return _require_verified(cert, "trivial_certificate")


def minimal_exponent(I: Ideal, gens: Sequence[int]) -> Optional[int]:
    """Smallest k <= |R| making (gens, k) verify against I, or None."""
    R = I.ring
    G = ideal_generated(R, gens)
    if not G.issubset(I):
        raise CertificateError("generators generate outside the target ideal")
    powers = {x: x for x in I.elements}
    for k in range(1, R.order + 1):
        for x in I.elements:
            powers[x] = R.pow_i(x, k)
        if all(powers[x] in G.element_set for x in I.elements):
            return k
    return None


def cert_image(cert: SftCertificate, h: RingHom, provenance: str = "image") -> SftCertificate:
    """Push a certificate through a surjection (the quotient lemma's move)."""
    _require_verified(cert, "cert_image input")
    if cert.ambient.ring_id != h.source.ring_id:
        raise CertificateError("certificate does not live in the homomorphism's source")
    target = ideal_image(h, cert.target)
    gens = tuple(sorted(set(h.apply(g) for g in cert.generators)))
    out = SftCertificate(h.target, target, gens, cert.exponent, provenance)
    return _require_verified(out, "cert_image")


def cert_quotient(cert: SftCertificate, K: Ideal) -> tuple[SftCertificate, FiniteRing, RingHom]:
    """Image certificate in R/K: generators map through the canonical
    surjection, the exponent is unchanged."""
    if K.ring.ring_id != cert.ambient.ring_id:
        raise CertificateError("K is not an ideal of the certificate's ambient ring")
    if K.is_whole:
        raise CertificateError("K must be proper")
    Q, pi = make_quotient(cert.ambient, K)
    out = cert_image(cert, pi, provenance=f"quotient by {K.describe()}")
    return out, Q, pi


def cert_sum(certI: SftCertificate, certJ: SftCertificate) -> SftCertificate:
    """Certificate for I+J: concatenated generators, summed exponents."""
    if certI.ambient.ring_id != certJ.ambient.ring_id:
        raise CertificateError("certificates live in different rings")
    _require_verified(certI, "cert_sum input I")
    _require_verified(certJ, "cert_sum input J")
    target = ideal_sum(certI.target, certJ.target)
    out = SftCertificate(
        certI.ambient,
        target,
        certI.generators + certJ.generators,
        certI.exponent + certJ.exponent,
        provenance="sum",
    )
    return _require_verified(out, "cert_sum")


def cert_contract(cert: SftCertificate) -> SftCertificate:
    """From a certificate for I bowtie^f J down to one for I in A:
    first coordinates of the generators, same exponent."""
    amalg = cert.ambient
    if not isinstance(amalg, AmalgamationRing):
        raise CertificateError("cert_contract needs a certificate in an amalgamation")
    _require_verified(cert, "cert_contract input")
    A = amalg.A
    I_elems = sorted(set(amalg.a_part(x) for x in cert.target.elements))
    expected = [i for i in range(amalg.order) if amalg.a_part(i) in set(I_elems)]
    if tuple(expected) != cert.target.elements:
        raise CertificateError("certificate target is not of the form I bowtie^f J")
    why = ideal_verification_witness(A, I_elems)
    if why is not None:
        raise CertificateError(f"first-coordinate projection is not an ideal of A: {why}")
    I = Ideal(A, tuple(I_elems), None)
    gens = tuple(sorted(set(amalg.a_part(g) for g in cert.generators)))
    out = SftCertificate(A, I, gens, cert.exponent, provenance="contract")
    return _require_verified(out, "cert_contract")


def cert_amalg(
    certI: SftCertificate, certJ: SftCertificate, amalg: AmalgamationRing
) -> SftCertificate:
    """Certificate for I bowtie^f J from certificates for I in A and for J
    in f(A)+J: generators {(i_l, f(i_l))} and {(0, j_l)}, summed exponents."""
    S, _, J_S = amalg.fa_plus_j
    if certI.ambient.ring_id != amalg.A.ring_id:
        raise CertificateError("certI must live in A")
    if certJ.ambient.ring_id != S.ring_id:
        raise CertificateError(
            "certJ must live in the subring f(A)+J (a certificate in B is rejected: "
            "the hypothesis is about f(A)+J)"
        )
    if certJ.target != J_S:
        raise CertificateError("certJ must certify J as an ideal of f(A)+J")
    _require_verified(certI, "cert_amalg input I")
    _require_verified(certJ, "cert_amalg input J")
    # generators (0, j_l) only lie in the carrier when j_l is in J itself
    j_in_B = [int(S.members[g]) for g in certJ.generators]
    for j in j_in_B:
        if j not in amalg.J.element_set:
            raise CertificateError("a J-side generator lies outside J")
    gens = [amalg.index_of_pair(i, amalg.f.apply(i)) for i in certI.generators]
    gens += [amalg.index_of_pair(0, j) for j in j_in_B]
    target_elems = [
        i for i in range(amalg.order) if amalg.a_part(i) in certI.target.element_set
    ]
    target = Ideal(amalg, tuple(target_elems), None)
    out = SftCertificate(
        amalg, target, tuple(gens), certI.exponent + certJ.exponent, provenance="amalg"
    )
    return _require_verified(out, "cert_amalg")


@dataclass
class QbarCertTrace:
    """Full trace of the prime-contraction certificate construction."""

    amalg: AmalgamationRing
    Q: Ideal
    # ideal of (f(A)+J)/J, or None when J = f(A)+J and the quotient degenerates
    # to the zero ring (then Q meet (f(A)+J) sits inside J and the Q0 leg is empty)
    Q0: Optional[Ideal]
    I_set: Ideal  # ideal of A, the printed set {a : f(a) in J, exists j: f(a)+j in Q}
    I_set_equals_f_inv_J: bool
    Q1: Ideal  # Q meet J, as an ideal of f(A)+J
    sub_certs: tuple[Optional[SftCertificate], SftCertificate, SftCertificate]
    exponents: tuple[int, int, int]
    L0: tuple[int, ...]
    L1: tuple[int, ...]
    L2: tuple[int, ...]
    combined: SftCertificate


def cert_qbar(
    amalg: AmalgamationRing,
    Q: Ideal,
    sub_exponents: Optional[tuple[int, int, int]] = None,
) -> QbarCertTrace:
    """Certificate for Qbar^f assembled from three sub-certificates.

    Sub-certificates default to trivial ones (exponent 1); ``sub_exponents``
    forces larger exponents to exercise the summed-exponent arithmetic.
    """
    if Q.ring.ring_id != amalg.B.ring_id:
        raise CertificateError("Q is not an ideal of B")
    if not is_prime(Q):
        raise CertificateError(f"Q = {Q.describe()} is not prime")
    k0, k1, k2 = sub_exponents if sub_exponents is not None else (1, 1, 1)

    A, B, f, J = amalg.A, amalg.B, amalg.f, amalg.J
    S, _, J_S = amalg.fa_plus_j

    q_cap_s = [s for s in range(S.order) if int(S.members[s]) in Q.element_set]
    why = ideal_verification_witness(S, q_cap_s)
    if why is not None:
        raise CertificateError(f"Q meet (f(A)+J) is not an ideal of f(A)+J: {why}")
    Q_cap_S = Ideal(S, tuple(q_cap_s), None)

    L0: list[int] = []
    if amalg.s_mod_j is None:
        # J = f(A)+J, so (f(A)+J)/J is the zero ring: Q meet (f(A)+J) lies in
        # J, its image is zero, and the Q0 leg contributes no generators.
        Q0: Optional[Ideal] = None
        cert0: Optional[SftCertificate] = None
    else:
        _, pi = amalg.s_mod_j
        Q0 = ideal_image(pi, Q_cap_S)
        cert0 = trivial_certificate(Q0, exponent=k0, provenance="Q0")

        # lift each Q0 generator to an element of Q meet (f(A)+J), then split
        # it as f(a)+j to land in the carrier
        for gbar in cert0.generators:
            g = next(s for s in q_cap_s if pi.apply(s) == gbar)
            g_B = int(S.members[g])
            a = next(
                a
                for a in range(A.order)
                if int(B.add_table[g_B, B.neg_table[f.apply(a)]]) in J.element_set
            )
            L0.append(amalg.index_of_pair(a, g_B))

    # the printed set I = f^{-1}(J) meet P_A(Qbar^f)
    f_inv_J = ideal_preimage(f, J)
    i_elems = []
    for a in range(A.order):
        if f.apply(a) not in J.element_set:
            continue
        fa = f.apply(a)
        if any(int(B.add_table[fa, j]) in Q.element_set for j in J.elements):
            i_elems.append(a)
    why = ideal_verification_witness(A, i_elems)
    if why is not None:
        raise CertificateError(f"the printed set I is not an ideal of A: {why}")
    I_set = Ideal(A, tuple(i_elems), None)
    cert1 = trivial_certificate(I_set, exponent=k1, provenance="I_set")
    L1: list[int] = []
    for a in cert1.generators:
        fa = f.apply(a)
        j = next(j for j in J.elements if int(B.add_table[fa, j]) in Q.element_set)
        L1.append(amalg.index_of_pair(a, int(B.add_table[fa, j])))

    q1_elems = [s for s in range(S.order) if int(S.members[s]) in (Q.element_set & J.element_set)]
    why = ideal_verification_witness(S, q1_elems)
    if why is not None:
        raise CertificateError(f"Q meet J is not an ideal of f(A)+J: {why}")
    Q1 = Ideal(S, tuple(q1_elems), None)
    cert2 = trivial_certificate(Q1, exponent=k2, provenance="Q1")
    L2 = [amalg.index_of_pair(0, int(S.members[g])) for g in cert2.generators]

    target = extend_prime_B(amalg, Q, verify_prime=False)
    combined = SftCertificate(
        amalg,
        target,
        tuple(L0 + L1 + L2),
        k0 + k1 + k2,
        provenance=f"qbar from Q={Q.describe()}",
    )
    _require_verified(combined, "cert_qbar combined certificate")
    return QbarCertTrace(
        amalg=amalg,
        Q=Q,
        Q0=Q0,
        I_set=I_set,
        I_set_equals_f_inv_J=(I_set == f_inv_J),
        Q1=Q1,
        sub_certs=(cert0, cert1, cert2),
        exponents=(k0, k1, k2),
        L0=tuple(L0),
        L1=tuple(L1),
        L2=tuple(L2),
        combined=combined,
    )


@dataclass
class PrimeCertEntry:
    prime: str
    route: str
    exponent: int
    minimal: Optional[int]
    verified: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "route": self.route,
            "exponent": self.exponent,
            "minimal_exponent": self.minimal,
            "verified": self.verified,
            "detail": self.detail,
        }


@dataclass
class SftTheoremReport:
    """Per-prime certificate status for the SFT characterization."""

    instance: str
    forward_entries: list[PrimeCertEntry] = field(default_factory=list)
    backward_entries: list[PrimeCertEntry] = field(default_factory=list)

    @property
    def lhs(self) -> bool:
        return all(e.verified for e in self.backward_entries)

    @property
    def conditions(self) -> list[tuple[str, bool]]:
        by_side = {"A": True, "f(A)+J": True}
        for e in self.forward_entries:
            side = "A" if e.route.endswith("-> A") else "f(A)+J"
            by_side[side] = by_side[side] and e.verified
        return [
            ("A is SFT (every prime certified via projection images)", by_side["A"]),
            ("f(A)+J is SFT (every prime certified via projection images)", by_side["f(A)+J"]),
        ]

    @property
    def verdict(self) -> str:
        rhs = all(v for _, v in self.conditions)
        return "agree" if self.lhs == rhs else "disagree"

    @property
    def agrees(self) -> bool:
        return self.verdict == "agree"

    @property
    def all_certified(self) -> bool:
        return self.lhs and all(e.verified for e in self.forward_entries)

    @property
    def exponent_pairs(self) -> list[tuple[str, int, Optional[int]]]:
        return [
            (e.prime, e.exponent, e.minimal)
            for e in self.forward_entries + self.backward_entries
        ]

    def to_dict(self) -> dict:
        return {
            "theorem": "sft_characterization",
            "instance": self.instance,
            "lhs": {"label": "A bowtie^f J is SFT (every prime certified)", "value": self.lhs},
            "conditions": [{"label": l, "value": v} for l, v in self.conditions],
            "forward": [e.to_dict() for e in self.forward_entries],
            "backward": [e.to_dict() for e in self.backward_entries],
            "verdict": self.verdict,
        }


def check_theorem_sft(
    amalg: AmalgamationRing,
    ceiling: int = 512,
    inject_exponents: Optional[tuple[int, int, int]] = None,
) -> SftTheoremReport:
    """Certify every prime on both sides of the SFT characterization.

    Forward: primes of A and of f(A)+J receive certificates as images of
    amalgamation certificates under the two projections.  Backward: every
    prime of the amalgamation is certified via its P'^f or Qbar^f provenance.
    """
    report = SftTheoremReport(instance=amalg.name)
    A = amalg.A
    S, _, J_S = amalg.fa_plus_j
    pr1, pr2 = amalg.proj_to_A, amalg.proj_to_S

    for R_side, pr, label in ((A, pr1, "-> A"), (S, pr2, "-> f(A)+J")):
        for P in spectrum(R_side, ceiling):
            up = trivial_certificate(ideal_preimage(pr, P))
            down = cert_image(up, pr, provenance="projection image")
            ok, _ = verify_certificate(down)
            report.forward_entries.append(
                PrimeCertEntry(
                    prime=f"{P.describe()} of {R_side.name}",
                    route=f"image of amalgamation certificate {label}",
                    exponent=down.exponent,
                    minimal=minimal_exponent(down.target, down.generators),
                    verified=ok and down.target == P,
                )
            )

    primes_A = {extend_prime_A(amalg, P, verify_prime=False): P for P in spectrum(A, ceiling)}
    primes_B = {extend_prime_B(amalg, Q, verify_prime=False): Q for Q in spectrum(amalg.B, ceiling)}
    certJ = trivial_certificate(J_S)

    for T in spectrum(amalg, ceiling):
        if T in primes_A:
            P = primes_A[T]
            cert = cert_amalg(trivial_certificate(P), certJ, amalg)
            if cert.target != T:
                raise CertificateError("cert_amalg target mismatch against P'^f")
            entry = PrimeCertEntry(
                prime=T.describe(),
                route="P'^f via cert_amalg",
                exponent=cert.exponent,
                minimal=minimal_exponent(cert.target, cert.generators),
                verified=True,
                detail=f"P = {P.describe()}",
            )
        elif T in primes_B:
            Q = primes_B[T]
            trace = cert_qbar(amalg, Q, sub_exponents=inject_exponents)
            entry = PrimeCertEntry(
                prime=T.describe(),
                route="Qbar^f via cert_qbar",
                exponent=trace.combined.exponent,
                minimal=minimal_exponent(trace.combined.target, trace.combined.generators),
                verified=True,
                detail=(
                    f"Q = {Q.describe()}, sub-exponents {trace.exponents}, "
                    f"I_set == f^-1(J): {trace.I_set_equals_f_inv_J}"
                ),
            )
        else:
            entry = PrimeCertEntry(
                prime=T.describe(),
                route="unclassified",
                exponent=0,
                minimal=None,
                verified=False,
                detail="prime matches neither P'^f nor Qbar^f",
            )
        report.backward_entries.append(entry)
    return report
