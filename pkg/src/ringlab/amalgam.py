"""The amalgamation A bowtie^f J and its prime-ideal transfer maps.

Carrier: {(a, f(a)+j) : a in A, j in J}, a subring of A x B.  Elements are
indexed canonically by (index of a, position of j in J's enumeration); the
witness j is recovered as f(a)+j - f(a).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .ideals import (
    Ideal,
    ideal_verification_witness,
    is_maximal,
    is_prime,
    spectrum,
)
from .rings import (
    FiniteRing,
    RingError,
    RingHom,
    SubringView,
    identity_hom,
    make_quotient,
)


class AmalgamationRing(FiniteRing):
    kind = "amalgamation"

    def __init__(self, A: FiniteRing, B: FiniteRing, f: RingHom, J: Ideal):
        if f.source.ring_id != A.ring_id or f.target.ring_id != B.ring_id:
            raise RingError("homomorphism endpoints do not match A and B")
        if J.ring.ring_id != B.ring_id:
            raise RingError("J is not an ideal of B")
        why = ideal_verification_witness(B, J.elements)
        if why is not None:
            raise RingError(f"J is not an ideal of B: {why}")
        nJ = len(J)
        order = A.order * nJ
        super().__init__(order, f"{A.name} bowtie^{f.name} {J.describe()}")
        self.A = A
        self.B = B
        self.f = f
        self.J = J

        jelems = np.array(J.elements, dtype=np.int64)
        idx = np.arange(order)
        a_parts = idx // nJ
        b_parts = B.add_table[f.table[a_parts], jelems[idx % nJ]].astype(np.int64)
        self.a_parts = a_parts
        self.b_parts = b_parts
        lookup = np.full((A.order, B.order), -1, dtype=np.int64)
        lookup[a_parts, b_parts] = idx
        if int((lookup >= 0).sum()) != order:
            raise RingError("(a, j) -> (a, f(a)+j) failed to be a bijection onto the carrier")
        self.pair_lookup = lookup

    def _build_tables(self):
        A, B = self.A, self.B
        a, b = self.a_parts, self.b_parts
        add = self.pair_lookup[A.add_table[a[:, None], a[None, :]], B.add_table[b[:, None], b[None, :]]]
        mul = self.pair_lookup[A.mul_table[a[:, None], a[None, :]], B.mul_table[b[:, None], b[None, :]]]
        neg = self.pair_lookup[A.neg_table[a], B.neg_table[b]]
        if add.min() < 0 or mul.min() < 0 or neg.min() < 0:
            raise RingError("carrier is not closed under the componentwise operations")
        return add, mul, neg

    @cached_property
    def one_index(self) -> int:
        i = int(self.pair_lookup[self.A.one_index, self.B.one_index])
        if i < 0:
            raise RingError("carrier does not contain (1, 1)")
        return i

    def a_part(self, i: int) -> int:
        return int(self.a_parts[i])

    def b_part(self, i: int) -> int:
        return int(self.b_parts[i])

    def j_part(self, i: int) -> int:
        """The unique j in J with b = f(a)+j."""
        B = self.B
        fa = self.f.apply(self.a_part(i))
        return int(B.add_table[self.b_part(i), B.neg_table[fa]])

    def index_of_pair(self, a: int, b: int) -> int:
        i = int(self.pair_lookup[a, b])
        if i < 0:
            raise RingError("pair does not lie in the amalgamation carrier")
        return i

    def value(self, i: int):
        return (self.A.value(self.a_part(i)), self.B.value(self.b_part(i)))

    def format_element(self, i: int) -> str:
        return f"({self.A.format_element(self.a_part(i))}, {self.B.format_element(self.b_part(i))})"

    def resolve(self, literal) -> int:
        if not isinstance(literal, tuple) or len(literal) != 2:
            raise RingError(f"amalgamation element literal must be a pair, got {literal!r}")
        a, b = literal
        return self.index_of_pair(self.A.resolve(a), self.B.resolve(b))

    # --- structure maps ---------------------------------------------------

    @cached_property
    def proj_to_A(self) -> RingHom:
        return RingHom(self, self.A, self.a_parts, name="pr1")

    @cached_property
    def fa_plus_j(self) -> tuple[SubringView, RingHom, Ideal]:
        """The subring f(A)+J of B, its inclusion into B, and J inside it."""
        return subring_fA_plus_J(self.f, self.J)

    @cached_property
    def proj_to_S(self) -> RingHom:
        """Second projection onto f(A)+J; surjective by construction."""
        S, _, _ = self.fa_plus_j
        return RingHom(self, S, S.lookup[self.b_parts], name="pr2")

    @cached_property
    def s_mod_j(self):
        """(f(A)+J)/J with its canonical surjection, or None when J = f(A)+J
        (then J contains 1, so J = B and the quotient is the zero ring)."""
        _, _, J_S = self.fa_plus_j
        if J_S.is_whole:
            return None
        return make_quotient(J_S.ring, J_S)

    def verify_structure(self) -> None:
        """Per-instance invariants: order, projection kernel, quotient order."""
        if self.order != self.A.order * len(self.J):
            raise RingError("order != |A| * |J|")
        pr1 = self.proj_to_A
        if not pr1.is_surjective:
            raise RingError("first projection is not surjective")
        ker_b = sorted(self.b_part(i) for i in pr1.kernel_indices)
        if tuple(ker_b) != self.J.elements:
            raise RingError("kernel of the first projection is not {0} x J")
        pr2 = self.proj_to_S
        if not pr2.is_surjective:
            raise RingError("second projection is not surjective onto f(A)+J")


def make_amalgamation(A: FiniteRing, B: FiniteRing, f: RingHom, J: Ideal) -> AmalgamationRing:
    amalg = AmalgamationRing(A, B, f, J)
    amalg.verify_structure()
    return amalg


def make_duplication(A: FiniteRing, I: Ideal) -> AmalgamationRing:
    """A bowtie I: the amalgamated duplication, B = A and f = identity."""
    if I.ring.ring_id != A.ring_id:
        raise RingError("I is not an ideal of A")
    return make_amalgamation(A, A, identity_hom(A), I)


def subring_fA_plus_J(f: RingHom, J: Ideal) -> tuple[SubringView, RingHom, Ideal]:
    """The subring {f(a)+j} of B, its inclusion, and J as an ideal of it."""
    B = f.target
    if J.ring.ring_id != B.ring_id:
        raise RingError("J is not an ideal of the homomorphism's target")
    badd = B.add_table
    members = sorted(set(int(badd[f.apply(a), j]) for a in range(f.source.order) for j in J.elements))
    S = SubringView(B, members, name=f"f({f.source.name})+{J.describe()}")
    S.tables  # force the closure check
    incl = RingHom(S, B, S.members, name="incl")
    J_S_elems = [int(S.lookup[j]) for j in J.elements]
    why = ideal_verification_witness(S, J_S_elems)
    if why is not None:
        raise RingError(f"J fails to be an ideal of f(A)+J: {why}")
    return S, incl, Ideal(S, tuple(J_S_elems), None)


def extend_prime_A(amalg: AmalgamationRing, P: Ideal, verify_prime: bool = True) -> Ideal:
    """P'^f = {(p, f(p)+j) : p in P, j in J}, an ideal of the amalgamation."""
    if P.ring.ring_id != amalg.A.ring_id:
        raise RingError("P is not an ideal of A")
    why = ideal_verification_witness(amalg.A, P.elements)
    if why is not None:
        raise RingError(f"P is not an ideal of A: {why}")
    elems = [i for i in range(amalg.order) if amalg.a_part(i) in P.element_set]
    why = ideal_verification_witness(amalg, elems)
    if why is not None:
        raise RingError(f"P'^f is not an ideal: {why}")
    out = Ideal(amalg, tuple(elems), None)
    if verify_prime and is_prime(P) and not is_prime(out):
        raise RingError(f"P'^f failed to be prime for prime P = {P.describe()}")
    return out


def extend_prime_B(amalg: AmalgamationRing, Q: Ideal, verify_prime: bool = True) -> Ideal:
    """Qbar^f = {(a, f(a)+j) : f(a)+j in Q}, an ideal of the amalgamation."""
    if Q.ring.ring_id != amalg.B.ring_id:
        raise RingError("Q is not an ideal of B")
    why = ideal_verification_witness(amalg.B, Q.elements)
    if why is not None:
        raise RingError(f"Q is not an ideal of B: {why}")
    elems = [i for i in range(amalg.order) if amalg.b_part(i) in Q.element_set]
    why = ideal_verification_witness(amalg, elems)
    if why is not None:
        raise RingError(f"Qbar^f is not an ideal: {why}")
    out = Ideal(amalg, tuple(elems), None)
    if verify_prime and is_prime(Q) and not amalg.J.issubset(Q) and not is_prime(out):
        raise RingError(f"Qbar^f failed to be prime for prime Q = {Q.describe()} with J not in Q")
    return out


@dataclass
class SpectrumClassification:
    """Direct Spec/Max of the amalgamation versus the transfer-map candidates."""

    amalg: AmalgamationRing
    spec_direct: list[Ideal]
    max_direct: list[Ideal]
    spec_classified: dict[Ideal, list[str]]
    max_classified: dict[Ideal, list[str]]
    spec_missing: list[Ideal] = field(default_factory=list)
    spec_extra: list[Ideal] = field(default_factory=list)
    max_missing: list[Ideal] = field(default_factory=list)
    max_extra: list[Ideal] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.spec_missing or self.spec_extra or self.max_missing or self.max_extra)

    @property
    def discrepancies(self) -> list[str]:
        out = []
        for label, ids in (
            ("prime not classified", self.spec_missing),
            ("classified candidate not prime", self.spec_extra),
            ("maximal not classified", self.max_missing),
            ("classified candidate not maximal", self.max_extra),
        ):
            out.extend(f"{label}: {I.describe()}" for I in ids)
        return out


def classify_spectrum(amalg: AmalgamationRing, ceiling: int = 512) -> SpectrumClassification:
    """Compare the directly enumerated Spec/Max with {P'^f} and {Qbar^f : J not in Q}."""
    spec_direct = spectrum(amalg, ceiling)
    max_direct = [I for I in spec_direct if is_maximal(I)]

    spec_cls: dict[Ideal, list[str]] = {}
    max_cls: dict[Ideal, list[str]] = {}
    for P in spectrum(amalg.A, ceiling):
        I = extend_prime_A(amalg, P, verify_prime=False)
        spec_cls.setdefault(I, []).append(f"P'^f from P={P.describe()}")
        if is_maximal(P):
            max_cls.setdefault(I, []).append(f"P'^f from P={P.describe()}")
    for Q in spectrum(amalg.B, ceiling):
        if amalg.J.issubset(Q):
            continue
        I = extend_prime_B(amalg, Q, verify_prime=False)
        spec_cls.setdefault(I, []).append(f"Qbar^f from Q={Q.describe()}")
        if is_maximal(Q):
            max_cls.setdefault(I, []).append(f"Qbar^f from Q={Q.describe()}")

    out = SpectrumClassification(amalg, spec_direct, max_direct, spec_cls, max_cls)
    direct_set, cls_set = set(spec_direct), set(spec_cls)
    out.spec_missing = sorted(direct_set - cls_set, key=lambda I: I.elements)
    out.spec_extra = sorted(cls_set - direct_set, key=lambda I: I.elements)
    direct_set, cls_set = set(max_direct), set(max_cls)
    out.max_missing = sorted(direct_set - cls_set, key=lambda I: I.elements)
    out.max_extra = sorted(cls_set - direct_set, key=lambda I: I.elements)
    return out
