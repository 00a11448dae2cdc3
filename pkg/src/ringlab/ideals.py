"""Ideal arithmetic, full ideal enumeration, spectrum and nilradical.

Ideals are value objects tied to one ring; cross-ring operations are hard
errors.  The prime test uses the direct two-quantifier scan; a quotient-based
test is kept alongside as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .rings import FiniteRing, QuotientRing, RingElem, RingError, RingHom, make_quotient

DEFAULT_CEILING = 512


class CeilingExceeded(RingError):
    """Ring is larger than the configured enumeration ceiling (a desk-scale
    limit, not a mathematical failure)."""


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    elements: tuple[int, ...]
    generators: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(int(x) for x in self.elements))))
        if self.generators is not None:
            object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))

    @cached_property
    def element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    @cached_property
    def member_mask(self) -> np.ndarray:
        mask = np.zeros(self.ring.order, dtype=np.uint8)
        mask[list(self.elements)] = 1
        mask.setflags(write=False)
        return mask

    def __contains__(self, x) -> bool:
        if isinstance(x, RingElem):
            if x.ring.ring_id != self.ring.ring_id:
                raise RingError("element belongs to a different ring")
            x = x.index
        return x in self.element_set

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.ring.ring_id == other.ring.ring_id
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ring.ring_id, self.elements))

    @property
    def is_zero(self) -> bool:
        return self.elements == (0,)

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.ring.order

    def issubset(self, other: "Ideal") -> bool:
        _check_same_ring(self, other)
        return self.element_set <= other.element_set

    def describe(self) -> str:
        if self.generators is not None:
            inner = ",".join(str(self.ring.value(g)) for g in self.generators)
            return f"({inner or '0'})"
        return "{" + ",".join(str(self.ring.value(x)) for x in self.elements) + "}"

    def __repr__(self):
        return f"<ideal {self.describe()} of {self.ring.name}, size {len(self)}>"


def _check_same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring.ring_id != J.ring.ring_id:
        raise RingError("ideals live in different rings; no implicit coercion")


def _indices(R: FiniteRing, gens: Iterable) -> list[int]:
    out = []
    for g in gens:
        if isinstance(g, RingElem):
            if g.ring.ring_id != R.ring_id:
                raise RingError("generator belongs to a foreign ring")
            out.append(g.index)
        else:
            out.append(int(g))
    for g in out:
        if not 0 <= g < R.order:
            raise RingError(f"generator index {g} outside the carrier of {R.name}")
    return out


def ideal_verification_witness(R: FiniteRing, elements: Sequence[int]) -> Optional[str]:
    """None if the set is an ideal, else a description of the violation."""
    s = set(int(x) for x in elements)
    if 0 not in s:
        return "does not contain 0"
    add, mul, neg = R.tables
    arr = np.array(sorted(s), dtype=np.int64)
    if not set(int(v) for v in neg[arr]) <= s:
        return "not closed under negation"
    sums = set(int(v) for v in add[arr[:, None], arr[None, :]].ravel())
    if not sums <= s:
        return "not closed under addition"
    prods = set(int(v) for v in mul[:, arr].ravel())
    if not prods <= s:
        return "not closed under ambient multiplication"
    return None


def _verified_ideal(R: FiniteRing, elements: Sequence[int], generators=None) -> Ideal:
    why = ideal_verification_witness(R, elements)
    if why is not None:
        raise RingError(f"constructed set is not an ideal of {R.name}: {why}")
    return Ideal(R, tuple(elements), generators)


def ideal_generated(R: FiniteRing, gens: Iterable) -> Ideal:
    """Smallest ideal containing the generators (fixpoint closure)."""
    idx = _indices(R, gens)
    add, mul, neg = R.tables
    elems = _kernels.closure(add, neg, mul, idx)
    return Ideal(R, tuple(elems), tuple(idx))


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, (0,), ())


def whole_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, tuple(range(R.order)), (R.one_index,))


def kernel_ideal(h: RingHom) -> Ideal:
    return _verified_ideal(h.source, h.kernel_indices)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    elems = _kernels.sum_of_sets(I.ring.add_table, I.elements, J.elements)
    gens = None
    if I.generators is not None and J.generators is not None:
        gens = I.generators + J.generators
    return _verified_ideal(I.ring, elems, gens)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    _check_same_ring(I, J)
    return _verified_ideal(I.ring, sorted(I.element_set & J.element_set))


def ideal_image(h: RingHom, I: Ideal) -> Ideal:
    """Forward image under a surjection (images of ideals under non-surjective
    homs need not be ideals; those are rejected)."""
    if I.ring.ring_id != h.source.ring_id:
        raise RingError("ideal does not live in the homomorphism's source")
    if not h.is_surjective:
        raise RingError("ideal_image requires a surjective homomorphism")
    elems = sorted(set(h.apply(x) for x in I.elements))
    gens = tuple(h.apply(g) for g in I.generators) if I.generators is not None else None
    return _verified_ideal(h.target, elems, gens)


def ideal_preimage(h: RingHom, I: Ideal) -> Ideal:
    if I.ring.ring_id != h.target.ring_id:
        raise RingError("ideal does not live in the homomorphism's target")
    elems = [x for x in range(h.source.order) if h.apply(x) in I.element_set]
    return _verified_ideal(h.source, elems)


def enumerate_ideals(R: FiniteRing, ceiling: int = DEFAULT_CEILING) -> list[Ideal]:
    """All ideals of R, each exactly once, in a canonical order.

    Breadth-first join closure over the distinct principal ideals; the join
    of two ideals is their elementwise sum.
    """
    if R.order > ceiling:
        raise CeilingExceeded(
            f"|{R.name}| = {R.order} exceeds the ideal-enumeration ceiling {ceiling}"
        )
    add, mul, neg = R.tables
    principals: list[Ideal] = []
    seen_p: set[tuple[int, ...]] = set()
    for g in range(R.order):
        elems = tuple(_kernels.closure(add, neg, mul, [g]))
        if elems not in seen_p:
            seen_p.add(elems)
            principals.append(Ideal(R, elems, (g,)))
    found: dict[tuple[int, ...], Ideal] = {I.elements: I for I in principals}
    frontier = list(principals)
    while frontier:
        nxt: list[Ideal] = []
        for I in frontier:
            for P in principals:
                if P.element_set <= I.element_set:
                    continue
                elems = tuple(_kernels.sum_of_sets(add, I.elements, P.elements))
                if elems not in found:
                    gens = (I.generators or ()) + (P.generators or ())
                    J = Ideal(R, elems, gens)
                    found[elems] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda I: (len(I), I.elements))


def is_prime(I: Ideal) -> bool:
    return prime_obstruction(I) is None


def prime_obstruction(I: Ideal) -> Optional[tuple[int, int] | str]:
    """None if prime; 'improper' or a witness pair (a, b) otherwise."""
    if I.is_whole:
        return "improper"
    a, b = _kernels.prime_witness(I.ring.mul_table, I.member_mask)
    if a < 0:
        return None
    return (a, b)


def is_maximal(I: Ideal) -> bool:
    """Proper, and adjoining any outside element generates the whole ring."""
    if I.is_whole:
        return False
    R = I.ring
    for a in range(R.order):
        if a in I.element_set:
            continue
        J = ideal_generated(R, list(I.elements) + [a])
        if not J.is_whole:
            return False
    return True


def nilradical(R: FiniteRing) -> Ideal:
    """{x : x^|R| = 0}; verified to be an ideal."""
    mask = _kernels.nilpotent_mask(R.mul_table)
    elems = [i for i in range(R.order) if mask[i]]
    return _verified_ideal(R, elems)


def spectrum(R: FiniteRing, ceiling: int = DEFAULT_CEILING) -> list[Ideal]:
    return [I for I in enumerate_ideals(R, ceiling) if is_prime(I)]


def maximal_spectrum(R: FiniteRing, ceiling: int = DEFAULT_CEILING) -> list[Ideal]:
    return [I for I in enumerate_ideals(R, ceiling) if is_maximal(I)]


# --- independent oracles (slow paths, used as cross-checks) ---------------


def is_prime_via_quotient(I: Ideal) -> bool:
    """Prime iff R/I is an integral domain (a field, in the finite case)."""
    if I.is_whole:
        return False
    Q, _ = make_quotient(I.ring, I)
    mul = Q.mul_table
    nz = np.arange(1, Q.order)
    return bool(np.all(mul[nz[:, None], nz[None, :]] != 0))


def is_maximal_via_quotient(I: Ideal) -> bool:
    """Maximal iff R/I is a field."""
    if I.is_whole:
        return False
    Q, _ = make_quotient(I.ring, I)
    one = Q.one_index
    mul = Q.mul_table
    return all(bool(np.any(mul[a] == one)) for a in range(1, Q.order))


def nilradical_via_primes(R: FiniteRing, ceiling: int = DEFAULT_CEILING) -> Ideal:
    """Intersection of all prime ideals (classical identity, cross-oracle)."""
    primes = spectrum(R, ceiling)
    acc = frozenset(range(R.order))
    for P in primes:
        acc &= P.element_set
    return _verified_ideal(R, sorted(acc))
