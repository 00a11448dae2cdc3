"""Ring-level decision procedures and the regularity theorem checkers.

Each checker brute-forces the left-hand property of the amalgamation and
evaluates the right-hand conditions literally, reporting witnesses for every
false condition and whether the two sides agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _kernels
from .amalgam import AmalgamationRing
from .ideals import Ideal, is_maximal, nilradical, spectrum
from .rings import FiniteRing


def vnr_obstruction(R: FiniteRing) -> Optional[int]:
    """First a with no x satisfying a*x*a == a, or None if regular."""
    w = _kernels.vnr_witness(R.mul_table)
    return None if w < 0 else w


def is_vnr(R: FiniteRing) -> bool:
    """Von Neumann regular: every a has some x with a*x*a == a."""
    return vnr_obstruction(R) is None


def is_reduced(R: FiniteRing) -> bool:
    return nilradical(R).is_zero


def is_boolean(R: FiniteRing) -> bool:
    """x*x == x for every x."""
    mul = R.mul_table
    idx = np.arange(R.order)
    return bool(np.all(mul[idx, idx] == idx))


def is_field(R: FiniteRing) -> bool:
    """Every nonzero element has a multiplicative inverse."""
    mul = R.mul_table
    one = R.one_index
    return bool(np.all(np.any(mul[1:] == one, axis=1)))


def is_noetherian(R: FiniteRing) -> bool:
    # Every finite ring is Noetherian; kept as an explicit, labeled leg.
    return True


def is_semisimple(R: FiniteRing) -> bool:
    """Noetherian and Von Neumann regular; the Noetherian leg is trivially
    true for finite rings."""
    return is_noetherian(R) and is_vnr(R)


@dataclass
class Condition:
    label: str
    value: bool
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        return {"label": self.label, "value": self.value, "witness": self.witness}


@dataclass
class TheoremReport:
    """Brute-forced lhs versus the characterization's conditions.

    mode 'iff': verdict agrees iff lhs equals the conjunction of conditions.
    mode 'implies': verdict agrees iff the conjunction implies lhs.
    """

    theorem: str
    instance: str
    lhs_label: str
    lhs: bool
    conditions: list[Condition] = field(default_factory=list)
    mode: str = "iff"

    @property
    def rhs(self) -> bool:
        return all(c.value for c in self.conditions)

    @property
    def verdict(self) -> str:
        if self.mode == "implies":
            return "agree" if (not self.rhs or self.lhs) else "disagree"
        return "agree" if self.lhs == self.rhs else "disagree"

    @property
    def agrees(self) -> bool:
        return self.verdict == "agree"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": self.instance,
            "mode": self.mode,
            "lhs": {"label": self.lhs_label, "value": self.lhs},
            "conditions": [c.to_dict() for c in self.conditions],
            "verdict": self.verdict,
        }


def _nilp_cap_j_condition(amalg: AmalgamationRing) -> Condition:
    nil_b = nilradical(amalg.B)
    meet = sorted(nil_b.element_set & amalg.J.element_set)
    cond = Condition("Nilp(B) meet J = {0}", meet == [0])
    if not cond.value:
        w = next(x for x in meet if x != 0)
        cond.witness = f"nonzero nilpotent {amalg.B.format_element(w)} in J"
    return cond


def _primes_avoiding_j_maximal(amalg: AmalgamationRing, ceiling: int) -> Condition:
    cond = Condition("every prime of B not containing J is maximal", True)
    for Q in spectrum(amalg.B, ceiling):
        if amalg.J.issubset(Q):
            continue
        if not is_maximal(Q):
            cond.value = False
            cond.witness = f"prime {Q.describe()} avoids J but is not maximal"
            break
    return cond


def check_theorem_vnr(amalg: AmalgamationRing, ceiling: int = 512) -> TheoremReport:
    """Regularity of A bowtie^f J versus the three-condition characterization."""
    report = TheoremReport(
        theorem="vnr_characterization",
        instance=amalg.name,
        lhs_label="A bowtie^f J is Von Neumann regular",
        lhs=is_vnr(amalg),
    )
    w = vnr_obstruction(amalg.A)
    c1 = Condition("A is Von Neumann regular", w is None)
    if w is not None:
        c1.witness = f"a = {amalg.A.format_element(w)} has no quasi-inverse"
    report.conditions = [
        c1,
        _nilp_cap_j_condition(amalg),
        _primes_avoiding_j_maximal(amalg, ceiling),
    ]
    return report


def check_corollary_both_vnr(amalg: AmalgamationRing) -> TheoremReport:
    """If A and B are both regular then so is the amalgamation (implication only)."""
    report = TheoremReport(
        theorem="both_vnr_implies_vnr",
        instance=amalg.name,
        lhs_label="A bowtie^f J is Von Neumann regular",
        lhs=is_vnr(amalg),
        mode="implies",
    )
    report.conditions = [
        Condition("A is Von Neumann regular", is_vnr(amalg.A)),
        Condition("B is Von Neumann regular", is_vnr(amalg.B)),
    ]
    return report


def check_corollary_semisimple(amalg: AmalgamationRing, ceiling: int = 512) -> TheoremReport:
    """Semisimplicity characterization: the regularity conditions plus the
    (finitely trivial) Noetherian condition on f(A)+J."""
    report = TheoremReport(
        theorem="semisimple_characterization",
        instance=amalg.name,
        lhs_label="A bowtie^f J is semisimple",
        lhs=is_semisimple(amalg),
    )
    S, _, _ = amalg.fa_plus_j
    w = vnr_obstruction(amalg.A)
    c1 = Condition("A is Von Neumann regular", w is None)
    if w is not None:
        c1.witness = f"a = {amalg.A.format_element(w)} has no quasi-inverse"
    report.conditions = [
        c1,
        _nilp_cap_j_condition(amalg),
        _primes_avoiding_j_maximal(amalg, ceiling),
        Condition("f(A)+J is Noetherian (every finite ring is)", is_noetherian(S)),
    ]
    return report


def reduced_characterization_holds(amalg: AmalgamationRing) -> bool:
    """is_reduced(A bowtie^f J) iff is_reduced(A) and Nilp(B) meet J = {0}."""
    rhs = is_reduced(amalg.A) and _nilp_cap_j_condition(amalg).value
    return is_reduced(amalg) == rhs
