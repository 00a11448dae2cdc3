"""Corpus generation: the instance families the example constructions use.

Families:
  dupl    -- duplications A bowtie I over small base rings
  quot    -- A bowtie^f J with B = A/I and f the canonical surjection
  triv    -- A bowtie^f J with B = A prop E, f: a -> (a, 0), J = 0 prop E
  boolean -- Z/2 embedded diagonally in (Z/2)^n with J the whole ring

Expression strings double as canonical instance keys; the corpus is sorted
by key, so a fixed configuration yields byte-identical output.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional

from .amalgam import AmalgamationRing, classify_spectrum
from .dsl import elaborate_text, require_amalgamation
from .ideals import Ideal, enumerate_ideals
from .predicates import (
    check_corollary_both_vnr,
    check_corollary_semisimple,
    check_theorem_vnr,
    reduced_characterization_holds,
)
from .rings import verify_ring_axioms
from .sft import CertificateError, check_theorem_sft

ALL_FAMILIES = ("dupl", "quot", "triv", "boolean")

_DUPL_BASES = (
    [f"zmod({n})" for n in range(2, 25)]
    + [
        "prod(zmod(2), zmod(2))",
        "prod(zmod(2), zmod(3))",
        "prod(zmod(3), zmod(3))",
        "prod(zmod(2), zmod(2), zmod(2))",
        "prod(zmod(2), zmod(4))",
        "triv(zmod(2), self)",
        "triv(zmod(3), self)",
        "triv(zmod(4), self)",
    ]
)


def _gen_literal(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_gen_literal(v) for v in value) + ")"
    return str(value)


def ideal_spec_text(I: Ideal) -> str:
    """Canonical ideal-spec for an enumerated ideal, via greedy generators."""
    from .sft import trivial_certificate

    if I.is_zero:
        return "zero"
    if I.is_whole:
        return "full"
    gens = trivial_certificate(I).generators
    return "ideal(" + ", ".join(_gen_literal(I.ring.value(g)) for g in gens) + ")"


def corpus_expressions(
    max_order: int = 256,
    families: Iterable[str] = ALL_FAMILIES,
    seed: int = 0,
    limit: Optional[int] = None,
) -> list[str]:
    families = tuple(families)
    for fam in families:
        if fam not in ALL_FAMILIES:
            raise ValueError(f"unknown family {fam!r}; choose from {ALL_FAMILIES}")
    exprs: set[str] = set()

    if "dupl" in families:
        for base in _DUPL_BASES:
            A = elaborate_text(base)
            for I in enumerate_ideals(A):
                if A.order * len(I) <= max_order:
                    exprs.add(f"dupl({base}, {ideal_spec_text(I)})")

    if "quot" in families:
        for n in range(4, 25):
            A = elaborate_text(f"zmod({n})")
            for I in enumerate_ideals(A):
                if I.is_zero or I.is_whole:
                    continue
                bexpr = f"quot(zmod({n}), {ideal_spec_text(I)})"
                B = elaborate_text(bexpr)
                for J in enumerate_ideals(B):
                    if n * len(J) <= max_order:
                        exprs.add(f"amalg(zmod({n}), {bexpr}, canon, {ideal_spec_text(J)})")

    if "triv" in families:
        for n in range(2, 17):
            if n * n <= max_order:
                exprs.add(f"amalg(zmod({n}), triv(zmod({n}), self), canon, ideal((0, 1)))")
        for n in range(4, 25):
            for d in range(2, n):
                if n % d == 0 and n * d <= max_order:
                    exprs.add(
                        f"amalg(zmod({n}), triv(zmod({n}), quotmod(ideal({d}))), "
                        f"canon, ideal((0, 1)))"
                    )

    if "boolean" in families:
        for n in range(1, 5):
            if 2 * 2**n <= max_order:
                factors = ", ".join(["zmod(2)"] * n)
                exprs.add(f"amalg(zmod(2), prod({factors}), diag, full)")

    out = sorted(exprs)
    if limit is not None and len(out) > limit:
        rng = random.Random(seed)
        out = sorted(rng.sample(out, limit))
    return out


def evaluate_instance(
    amalg: AmalgamationRing,
    ceiling: int = 512,
    inject_exponents: Optional[tuple[int, int, int]] = None,
    seed: int = 0,
) -> dict:
    """Run every corpus check on one amalgamation; deterministic payload."""
    axiom_violations = verify_ring_axioms(amalg, seed=seed)
    vnr = check_theorem_vnr(amalg, ceiling)
    both = check_corollary_both_vnr(amalg)
    semi = check_corollary_semisimple(amalg, ceiling)
    cls = classify_spectrum(amalg, ceiling)
    result = {
        "orders": {"amalgamation": amalg.order, "A": amalg.A.order, "B": amalg.B.order, "J": len(amalg.J)},
        "order_identity_ok": amalg.order == amalg.A.order * len(amalg.J),
        "axiom_violations": axiom_violations,
        "vnr_theorem": vnr.to_dict(),
        "both_vnr_corollary": both.to_dict(),
        "semisimple_corollary": semi.to_dict(),
        "reduced_characterization_ok": reduced_characterization_holds(amalg),
        "spectrum_classification": {
            "ok": cls.ok,
            "spec_size": len(cls.spec_direct),
            "max_size": len(cls.max_direct),
            "discrepancies": cls.discrepancies,
        },
    }
    try:
        sft = check_theorem_sft(amalg, ceiling, inject_exponents)
        result["sft_theorem"] = sft.to_dict()
        result["exponent_pairs"] = [
            {"prime": p, "constructed": c, "minimal": m} for p, c, m in sft.exponent_pairs
        ]
        result["sft_certificate_failure"] = None
    except CertificateError as e:
        result["sft_theorem"] = None
        result["exponent_pairs"] = []
        result["sft_certificate_failure"] = str(e)
    return result


def instance_ok(result: dict) -> bool:
    sft = result["sft_theorem"]
    return (
        result["order_identity_ok"]
        and not result["axiom_violations"]
        and result["vnr_theorem"]["verdict"] == "agree"
        and result["both_vnr_corollary"]["verdict"] == "agree"
        and result["semisimple_corollary"]["verdict"] == "agree"
        and result["reduced_characterization_ok"]
        and result["spectrum_classification"]["ok"]
        and result["sft_certificate_failure"] is None
        and sft is not None
        and sft["verdict"] == "agree"
        and sft["lhs"]["value"]
        and all(e["verified"] for e in sft["forward"] + sft["backward"])
        and all(
            e["minimal"] is not None and e["minimal"] <= e["constructed"]
            for e in result["exponent_pairs"]
        )
    )


def run_corpus(
    max_order: int = 256,
    families: Iterable[str] = ALL_FAMILIES,
    seed: int = 0,
    ceiling: int = 512,
    inject_exponents: Optional[tuple[int, int, int]] = None,
    limit: Optional[int] = None,
) -> dict:
    exprs = corpus_expressions(max_order, families, seed, limit)
    instances = []
    failing: list[str] = []
    for expr in exprs:
        amalg = require_amalgamation(elaborate_text(expr))
        result = evaluate_instance(amalg, ceiling, inject_exponents, seed)
        ok = instance_ok(result)
        if not ok:
            failing.append(expr)
        instances.append({"expression": expr, "ok": ok, **result})
    return {
        "config": {
            "max_order": max_order,
            "families": sorted(set(families)),
            "seed": seed,
            "ceiling": ceiling,
            "inject_exponents": list(inject_exponents) if inject_exponents else None,
            "limit": limit,
        },
        "instances": instances,
        "summary": {
            "count": len(instances),
            "disagreements": failing,
            "all_ok": not failing,
        },
    }
