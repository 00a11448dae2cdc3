"""Acceptance gate: end-to-end checks over the generated instance corpus.

Each test prints a single pass/fail line (visible with ``pytest -s`` or in
captured output) and asserts the same condition, so the suite doubles as a
human-readable scorecard.
"""

import random
import sys
import time

import pytest
from click.testing import CliRunner

from ringlab.cli import main as cli_main
from ringlab.corpus import ALL_FAMILIES, run_corpus
from ringlab.dsl import DslError, elaborate_text, parse, print_expr
from ringlab.ideals import (
    enumerate_ideals,
    is_maximal,
    is_maximal_via_quotient,
    nilradical,
    nilradical_via_primes,
)
from ringlab.predicates import is_reduced, is_vnr
from ringlab.reports import to_json

from test_dsl import GOLDEN


def _report(num: int, description: str, ok: bool) -> None:
    line = f"criterion {num:2d} [{'PASS' if ok else 'FAIL'}] {description}"
    print(line, file=sys.stderr, flush=True)
    assert ok, line


@pytest.fixture(scope="module")
def corpus():
    t0 = time.perf_counter()
    results = run_corpus(256, ALL_FAMILIES, 0, 512, None, None)
    results["elapsed"] = time.perf_counter() - t0
    return results


def test_criterion_01_vnr_equivalence_over_corpus(corpus):
    insts = corpus["instances"]
    big_enough = len(insts) >= 200
    all_agree = all(i["vnr_theorem"]["verdict"] == "agree" for i in insts)
    fast_enough = corpus["elapsed"] < 60
    _report(
        1,
        f"regularity characterization agrees on {len(insts)} instances "
        f"in {corpus['elapsed']:.1f}s",
        big_enough and all_agree and fast_enough,
    )
    # documented caveat: condition (3) is vacuous at finite scale
    cond3 = [c for i in insts for c in i["vnr_theorem"]["conditions"] if "prime" in c["label"]]
    assert all(c["value"] for c in cond3)


def test_criterion_02_reduced_characterization(corpus):
    ok = all(i["reduced_characterization_ok"] for i in corpus["instances"])
    _report(2, "reduced iff (A reduced and Nilp(B) meet J = 0) on 100% of corpus", ok)


def test_criterion_03_spectrum_classification(corpus):
    ok = all(
        i["spectrum_classification"]["ok"] and not i["spectrum_classification"]["discrepancies"]
        for i in corpus["instances"]
    )
    _report(3, "Spec/Max transfer classification has zero discrepancies", ok)


def test_criterion_04_boolean_diagonal_examples():
    ok = True
    for n in (1, 2, 3, 4):
        inner = ", ".join(["zmod(2)"] * n)
        R = elaborate_text(f"amalg(zmod(2), prod({inner}), diag, full)")
        ok = ok and is_vnr(R)
    _report(4, "diagonal-into-(Z/2)^n amalgamation is regular for n = 1..4", ok)


def test_criterion_05_condition2_falsifier():
    from ringlab.predicates import check_theorem_vnr

    amalg = elaborate_text("amalg(zmod(2), triv(zmod(2), self), canon, ideal((0, 1)))")
    rep = check_theorem_vnr(amalg)
    c2 = rep.conditions[1]
    ok = (
        rep.lhs is False
        and c2.value is False
        and "(0, 1)" in (c2.witness or "")
        and rep.verdict == "agree"
    )
    _report(5, "square-zero falsifier: lhs false, condition (2) false with witness (0, 1)", ok)


def test_criterion_06_certificate_soundness_and_injection(corpus):
    no_failures = all(i["sft_certificate_failure"] is None for i in corpus["instances"])
    all_verified = all(
        e["verified"]
        for i in corpus["instances"]
        for e in i["sft_theorem"]["forward"] + i["sft_theorem"]["backward"]
    )
    # a deliberately bad certificate request must exit with the falsification code
    bad = CliRunner().invoke(
        cli_main, ["cert", "dupl(zmod(12), ideal(2))", "--prime", "ideal(4)"]
    )
    exits_one = bad.exit_code == 1

    injected = run_corpus(256, ALL_FAMILIES, 0, 512, (2, 1, 1), None)
    qbar4 = [
        (i["expression"], e["prime"])
        for i in injected["instances"]
        for e in i["sft_theorem"]["backward"]
        if e["route"] == "Qbar^f via cert_qbar" and e["exponent"] == 4 and e["verified"]
    ]
    enough_injected = len({expr for expr, _ in qbar4}) >= 20
    _report(
        6,
        f"every combinator certificate verifies; injected (2,1,1) gives exponent 4 "
        f"on {len({e for e, _ in qbar4})} instances",
        no_failures and all_verified and exits_one and enough_injected,
    )


def test_criterion_07_sft_both_directions(corpus):
    ok = all(
        i["sft_theorem"]["verdict"] == "agree"
        and all(e["verified"] for e in i["sft_theorem"]["forward"])
        and all(e["verified"] for e in i["sft_theorem"]["backward"])
        and i["sft_theorem"]["forward"]
        and i["sft_theorem"]["backward"]
        for i in corpus["instances"]
    )
    _report(7, "every prime certified constructively in both directions", ok)


def test_criterion_08_cross_oracle_identities(corpus):
    ok = True
    for inst in corpus["instances"]:
        R = elaborate_text(inst["expression"])
        orders = inst["orders"]
        ok = ok and orders["amalgamation"] == orders["A"] * orders["J"]
        ok = ok and is_vnr(R) == is_reduced(R)
        ok = ok and nilradical(R) == nilradical_via_primes(R)
        for I in enumerate_ideals(R):
            if I.is_whole:
                continue
            ok = ok and is_maximal(I) == is_maximal_via_quotient(I)
        if not ok:
            break
    _report(8, "cross-oracle identities hold on every corpus ring", ok)


def test_criterion_09_exponent_bound_table(corpus):
    pairs = [
        (i["expression"], p["prime"], p["constructed"], p["minimal"])
        for i in corpus["instances"]
        for p in i["exponent_pairs"]
    ]
    ok = all(m is not None and m <= c for _, _, c, m in pairs)
    print("\n  (constructed, minimal) exponent pairs, first 20 of "
          f"{len(pairs)}:", file=sys.stderr)
    for expr, prime, c, m in pairs[:20]:
        print(f"    {c:3d} {m:3d}  {prime}  in  {expr}", file=sys.stderr)
    _report(9, f"minimal exponent <= constructed exponent on all {len(pairs)} certificates", ok)


def test_criterion_10_parser_robustness():
    round_trip = all(print_expr(parse(t)) == t and parse(print_expr(parse(t))) == parse(t) for t in GOLDEN)
    assert len(GOLDEN) == 20

    rng = random.Random(20260823)
    alphabet = "abcdefghijklmnopqrstuvwxyz0123456789(),:[] "
    crashes = 0
    for _ in range(10_000):
        s = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 40)))
        try:
            parse(s)
        except DslError:
            pass
        except Exception:
            crashes += 1

    a = run_corpus(256, ALL_FAMILIES, 42, 512, None, 30)
    b = run_corpus(256, ALL_FAMILIES, 42, 512, None, 30)
    deterministic = to_json(a) == to_json(b)
    _report(
        10,
        "parser round-trips 20 golden expressions, survives 10,000 fuzz inputs, "
        "corpus is byte-deterministic",
        round_trip and crashes == 0 and deterministic,
    )
