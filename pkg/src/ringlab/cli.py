"""Command-line interface.

Exit codes: 0 = all verdicts agree, 1 = mathematical disagreement or failed
certificate (a falsification signal), 2 = usage or resource error.
"""

from __future__ import annotations

import sys
import time
from typing import Optional

import click

from . import _kernels
from .amalgam import classify_spectrum
from .corpus import ALL_FAMILIES, run_corpus
from .dsl import (
    DslError,
    ElabError,
    elaborate_ideal,
    elaborate_text,
    parse_idealspec_text,
    require_amalgamation,
)
from .ideals import CeilingExceeded, enumerate_ideals, is_maximal, is_prime, nilradical
from .predicates import is_boolean, is_field, is_reduced, is_semisimple, is_vnr
from .reports import ideal_elements, make_report, ring_summary, to_json
from .rings import RingError
from .sft import CertificateError, cert_qbar, check_theorem_sft

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2


def _emit(report: dict, fmt: str, text_lines: list[str], started: float) -> None:
    if fmt == "json":
        click.echo(to_json(report), nl=False)
    else:
        for line in text_lines:
            click.echo(line)
        click.echo(f"elapsed: {time.perf_counter() - started:.3f}s  (backend: {_kernels.BACKEND_NAME})")


def _parse_inject(value: Optional[str]) -> Optional[tuple[int, int, int]]:
    if value is None:
        return None
    try:
        parts = tuple(int(v) for v in value.split(","))
    except ValueError:
        raise click.BadParameter("expected three comma-separated integers, e.g. 2,1,1")
    if len(parts) != 3 or any(p < 1 for p in parts):
        raise click.BadParameter("expected three positive integers, e.g. 2,1,1")
    return parts  # type: ignore[return-value]


def _guarded(fn):
    try:
        return fn()
    except CertificateError as e:
        click.echo(f"certificate failure (falsification signal): {e}", err=True)
        sys.exit(EXIT_DISAGREE)
    except (DslError, ElabError, CeilingExceeded, RingError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_USAGE)


_format_opt = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
_ceiling_opt = click.option("--ceiling", type=int, default=512, help="ideal-enumeration cap")
_seed_opt = click.option("--seed", type=int, default=0)


@click.group()
def main():
    """Finite-ring laboratory for amalgamated algebras."""


@main.command()
@click.argument("expr")
@_format_opt
@_ceiling_opt
def analyze(expr: str, fmt: str, ceiling: int):
    """Elaborate an expression and report its basic invariants."""

    def go():
        t0 = time.perf_counter()
        R = elaborate_text(expr)
        ideals = enumerate_ideals(R, ceiling)
        primes = [I for I in ideals if is_prime(I)]
        maxima = [I for I in ideals if is_maximal(I)]
        results = {
            "predicates": {
                "vnr": is_vnr(R),
                "reduced": is_reduced(R),
                "boolean": is_boolean(R),
                "field": is_field(R),
                "semisimple": is_semisimple(R),
            },
            "ideal_count": len(ideals),
            "spec_size": len(primes),
            "max_size": len(maxima),
            "nilradical_size": len(nilradical(R)),
        }
        lines = [f"{R.name}: order {R.order} ({R.kind})"]
        lines += [f"  {k}: {v}" for k, v in results["predicates"].items()]
        lines.append(
            f"  ideals: {len(ideals)}, |Spec|: {len(primes)}, |Max|: {len(maxima)}, "
            f"|Nilp|: {results['nilradical_size']}"
        )
        _emit(make_report("analyze", expr, R, results), fmt, lines, t0)
        return EXIT_OK

    sys.exit(_guarded(go))


@main.command()
@click.argument("expr")
@_format_opt
@_ceiling_opt
def spectrum(expr: str, fmt: str, ceiling: int):
    """Prime and maximal spectrum; for amalgamations, the transfer-map
    classification with any discrepancies itemized."""

    def go():
        t0 = time.perf_counter()
        R = elaborate_text(expr)
        if R.kind == "amalgamation":
            cls = classify_spectrum(require_amalgamation(R), ceiling)
            results = {
                "spec": [ideal_elements(I) for I in cls.spec_direct],
                "max": [ideal_elements(I) for I in cls.max_direct],
                "classification_ok": cls.ok,
                "discrepancies": cls.discrepancies,
                "provenance": {
                    I.describe(): sorted(labels) for I, labels in sorted(
                        cls.spec_classified.items(), key=lambda kv: kv[0].elements
                    )
                },
            }
            lines = [f"{R.name}: |Spec| = {len(cls.spec_direct)}, |Max| = {len(cls.max_direct)}"]
            lines.append(f"classification: {'consistent' if cls.ok else 'DISCREPANT'}")
            lines.extend(f"  !! {d}" for d in cls.discrepancies)
            _emit(make_report("spectrum", expr, R, results), fmt, lines, t0)
            return EXIT_OK if cls.ok else EXIT_DISAGREE
        ideals = enumerate_ideals(R, ceiling)
        primes = [I for I in ideals if is_prime(I)]
        maxima = [I for I in ideals if is_maximal(I)]
        results = {
            "spec": [ideal_elements(I) for I in primes],
            "max": [ideal_elements(I) for I in maxima],
        }
        lines = [f"{R.name}: |Spec| = {len(primes)}, |Max| = {len(maxima)}"]
        lines.extend(f"  prime: {I.describe()}{' (maximal)' if is_maximal(I) else ''}" for I in primes)
        _emit(make_report("spectrum", expr, R, results), fmt, lines, t0)
        return EXIT_OK

    sys.exit(_guarded(go))


@main.group()
def check():
    """Theorem checkers."""


@check.command("vnr")
@click.argument("expr")
@_format_opt
@_ceiling_opt
def check_vnr(expr: str, fmt: str, ceiling: int):
    """Von Neumann regularity characterization for an amalgamation."""
    from .predicates import check_theorem_vnr

    def go():
        t0 = time.perf_counter()
        amalg = require_amalgamation(elaborate_text(expr))
        report = check_theorem_vnr(amalg, ceiling)
        lines = [f"{amalg.name}:", f"  lhs  {report.lhs_label}: {report.lhs}"]
        for c in report.conditions:
            lines.append(f"  cond {c.label}: {c.value}" + (f"  [{c.witness}]" if c.witness else ""))
        lines.append(f"  verdict: {report.verdict}")
        _emit(make_report("check.vnr", expr, amalg, report.to_dict()), fmt, lines, t0)
        return EXIT_OK if report.agrees else EXIT_DISAGREE

    sys.exit(_guarded(go))


@check.command("sft")
@click.argument("expr")
@_format_opt
@_ceiling_opt
@click.option("--inject-exponents", default=None, help="force cert_qbar sub-exponents, e.g. 2,1,1")
def check_sft(expr: str, fmt: str, ceiling: int, inject_exponents: Optional[str]):
    """SFT characterization: certify every prime of an amalgamation."""
    inject = _parse_inject(inject_exponents)

    def go():
        t0 = time.perf_counter()
        amalg = require_amalgamation(elaborate_text(expr))
        report = check_theorem_sft(amalg, ceiling, inject)
        lines = [f"{amalg.name}: verdict {report.verdict}"]
        for e in report.backward_entries:
            lines.append(
                f"  prime {e.prime}: {e.route}, k = {e.exponent} (minimal {e.minimal}), "
                f"{'ok' if e.verified else 'FAILED'}"
            )
        _emit(make_report("check.sft", expr, amalg, report.to_dict()), fmt, lines, t0)
        return EXIT_OK if report.agrees and report.all_certified else EXIT_DISAGREE

    sys.exit(_guarded(go))


@main.command()
@click.argument("expr")
@click.option("--prime", "prime_spec", required=True, help="ideal-spec for a prime of B")
@_format_opt
@_ceiling_opt
@click.option("--inject-exponents", default=None, help="force cert_qbar sub-exponents, e.g. 2,1,1")
def cert(expr: str, prime_spec: str, fmt: str, ceiling: int, inject_exponents: Optional[str]):
    """Build and verify the Qbar^f certificate trace for one prime of B."""
    inject = _parse_inject(inject_exponents)

    def go():
        t0 = time.perf_counter()
        amalg = require_amalgamation(elaborate_text(expr))
        Q = elaborate_ideal(amalg.B, parse_idealspec_text(prime_spec))
        trace = cert_qbar(amalg, Q, sub_exponents=inject)
        results = {
            "prime": ideal_elements(Q),
            "Q0": ideal_elements(trace.Q0) if trace.Q0 is not None else None,
            "I_set": ideal_elements(trace.I_set),
            "I_set_equals_f_inv_J": trace.I_set_equals_f_inv_J,
            "Q1": ideal_elements(trace.Q1),
            "sub_exponents": list(trace.exponents),
            "generators": [amalg.format_element(g) for g in trace.combined.generators],
            "exponent": trace.combined.exponent,
            "verified": True,
        }
        lines = [
            f"{amalg.name}, Q = {Q.describe()}:",
            f"  sub-exponents {trace.exponents}, combined exponent {trace.combined.exponent}",
            f"  generators: {results['generators']}",
            f"  I_set == f^-1(J): {trace.I_set_equals_f_inv_J}",
            "  certificate verifies",
        ]
        _emit(make_report("cert", expr, amalg, results), fmt, lines, t0)
        return EXIT_OK

    sys.exit(_guarded(go))


@main.command("corpus")
@click.option("--max-order", type=int, default=256)
@click.option(
    "--families",
    default=",".join(ALL_FAMILIES),
    help="comma-separated subset of " + ",".join(ALL_FAMILIES),
)
@_format_opt
@_ceiling_opt
@_seed_opt
@click.option("--inject-exponents", default=None, help="force cert_qbar sub-exponents, e.g. 2,1,1")
@click.option("--limit", type=int, default=None, help="seeded subsample size")
def corpus_cmd(
    max_order: int,
    families: str,
    fmt: str,
    ceiling: int,
    seed: int,
    inject_exponents: Optional[str],
    limit: Optional[int],
):
    """Generate the instance corpus and aggregate every theorem verdict."""
    inject = _parse_inject(inject_exponents)
    fams = tuple(f.strip() for f in families.split(",") if f.strip())

    def go():
        t0 = time.perf_counter()
        results = run_corpus(max_order, fams, seed, ceiling, inject, limit)
        report = {
            "schema_version": 1,
            "command": "corpus",
            "config": results["config"],
            "results": {"instances": results["instances"], "summary": results["summary"]},
        }
        summary = results["summary"]
        lines = [f"corpus: {summary['count']} instances"]
        if summary["all_ok"]:
            lines.append("all verdicts agree; all certificates verify")
        else:
            lines.append(f"{len(summary['disagreements'])} failing instances:")
            lines.extend(f"  !! {e}" for e in summary["disagreements"])
        _emit(report, fmt, lines, t0)
        return EXIT_OK if summary["all_ok"] else EXIT_DISAGREE

    sys.exit(_guarded(go))


if __name__ == "__main__":
    main()
