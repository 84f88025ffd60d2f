"""Acceptance criteria, one test per criterion, all exact (zero tolerance).

Each test prints a single PASS/FAIL line; run with -s (or check the
captured output) to see the acceptance summary.
"""

import random
import time

from cliffqp.canonical import (
    base_change_report,
    check_representative_independence,
    check_semitrace_defining,
    check_sl_into_alt,
    correspondence_with_q_wedge,
    degree4_alt_report,
    degree4_no_canonical,
    rho_xi_check,
)
from cliffqp.clifford import (
    classify_even_involution,
    involution_suite,
    involution_type_matches,
    relation_suite,
)
from cliffqp.forms import b_wedge_gram, classify_bilinear, gram_agreement_suite, q_wedge_form
from cliffqp.group import pgo_invariance
from cliffqp.rings import GF2, GF3, GF4, GF5, QQ, ZZ

PALETTE = (GF2, GF3, GF4, QQ)
PALETTE_FIELDS = (GF2, GF3, GF4, GF5, QQ)
ALL_PALETTE = (GF2, GF3, GF4, GF5, QQ, ZZ)


def rng_for(tag: str) -> random.Random:
    return random.Random(f"acceptance:{tag}")


def report(number: int, name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"ACCEPTANCE {number:02d} {name}: {status}{suffix}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def test_criterion_01_relation_suite():
    failures = []
    for n in range(1, 7):
        for ring in PALETTE:
            out = relation_suite(ring, n, rng_for(f"rel:{n}:{ring.name}"), trials=100)
            if not out.passed:
                failures.append(f"n={n} {ring.name}: {out.details[:1]}")
    report(1, "relation-suite", not failures, "n=1..6 x {gf2,gf3,gf4,q}, 100 random m each")


def test_criterion_02_gram_involution_suite():
    failures = []
    for n in range(1, 6):
        for ring in PALETTE:
            if not gram_agreement_suite(ring, n).passed:
                failures.append(f"gram n={n} {ring.name}")
            rng = rng_for(f"tau:{n}:{ring.name}")
            pairs = 100 if n <= 4 else 0
            if not involution_suite(ring, n, rng if pairs else None, pairs=pairs).passed:
                failures.append(f"involution n={n} {ring.name}")
    for n in range(2, 6):
        for ring in PALETTE:
            labels = classify_bilinear(b_wedge_gram(ring, n))
            want = "symmetric" if n % 4 in (0, 1) else "alternating"
            if want not in labels:
                failures.append(f"classification n={n} {ring.name}: {sorted(labels)}")
            if ring.char != 2:
                exact = {"symmetric"} if n % 4 in (0, 1) else {"skew", "alternating"}
                if labels != exact:
                    failures.append(f"classification n={n} {ring.name} not exact: {sorted(labels)}")
    report(2, "gram-involution-suite", not failures, "; ".join(failures[:3]))


def test_criterion_03_polar_identity():
    failures = []
    for n in (1, 4, 5):  # n = 0, 1 mod 4 within desk scale
        for ring in ALL_PALETTE:
            if q_wedge_form(ring, n).polar_gram() != b_wedge_gram(ring, n):
                failures.append(f"polar identity failed n={n} {ring.name}")
    for n in range(1, 6):
        for ring in (GF2, GF4):
            if q_wedge_form(ring, n).polar_gram() != b_wedge_gram(ring, n):
                failures.append(f"polar identity failed n={n} {ring.name}")
    if q_wedge_form(GF3, 2).polar_gram() == b_wedge_gram(GF3, 2):
        failures.append("negative control n=2 gf3 unexpectedly equal")
    report(3, "polar-identity", not failures, "incl. negative control n=2 gf3")


def test_criterion_04_involution_type_table():
    failures = []
    for n in (2, 3, 4, 5):
        for ring in (GF2, GF3, QQ):
            rep = classify_even_involution(ring, n)
            ok, want = involution_type_matches(rep)
            if not ok:
                failures.append(f"n={n} {ring.name}: got {rep.verdict}, want {want}")
    report(4, "involution-type-table", not failures, "n=2..5 x {gf2,gf3,q}")


def test_criterion_05_sl_into_alt():
    failures = []
    for n in (3, 4):
        for ring in (GF2, GF3):
            out = check_sl_into_alt(ring, n, rng_for(f"sl:{n}:{ring.name}"), randoms=50)
            if not out.passed:
                failures.append(f"n={n} {ring.name}: {out.details[:1]}")
    negative = check_sl_into_alt(GF2, 2, rng_for("sl:neg"))
    if not negative.passed:
        failures.append("negative control at n=2 over gf2 failed")
    report(5, "sl-into-alt", not failures, "listed rows + 50 randoms; n=2 control over gf2")


def test_criterion_06_rho_xi():
    failures = []
    for n in (2, 3, 4):
        for ring in PALETTE_FIELDS:
            out = rho_xi_check(ring, n, rng_for(f"rhoxi:{n}:{ring.name}"), trials=100)
            if not out.passed:
                failures.append(f"n={n} {ring.name}")
    report(6, "rho-xi-compatibility", not failures, "100 random M, n=2..4, all palette fields")


def test_criterion_07_canonical_semitrace():
    failures = []
    cells = [(4, GF2), (4, GF3), (4, QQ), (6, GF2)]
    for n, ring in cells:
        tag = f"{n}:{ring.name}"
        if not check_representative_independence(ring, n, rng_for(f"ind:{tag}"), count=20).passed:
            failures.append(f"independence n={n} {ring.name}")
        if not check_semitrace_defining(ring, n, rng_for(f"def:{tag}"), trials=100).passed:
            failures.append(f"defining identity n={n} {ring.name}")
        if not correspondence_with_q_wedge(ring, n, rng_for(f"corr:{tag}"), trials=100).passed:
            failures.append(f"quadratic-form correspondence n={n} {ring.name}")
    report(7, "canonical-semitrace", not failures, "n=4 x {gf2,gf3,q} and n=6 x gf2")


def test_criterion_08_group_invariance():
    failures = []
    for ring in (GF2, GF3):
        out = pgo_invariance(ring, 4, rng_for(f"pgo:{ring.name}"), samples=50)
        if not out.passed:
            failures.append(f"{ring.name}: {out.details[:1]}")
    report(8, "group-invariance", not failures, "50 certified elements per ring, full sym basis")


def test_criterion_09_degree4_negative_result():
    failures = []
    if not degree4_alt_report(GF2).passed:
        failures.append("alternating computation over gf2")
    started = time.perf_counter()
    out = degree4_no_canonical(GF4)
    elapsed = time.perf_counter() - started
    if not out.passed:
        failures.append(f"enumeration: {out.details[:1]}")
    if not any("4096 candidates, all moved" in line for line in out.details):
        failures.append("enumeration did not cover all 4096 candidates")
    if elapsed >= 10.0:
        failures.append(f"enumeration took {elapsed:.1f}s (budget 10s)")
    report(9, "degree4-negative-result", not failures, f"enumeration in {elapsed:.2f}s")


def test_criterion_10_base_change():
    out = base_change_report(rng_for("base-change"), samples=20)
    report(10, "base-change", out.passed, "gf2 -> gf4 entrywise, 20 samples per check")
