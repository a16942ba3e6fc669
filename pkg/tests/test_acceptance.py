"""Acceptance criteria, one test per criterion.

Each test prints ``criterion N: PASS|FAIL`` and the outcome table is repeated
in the pytest summary. Runtime budgets are asserted alongside correctness.
Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import time
from math import ceil, factorial

import pytest

from acceptance_log import record
from published_tables import BY_B_HAND, BY_C_CARD

from cardcodes import (Constraints, GraphSpec, Hand, Signature, all_deals, chromatic_number_exact, decode_full,
                       dual_protocol, exhaustive_partition_check, find_coloring, learned_card, modn_coloring,
                       parity_coloring, reduce_protocol)
from cardcodes.decode import clique_partition
from cardcodes.fixtures import builtin_fixture
from cardcodes.protocols import FieldWeights, gf_coloring
from cardcodes.search import class_size_profiles, max_class_size, min_class_size, uniform_profiles
from cardcodes.verify import (SafetyViolation, check_ca2_ca3, check_informative, check_min_informative, check_safe)

RC = Signature(3, 3, 1, 0)
WEAK = Signature(3, 3, 0, 1)


def _digits(hands) -> str:
    return " ".join("".join(map(str, h.cards)) for h in hands)


def _modn_signatures(max_n=12):
    for n in range(7, max_n + 1):
        for c, r in ((1, 0), (0, 1)):
            for a in range(3, n - 3):
                yield Signature(a, n - a - 1, c, r)


def test_c01_fixtures():
    t0 = time.perf_counter()
    six2, _ = builtin_fixture("six_chi2")
    six1, _ = builtin_fixture("six_chi1")
    six, _ = builtin_fixture("six_chi")
    two, _ = builtin_fixture("two_msg_331")

    checks = {}
    checks["six_chi2 informative+safe"] = check_informative(six2, RC).verdict and check_safe(six2, RC).verdict
    checks["six_chi1 weak safe"] = check_safe(six1, WEAK).verdict
    unsafe = check_safe(six1, RC, all_witnesses=True)
    found = set(unsafe.witnesses)
    c1, c0 = Hand.of([1], 7), Hand.of([0], 7)
    checks["six_chi1 unsafe with the deduced cards"] = (
        not unsafe.verdict
        and SafetyViolation(c1, 2, 5, "contains") in found
        and SafetyViolation(c0, 3, 4, "excludes") in found
        and SafetyViolation(c0, 6, 4, "contains") in found)
    ca = check_ca2_ca3(six, WEAK, all_witnesses=True)
    checks["six_chi CA3 class 5 card 0"] = (not ca.verdict and any(
        w.kind == "CA3" and w.message == 5 and w.card == 0 for w in ca.witnesses))
    checks["two_msg_331 min+safe"] = check_min_informative(two, RC).verdict and check_safe(two, RC).verdict

    rows_ok = 0
    for table in (BY_B_HAND, BY_C_CARD):
        for key, expected in table.items():
            part = clique_partition(two, RC, Hand.of((int(ch) for ch in key), 7))
            rows_ok += (_digits(part.get(0, [])), _digits(part.get(1, []))) == expected
    checks["decode tables"] = rows_ok == len(BY_B_HAND) + len(BY_C_CARD)

    elapsed = time.perf_counter() - t0
    ok = all(checks.values()) and elapsed < 1.0
    record(1, ok, f"{sum(checks.values())}/{len(checks)} fixture claims, {rows_ok}/42 table rows", elapsed)
    assert all(checks.values()), checks
    assert elapsed < 1.0


def test_c02_modn_sweep():
    t0 = time.perf_counter()
    sigs = list(_modn_signatures())
    bad = [str(s) for s in sigs
           if not (check_informative(col := modn_coloring(s), s).verdict and check_safe(col, s).verdict)]
    # the symmetric families must be among the checked signatures
    covered = {(s.n, s.a) for s in sigs}
    # n = 2a+1, and n = 2a+2 with n and a even
    symmetric = {(7, 3), (9, 4), (11, 5), (10, 4)} <= covered
    elapsed = time.perf_counter() - t0
    ok = not bad and symmetric and elapsed < 60
    record(2, ok, f"{len(sigs)} signatures, failures={bad}", elapsed)
    assert not bad and symmetric and elapsed < 60


def test_c03_parity_sweep():
    t0 = time.perf_counter()
    count, bad = 0, []
    for n in range(4, 15):
        for a in range(2, n):
            for b in range(2, n - a + 1):
                for c in range(0, n - a - b + 1):
                    r = n - a - b - c
                    if c <= n // 2 - 2 and c + r >= 1 and b < n // 2:
                        s = Signature(a, b, c, r)
                        col = parity_coloring(s)
                        count += 1
                        if not (check_min_informative(col, s).verdict and check_safe(col, s).verdict):
                            bad.append(str(s))
    rep = check_min_informative(parity_coloring(RC), RC)
    counter = not rep.verdict and rep.witnesses and rep.witnesses[0].holds(parity_coloring(RC), RC)
    elapsed = time.perf_counter() - t0
    ok = not bad and bool(counter) and elapsed < 60
    record(3, ok, f"{count} signatures, failures={bad}, (3,3,1,0) witness={rep.witnesses[0].line()}", elapsed)
    assert count > 0 and not bad and counter and elapsed < 60


def test_c04_reduction():
    t0 = time.perf_counter()
    bad = []
    sigs = list(_modn_signatures())
    for s in sigs:
        red = reduce_protocol(modn_coloring(s), s)
        if not (check_min_informative(red, s).verdict and check_safe(red, s).verdict
                and red.message_count == ceil(s.n / s.a)):
            bad.append(str(s))
    rc_count = reduce_protocol(modn_coloring(RC), RC).message_count
    elapsed = time.perf_counter() - t0
    ok = not bad and rc_count == 3 and elapsed < 30
    record(4, ok, f"{len(sigs)} signatures, failures={bad}, (3,3,1) messages={rc_count}", elapsed)
    assert not bad and rc_count == 3 and elapsed < 30


def test_c05_gf_coloring():
    t0 = time.perf_counter()
    count, bad = 0, []
    for n in range(2, 11):
        for a in range(1, n):
            for d in range(1, min(a, n - a)):
                s = Signature(a, n - a - d, 0, d)
                weights = FieldWeights.default(n)
                col = gf_coloring(s, d, weights)
                count += 1
                if not (check_informative(col, s).verdict and col.message_count <= weights.q ** d <= (2 * n) ** d):
                    bad.append((str(s), d))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120
    record(5, ok, f"{count} (n,a,d) cases, failures={bad}", elapsed)
    assert count > 0 and not bad and elapsed < 120


def test_c06_chromatic_numbers():
    t0 = time.perf_counter()
    five = find_coloring(RC, Constraints("proper", k=5))
    six = find_coloring(RC, Constraints("proper", k=6))
    j73 = chromatic_number_exact(GraphSpec(7, 3), Constraints("proper"), 8)
    j52 = chromatic_number_exact(GraphSpec(5, 2), Constraints("proper"), 8)
    elapsed = time.perf_counter() - t0
    ok = five.outcome == "UNSAT" and six.outcome == "SAT" and j73 == 6 and j52 == 5 and elapsed < 600
    record(6, ok, f"J(7,3): k=5 {five.outcome}, k=6 {six.outcome}, chi={j73}; chi(J(5,2))={j52}", elapsed)
    assert ok


def test_c07_no_uniform_six_message_solution():
    t0 = time.perf_counter()
    outcomes = {}
    for profile in ((5, 6, 6, 6, 6, 6), (5, 5, 6, 6, 6, 7)):
        res = find_coloring(RC, Constraints("proper", "safe", k=6, size_profile=profile, timeout=1800))
        outcomes[profile] = res.outcome
    low, high = min_class_size(RC), max_class_size(RC)
    profiles = class_size_profiles(35, 6, low, high)
    uniform = uniform_profiles(profiles, high)
    elapsed = time.perf_counter() - t0
    ok = (all(o == "UNSAT" for o in outcomes.values()) and (low, high) == (5, 7)
          and sorted(uniform) == sorted([(6, 6, 6, 6, 6, 5), (7, 6, 6, 6, 5, 5)]) and elapsed < 1800)
    detail = ", ".join(f"{','.join(map(str, p))}: {o}" for p, o in outcomes.items())
    record(7, ok, f"{detail}; class sizes in [{low},{high}]; all profiles {profiles}", elapsed)
    assert ok


def test_c08_two_message_search():
    t0 = time.perf_counter()
    res = find_coloring(RC, Constraints("min_informative", "safe", k=2))
    good = res.sat and check_min_informative(res.coloring, RC).verdict and check_safe(res.coloring, RC).verdict
    elapsed = time.perf_counter() - t0
    ok = good and res.coloring.message_count == 2 and elapsed < 600
    sizes = res.coloring.class_sizes() if res.coloring else None
    record(8, ok, f"{res.outcome} after {res.nodes_explored} nodes, class sizes {sizes}", elapsed)
    assert ok


def test_c09_partition_oracle():
    t0 = time.perf_counter()
    j52 = exhaustive_partition_check(Signature(2, 2, 1, 0), keep=False)
    j42 = exhaustive_partition_check(Signature(2, 1, 0, 1))
    published, _ = builtin_fixture("j42_safe")
    elapsed = time.perf_counter() - t0
    ok = (j52.examined == 115975 and j52.count == 0 and j42.exists
          and published.normalized() in j42.matches and elapsed < 60)
    record(9, ok, f"J(5,2): {j52.count}/{j52.examined}; J(4,2): {j42.count}/{j42.examined} incl. listed example", elapsed)
    assert ok


def test_c10_decode_soundness():
    t0 = time.perf_counter()
    two, _ = builtin_fixture("two_msg_331")
    modn = modn_coloring(RC)
    deals = list(all_deals(RC))
    card_ok = sum(learned_card(d.hand_b, two[d.hand_a], two, RC) in d.hand_a for d in deals)
    full_ok = sum(decode_full(d.hand_b, modn[d.hand_a], modn, RC) == d.hand_a for d in deals)
    # 7! / (3! 3! 1!) deals; the criterion text quotes 4,200 (see ledger)
    expected = factorial(7) // (factorial(3) * factorial(3) * factorial(1))
    elapsed = time.perf_counter() - t0
    ok = len(deals) == expected and card_ok == full_ok == expected and elapsed < 10
    record(10, ok, f"{len(deals)} deals (of {expected}): learned card sound {card_ok}, "
                   f"full round trip {full_ok}", elapsed)
    assert ok


def test_c11_duality_informative_and_involution():
    t0 = time.perf_counter()
    modn = modn_coloring(RC)
    dual, sig = dual_protocol(modn, RC)
    back, sig2 = dual_protocol(dual, sig)
    informative = check_informative(dual, sig).verdict
    involution = back.normalized() == modn.normalized() and sig2 == RC
    elapsed = time.perf_counter() - t0
    ok = sig == Signature(4, 2, 1, 0) and informative and involution and elapsed < 5
    record(11, ok, f"dual for {sig}: informative={informative}, double dual = original: {involution}", elapsed)
    assert ok


@pytest.mark.xfail(strict=True, reason="no informative and safe protocol exists for (4,2,1,0); see decisions ledger")
def test_c11_duality_safety():
    t0 = time.perf_counter()
    dual, sig = dual_protocol(modn_coloring(RC), RC)
    rep = check_safe(dual, sig)
    elapsed = time.perf_counter() - t0
    first = rep.witnesses[0].line() if rep.witnesses else "-"
    record(11, rep.verdict, f"dual safe={rep.verdict} (first witness {first})", elapsed)
    assert rep.verdict
