"""Acceptance harness: one test per criterion, one printed line per criterion.

Every test computes its criterion at the stated tolerance, prints a
PASS/FAIL line via record_criterion, and then asserts the result, so a
failed criterion is a red test.  Reference values that enumeration and
the independent oracles contradict are still asserted as stated — the
FAIL detail records what the engine actually measures and why.
"""

import json
import time
from fractions import Fraction

import oracle
import props
from conftest import record_criterion

from csdlab.cli import main
from csdlab.degrees import csd, csd_star, d, sd
from csdlab.expr import evaluate, parse
from csdlab.formulas import (
    csd_E_p3,
    csd_P_group,
    csd_dihedral,
    csd_dihedral_2n,
    csd_lower_bound_Zn_Q8,
    csd_quaternion,
    csd_schmidt_section,
    csd_semidihedral,
    l1_count_Zn_Q8,
)
from csdlab.groups import (
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    heisenberg_E,
    p_group_P,
    quasidihedral,
)
from csdlab.intmath import primes_in
from csdlab.lattice import cyclic_subgroups, subgroup_lattice


def build(text):
    return evaluate(parse(text))


def test_criterion_1_reference_value_table():
    table = [
        ("S(3)", csd, Fraction(19, 25)),
        ("Z(3)xS(3)", csd, Fraction(85, 121)),
        ("Z(2)xS(3)", csd, Fraction(19, 25)),
        ("D(8)", csd, Fraction(41, 49)),
        ("Q(16)", csd, Fraction(7, 8)),
        ("SD(16)", csd, Fraction(37, 50)),
        ("Q(8)", csd, Fraction(1)),
        ("M(16)", csd, Fraction(1)),
        ("D(8)", d, Fraction(5, 8)),
    ]
    start = time.perf_counter()
    mismatches = []
    for text, fn, expected in table:
        group = build(text)
        actual = fn(group) if fn is d else fn(group, max_order=group.order)
        if actual != expected:
            mismatches.append((text, fn.__name__, expected, actual))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 10.0
    if mismatches:
        parts = "; ".join(
            f"{fn}({text}) stated {e} but enumerated {a}" for text, fn, e, a in mismatches
        )
        detail = (
            f"{len(table) - len(mismatches)}/{len(table)} rows exact in {elapsed:.2f}s; "
            f"{parts} (independent subset oracle agrees with the enumeration: "
            f"csd(SD(16)) = {oracle.brute_csd(build('SD(16)'))})"
        )
    else:
        detail = f"all {len(table)} rows exact in {elapsed:.2f}s"
    record_criterion(1, ok, detail)
    assert ok, detail


def test_criterion_2_formula_vs_enumeration_sweeps():
    start = time.perf_counter()
    rows = 0
    mismatches = []

    def check(label, formula_value, group):
        nonlocal rows
        rows += 1
        enum = csd(group, max_order=group.order)
        if enum != formula_value:
            mismatches.append((label, formula_value, enum))

    for m in range(2, 41):
        check(f"dihedral m={m}", csd_dihedral(m), dihedral(m))
    for n in range(3, 9):
        check(f"quaternion n={n}", csd_quaternion(n), generalized_quaternion(n))
    for n in range(4, 9):
        check(f"semidihedral n={n}", csd_semidihedral(n), quasidihedral(n))
    pgroup_rows = 0
    for n in range(2, 10):
        for p in primes_in(3, 512):
            if p ** (n - 1) > 512:
                break
            for q in primes_in(2, p - 1):
                if (p - 1) % q == 0 and p ** (n - 1) * q <= 512:
                    check(f"pgroup n={n},p={p},q={q}", csd_P_group(n, p), p_group_P(n, p, q))
                    pgroup_rows += 1
    for p in (3, 5):
        check(f"ep3 p={p}", csd_E_p3(p), heisenberg_E(p))
    elapsed = time.perf_counter() - start

    semidihedral_bad = [m for m in mismatches if m[0].startswith("semidihedral")]
    other_bad = [m for m in mismatches if not m[0].startswith("semidihedral")]
    ok = not mismatches and elapsed < 120.0
    if mismatches:
        sd16 = quasidihedral(4)
        gap_law = all(
            csd(quasidihedral(n), max_order=2**n) - csd_semidihedral(n)
            == Fraction(2 ** (n - 3), len(cyclic_subgroups(quasidihedral(n), max_order=2**n)) ** 2)
            for n in range(4, 9)
        )
        detail = (
            f"{rows - len(mismatches)}/{rows} rows exact in {elapsed:.1f}s "
            f"({pgroup_rows} pgroup rows, every p^(n-1)q <= 512); "
            f"semidihedral rows all differ: "
            + "; ".join(f"{lbl} stated {f} enumerated {e}" for lbl, f, e in semidihedral_bad)
            + f"; enumerated - stated == 2^(n-3)/|L1|^2 for all n in [4,8]: {gap_law}"
            + (f"; non-semidihedral mismatches: {other_bad}" if other_bad else
               "; all other families exact")
        )
        assert oracle.brute_csd(sd16) == csd(sd16, max_order=16)
    else:
        detail = (
            f"all {rows} rows exact in {elapsed:.1f}s ({pgroup_rows} pgroup rows)"
        )
    record_criterion(2, ok, detail)
    assert ok, detail


def test_criterion_3_cyclic_count_and_bound_Zn_Q8():
    expected_bounds = {2: Fraction(19, 27), 3: Fraction(139, 169)}
    results = []
    ok = True
    for n in (2, 3):
        group = direct_product(cyclic(2**n), generalized_quaternion(3))
        l1 = len(cyclic_subgroups(group, max_order=group.order))
        value = csd(group, max_order=group.order)
        bound = csd_lower_bound_Zn_Q8(n)
        count_ok = l1 == 8 * n + 2 == l1_count_Zn_Q8(n)
        bound_ok = bound == expected_bounds[n] and value >= bound
        ok = ok and count_ok and bound_ok
        results.append(f"n={n}: |L1|={l1} (=8n+2 {count_ok}), csd={value} >= {bound} {bound_ok}")
    detail = "; ".join(results)
    record_criterion(3, ok, detail)
    assert ok, detail


def test_criterion_4_A4_conflict_resolution():
    group = build("A(4)")
    engine = csd(group, max_order=group.order)
    brute = oracle.brute_csd(group)
    option_a = csd_schmidt_section(2, 2)
    option_b = Fraction(5, 8)
    assert option_a == Fraction(7, 16)
    matches_a = engine == option_a
    matches_b = engine == option_b
    ok = (engine == brute) and (matches_a != matches_b)
    detail = (
        f"enumerated csd(A(4)) = {engine}; independent subset oracle = {brute} "
        f"(agree: {engine == brute}); equals csd_schmidt_section(2,2) = 7/16: {matches_a}; "
        f"equals 5/8: {matches_b}"
    )
    record_criterion(4, ok, detail)
    assert ok, detail


def test_criterion_5_property_suites(corpus):
    counts = {
        "permutes-symmetry": props.suite_permutes_symmetry(corpus),
        "product-size": props.suite_product_size(corpus),
        "c1-superset": props.suite_c1_superset(corpus),
        "lower-bounds": props.suite_lower_bounds(corpus),
        "csd1-iff-sd1": props.suite_csd_one_iff_sd_one(props.eq_sd_groups()),
        "coprime-multiplicativity": props.suite_coprime_multiplicativity(),
        "relabel-invariance": props.suite_relabel_invariance(corpus),
        "lagrange": props.suite_lagrange(corpus),
    }
    ok = all(count >= 100 for count in counts.values())
    detail = "all suites hold; cases: " + ", ".join(
        f"{name}={count}" for name, count in counts.items()
    )
    record_criterion(5, ok, detail)
    assert ok, detail


def test_criterion_6_small_order_lattice_oracle(small_corpus):
    checked = 0
    for text, group in small_corpus:
        expected = oracle.brute_subgroups(group)
        lattice = subgroup_lattice(group, max_order=group.order)
        actual = {frozenset(sub.elems) for sub in lattice.subgroups}
        assert actual == expected, text
        checked += 1
    ok = checked >= 25
    detail = f"subgroup_lattice matches exhaustive subset enumeration on {checked} groups of order <= 24"
    record_criterion(6, ok, detail)
    assert ok, detail


def test_criterion_7_limit_trends():
    checks = [
        ("csd_dihedral_2n(12) < 0.05", float(csd_dihedral_2n(12)), lambda v: v < 0.05),
        ("csd_quaternion(12) < 0.05", float(csd_quaternion(12)), lambda v: v < 0.05),
        ("csd_semidihedral(12) < 0.05", float(csd_semidihedral(12)), lambda v: v < 0.05),
        (
            "|csd_P_group(20,3) - 2/3| < 0.01",
            abs(float(csd_P_group(20, 3)) - 2 / 3),
            lambda v: v < 0.01,
        ),
        ("csd_lower_bound_Zn_Q8(40) > 0.99", float(csd_lower_bound_Zn_Q8(40)), lambda v: v > 0.99),
    ]
    failures = [(label, value) for label, value, pred in checks if not pred(value)]
    ok = not failures
    if failures:
        pg = csd_P_group(20, 3)
        detail = (
            f"{len(checks) - len(failures)}/{len(checks)} trend checks hold; "
            + "; ".join(f"{label} fails with {value:.6f}" for label, value in failures)
            + f" (csd_P_group(20,3) = {pg} ~ {float(pg):.6f}; the large-n value at fixed p "
            f"is (2p-1)/p^2 = 5/9 ~ 0.555556, which sits 1/9 away from 2/3)"
        )
    else:
        detail = f"all {len(checks)} trend checks hold"
    record_criterion(7, ok, detail)
    assert ok, detail


def test_criterion_8_csd_star_and_scan(capsys):
    start = time.perf_counter()
    star = csd_star(dihedral(4), max_order=8)
    elapsed = time.perf_counter() - start
    star_ok = star == Fraction(41, 49) and elapsed < 1.0

    code = main(["scan", "csd-star", "E(27)", "--format", "json"])
    out = capsys.readouterr().out
    rows = json.loads(out)
    row = rows[0]
    scan_ok = (
        code == 0
        and row["group"] == "E(27)"
        and row["csd_star"] == "22/49"
        and row["classification"] == "uncertified"
        and row["eq_41_49"] == "no"
    )
    ok = star_ok and scan_ok
    detail = (
        f"csd_star(D(8)) = {star} in {elapsed * 1000:.0f}ms; "
        f"scan csd-star E(27) -> {row['csd_star']} classified {row['classification']} "
        f"(below the 41/49 threshold)"
    )
    record_criterion(8, ok, detail)
    assert ok, detail
