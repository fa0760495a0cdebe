import logging

import pytest
from hypothesis import given, strategies as st

from sigmalucas import arith, oracle
from sigmalucas.pell import PellShape, ShapeKind, solve_pm4
from sigmalucas.solver import (
    EquationInstance,
    ExcludedInstanceError,
    SolveConfig,
    TheoremPattern,
    brute_force,
    family_solutions,
    lemma_pell_form,
    lemma_quadratic,
    pattern_coefficients,
    recognize_patterns,
    semiprime_search,
    solve,
)

SMALL = SolveConfig(brute_cap=10**5, q_limit=10**4, P_limit=20, m_limit=6, k_limit=40)


def residual(A, B, n):
    return oracle.naive_sigma(n, 2) - n * n - A * n - B


def check_report(report):
    """Every listed n solves the equation; big n are checked through their prime factors."""
    A, B = report.instance.A, report.instance.B
    factors = {p * q: (p, q) for p, q in report.semiprime}
    factors.update({f.n: (f.p, f.q) for f in report.families})
    for n in report.all_solutions():
        if n <= 10**7:
            assert residual(A, B, n) == 0, n
        else:
            p, q = factors[n]
            assert p != q and p * q == n and arith.is_prime(p) and arith.is_prime(q)
            assert (1 + p * p) * (1 + q * q) - n * n == A * n + B


def ns(sols):
    return [s.n for s in sols]


@pytest.mark.parametrize(
    "A, B, cap, expected",
    [(3, 0, 27, ([10], 27, True)), (3, 0, 9, ([], 9, False)), (0, 0, 1, ([1], 1, True))],
)
def test_brute_force_examples(A, B, cap, expected):
    r = brute_force(EquationInstance(A, B), cap)
    assert (r.solutions, r.scanned_to, r.complete) == expected


def test_brute_force_matches_naive_scan():
    inst = EquationInstance(2, 5)
    r = brute_force(inst, 343, block_size=50)
    assert r.complete
    assert r.solutions == [n for n in range(1, 344) if residual(2, 5, n) == 0]


def test_brute_force_large_coefficients_use_exact_ints():
    inst = EquationInstance(10**17, -(10**17) * 10)
    r = brute_force(inst, 20)
    assert r.solutions == [n for n in range(1, 21) if residual(inst.A, inst.B, n) == 0]


def test_brute_force_parallel_is_identical():
    inst = EquationInstance(7, -8)
    one = brute_force(inst, 3375, block_size=500)
    two = brute_force(inst, 3375, block_size=500, workers=2)
    assert one == two


@pytest.mark.parametrize(
    "A, B, q_limit, expected",
    [(3, 0, 5, [(2, 5)]), (3, 0, 13, [(2, 5), (5, 13)]), (2, 5, 7, [(3, 5), (5, 7)])],
)
def test_semiprime_search_examples(A, B, q_limit, expected):
    assert semiprime_search(EquationInstance(A, B), q_limit) == expected


def test_semiprime_search_matches_pair_enumeration():
    primes = arith.primes_up_to(300)
    for A, B in [(3, 0), (2, 5), (7, -8), (3, -4), (18, -63), (5, 5)]:
        want = sorted(
            (p, q) for i, p in enumerate(primes) for q in primes[i + 1 :] if lemma_quadratic(A, B, p, q)
        )
        assert semiprime_search(EquationInstance(A, B), 300) == want


@given(
    st.integers(2, 200), st.integers(2, 200), st.integers(-50, 50), st.integers(-50, 50)
)
def test_lemma_equivalence_property(p, q, A, B):
    assert lemma_quadratic(A, B, p, q) == lemma_pell_form(A, B, p, q)


@pytest.mark.parametrize(
    "A, B, must_contain",
    [
        (3, 0, {TheoremPattern("T1_1_c1", 1), TheoremPattern("T3", 1, 1)}),
        (2, 5, {TheoremPattern("T1_1_c3", 2)}),
        (3, -4, {TheoremPattern("T1_2_c1", 1)}),
    ],
)
def test_recognize_examples(A, B, must_contain):
    assert must_contain <= set(recognize_patterns(EquationInstance(A, B), 10, 5))


def test_recognize_nothing_for_7_50():
    assert recognize_patterns(EquationInstance(7, 50), 50, 10) == []


def test_recognize_skips_non_squarefree():
    # P = 2: P^2 + 4 = 8 is not square-free
    A, B = pattern_coefficients("T1_2_c1", 2)
    got = recognize_patterns(EquationInstance(A, B), 10, 5)
    assert TheoremPattern("T1_2_c1", 2) not in got


@given(st.sampled_from(["T1_1_c1", "T1_1_c2", "T1_1_c3", "T1_2_c1", "T1_2_c2", "T1_2_c3"]), st.integers(0, 30))
def test_pattern_round_trip(tid, P):
    A, B = pattern_coefficients(tid, P)
    for pat in recognize_patterns(EquationInstance(A, B), 30, 4):
        assert pat.coefficients() == (A, B)
    pat = TheoremPattern(tid, P)
    assert (pat in recognize_patterns(EquationInstance(A, B), 30, 4)) == pat.side_conditions_hold()


@given(st.sampled_from(["T3", "T4", "T5", "T6"]), st.integers(1, 8), st.integers(1, 5))
def test_pattern_round_trip_m(tid, P, m):
    A, B = pattern_coefficients(tid, P, m)
    got = recognize_patterns(EquationInstance(A, B), 8, 5)
    for pat in got:
        assert pat.coefficients() == (A, B)
    pat = TheoremPattern(tid, P, m)
    assert (pat in got) == pat.side_conditions_hold()


@given(st.integers(0, 40))
def test_m_equals_one_collapses_to_first_theorems(P):
    assert pattern_coefficients("T3", P, 1) == pattern_coefficients("T1_1_c1", P)
    assert pattern_coefficients("T4", P, 1) == pattern_coefficients("T1_1_c2", P)
    assert pattern_coefficients("T5", P, 1) == pattern_coefficients("T1_2_c2", P)
    assert pattern_coefficients("T6", P, 1) == pattern_coefficients("T1_2_c1", P)


def test_theorem_pattern_validation():
    with pytest.raises(ValueError):
        TheoremPattern("T3", 1, 0)
    with pytest.raises(ValueError):
        TheoremPattern("T1_1_c1", 1, 2)
    with pytest.raises(ValueError):
        TheoremPattern("T9", 1)


@pytest.mark.parametrize(
    "pattern, k_limit, expected",
    [
        (TheoremPattern("T1_1_c1", 1), 6, [10, 65, 20737]),
        (TheoremPattern("T1_1_c3", 2), 6, [15, 35]),
        # brute-force sigma_2 confirms 6 = 2*3 and 21 = 3*7; 329 = 7*47 is not a solution
        (TheoremPattern("T1_2_c1", 1), 4, [6, 21]),
    ],
)
def test_family_examples(pattern, k_limit, expected):
    got = family_solutions(pattern, k_limit)
    assert ns(got) == expected
    A, B = pattern.coefficients()
    assert all(residual(A, B, n) == 0 for n in expected)


def test_family_T1_2_c1_rejects_329():
    assert residual(3, -4, 329) != 0


def test_family_members_are_distinct_primes():
    for pat in [TheoremPattern("T3", 1, 3), TheoremPattern("T5", 1, 3), TheoremPattern("T6", 3, 3)]:
        for s in family_solutions(pat, 30):
            assert s.p < s.q and arith.is_prime(s.p) and arith.is_prime(s.q)
            assert s.n == s.p * s.q


def test_family_degenerate_is_empty_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        assert family_solutions(TheoremPattern("T1_1_c1", 0), 10) == []
    assert "degenerate" in caplog.text


def test_family_probable_prime_label():
    sols = family_solutions(TheoremPattern("T1_1_c1", 1), 64)
    assert all(s.proven == (s.q < 2**64) for s in sols)


@pytest.mark.parametrize("P", [1, 2, 3, 4])
def test_family_factors_are_pell_y_values(P):
    """Both factors of each T1_1_c1 family come from consecutive y's of x^2-(P^2+4)y^2=-4."""
    ys = [s.y for s in solve_pm4(PellShape(P * P + 4, ShapeKind.PLUS4, P), -4, 32)]
    expected = {
        a * b for a, b in zip(ys, ys[1:]) if a != b and arith.is_prime(a) and arith.is_prime(b)
    }
    got = family_solutions(TheoremPattern("T1_1_c1", P), 31)
    assert set(ns(got)) == expected
    assert {s.q for s in got} <= {y for y in ys if arith.is_prime(y)}


def test_family_n_max_cutoff():
    twins = family_solutions(TheoremPattern("T1_1_c3", 2), 10**6, n_max=10**5)
    primes = arith.primes_up_to(400)
    want = [p * (p + 2) for p in primes if p + 2 in primes and p * (p + 2) <= 10**5]
    assert ns(twins) == want


def test_small_oracle_agreement():
    limit = 2 * 10**5
    excess = oracle.sigma2_minus_square(limit)
    for pat in oracle.small_patterns(3, 2):
        inst = EquationInstance(*pat.coefficients())
        if inst.excluded:
            continue
        hits = oracle.scan_solutions(excess, inst)
        semis = {n for n in hits if oracle.distinct_prime_pair(n)}
        fam = set(ns(family_solutions(pat, 10**6, n_max=limit)))
        sp = {p * q for p, q in semiprime_search(inst, limit // 2) if p * q <= limit}
        assert fam <= semis and sp == semis
        assert {n for n in hits if n > inst.sporadic_bound} <= fam


def test_solve_3_0():
    report = solve(EquationInstance(3, 0), SMALL)
    assert report.sporadic == [10]
    assert report.sporadic_complete
    assert {10, 65, 20737} <= set(report.family_values())
    assert {TheoremPattern("T1_1_c1", 1), TheoremPattern("T3", 1, 1)} <= set(report.patterns)
    check_report(report)


@pytest.mark.parametrize("A, B", [(0, 1), (1, 1)])
def test_solve_rejects_excluded(A, B):
    with pytest.raises(ExcludedInstanceError, match=r"\(0, 1\)"):
        solve(EquationInstance(A, B), SMALL)


def test_solve_7_50():
    report = solve(EquationInstance(7, 50), SolveConfig(brute_cap=5000, q_limit=1000, P_limit=20, m_limit=5, k_limit=20))
    assert report.patterns == []
    assert report.families == []
    assert not report.sporadic_complete and report.sporadic_scanned_to == 5000
    check_report(report)


@pytest.mark.parametrize("A, B", [(2, 5), (3, -4), (7, -8), (18, -63), (3, 6), (0, 0), (-2, 3)])
def test_report_soundness(A, B):
    report = solve(EquationInstance(A, B), SMALL)
    check_report(report)
    assert report.sporadic_complete == (report.sporadic_scanned_to >= EquationInstance(A, B).sporadic_bound)
