"""Acceptance suite: one test per criterion, each printing a PASS line.

All checks are exact (zero tolerance); runtime budgets are asserted with
time.monotonic.  Run with `pytest tests/test_acceptance.py -v -s` to see the
per-criterion lines.
"""

import time
from fractions import Fraction

import gdecomp as g
from gdecomp import IndexSet, SymMatrix
from gdecomp.decomposition import NOT_MEMBER, SOLVED
from gdecomp.membership import check_Um_bruteforce
from gdecomp.saturation import enumerate_saturated
from helpers import HALF, a6, m3, n_cycle, naive_principal_sum


def _report(number, text):
    print("ACCEPTANCE %d: PASS - %s" % (number, text))


def test_criterion_1_main_theorem_stochastic(grid3_verdicts):
    start = time.monotonic()
    solved = 0
    for A, verdict in grid3_verdicts:
        upper = g.check_Um_upper(A).member
        result = g.g_decompose(A, "stochastic")
        assert (result.status == SOLVED) == upper
        if result.status == SOLVED:
            solved += 1
            assert g.verify_decomposition(A, result.X, "stochastic")
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, "budget 5 s exceeded: %.1f s" % elapsed
    _report(
        1,
        "stochastic solvability == saturated membership on all 216 grids "
        "(%d solved, %.2f s)" % (solved, elapsed),
    )


def test_criterion_2_main_theorem_substochastic(grid3_verdicts):
    start = time.monotonic()
    solved = 0
    for A, verdict in grid3_verdicts:
        result = g.g_decompose(A, "substochastic")
        assert (result.status == SOLVED) == verdict.member
        if result.status == SOLVED:
            solved += 1
            assert g.verify_decomposition(A, result.X, "substochastic")
        else:
            cert = result.certificate
            assert cert is not None
            assert naive_principal_sum(A, cert) > len(cert)
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, "budget 5 s exceeded: %.1f s" % elapsed
    _report(
        2,
        "substochastic solvability == membership, certificates validate "
        "(%d solved, %.2f s)" % (solved, elapsed),
    )


def test_criterion_3_checker_agreement(grid3_verdicts, grid4_verdicts):
    start = time.monotonic()
    checked = 0
    for verdicts in (grid3_verdicts, grid4_verdicts):
        for A, brute in verdicts:
            mincut = g.check_Um_mincut(A)
            assert brute.member == mincut.member
            for verdict in (brute, mincut):
                if verdict.certificate is not None:
                    cert = verdict.certificate
                    assert naive_principal_sum(A, cert) > len(cert)
            checked += 1
    elapsed = time.monotonic() - start
    assert checked == 216 + 11664
    assert elapsed < 60.0, "budget 60 s exceeded: %.1f s" % elapsed
    _report(
        3,
        "brute force and min-cut agree on %d grid matrices (%.2f s)"
        % (checked, elapsed),
    )


def test_criterion_4_extremity_oracle_agreement(grid3_verdicts, grid4_verdicts):
    start = time.monotonic()
    members = 0
    for verdicts in (grid3_verdicts, grid4_verdicts):
        for A, verdict in verdicts:
            if not verdict.member:
                continue
            family = enumerate_saturated(A)
            criterion = g.is_extreme_criterion(
                A, "Um", verdict=verdict, family=family
            ).extreme
            oracle = g.is_extreme_nullspace(A, "Um", verdict=verdict, family=family)
            assert criterion == oracle
            members += 1
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, "budget 5 min exceeded: %.1f s" % elapsed
    _report(
        4,
        "criterion == rank oracle on %d member matrices (orders 3 and 4, %.2f s)"
        % (members, elapsed),
    )


def test_criterion_5_paper_regression_suite():
    # the extreme 3x3 matrix with a non-extreme 2x2 principal submatrix
    assert g.is_extreme_criterion(m3(), "Um").extreme
    sub = g.principal_submatrix(m3(), [1, 2])
    assert sub == SymMatrix([[0, HALF], [HALF, 0]])
    assert not g.is_extreme_criterion(sub, "Um").extreme

    # the 1/2-cycle of order 6: an F-matrix, saturated member, not extreme
    N6 = n_cycle(6)
    assert g.is_F_matrix(N6)
    assert g.check_Um_upper(N6).member
    assert not g.is_extreme_criterion(N6, "UM").extreme

    # minimal saturated neighborhood of entry (2,3) in the 6x6 example
    assert g.min_sat_neighborhood(a6(), 2, 3) == IndexSet({2, 3, 4}, 6)

    # the swap matrix is the unique order-2 F-matrix on the grid
    f_matrices = [
        A
        for A in g.grid_matrices(2)
        if check_Um_bruteforce(A).member and g.is_F_matrix(A)
    ]
    assert f_matrices == [SymMatrix([[0, 1], [1, 0]])]
    _report(5, "all named matrices behave exactly as recorded")


def test_criterion_6_enumeration_counts():
    assert g.enumerate_extreme(1, "UM") == [SymMatrix([[1]])]
    assert len(g.enumerate_extreme(1, "Um")) == 2
    assert len(g.enumerate_extreme(2, "UM")) == 4
    assert len(g.enumerate_extreme(2, "Um")) == 7

    for m in (1, 2, 3):
        lower = g.enumerate_extreme(m, "Um")
        upper = set(g.enumerate_extreme(m, "UM"))
        assert upper == {A for A in lower if A.total_sum() == m}

    for m in (1, 2, 3, 4):
        for vertex in g.enumerate_extreme(m, "Um"):
            assert g.is_grid_matrix(vertex)
            if g.is_half_grid_matrix(vertex):
                assert vertex == SymMatrix.zero(m)
    _report(
        6,
        "vertex counts (1, 2, 4, 7), upper = saturated lower for m <= 3, "
        "half-grid intersection is {0} for m <= 4",
    )


def test_criterion_7_krein_milman_random_members():
    start = time.monotonic()
    vertices = g.enumerate_extreme(3, "UM")
    rng = g.SplitMix64(0)
    for _ in range(100):
        weights = [rng.below(1000) + 1 for _ in vertices]
        total = sum(weights)
        acc = [[Fraction(0)] * 3 for _ in range(3)]
        for w, vertex in zip(weights, vertices):
            for i in range(3):
                for j in range(3):
                    acc[i][j] += Fraction(w, total) * vertex.entries[i][j]
        A = SymMatrix(acc)
        combo = g.krein_milman_decompose(A, "UM")
        assert combo.total_weight() == 1
        assert combo.reconstruct() == A
        for weight, vertex in combo.terms:
            assert 0 < weight <= 1
            assert g.is_extreme_criterion(vertex, "UM").extreme
            assert g.is_extreme_nullspace(vertex, "UM")
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, "budget 30 s exceeded: %.1f s" % elapsed
    _report(
        7,
        "100 random saturated members decompose exactly; all vertices pass "
        "both extremity tests (%.2f s)" % elapsed,
    )


def test_criterion_8_cross_constructor_agreement():
    vertices = g.enumerate_extreme(3, "UM")
    for vertex in vertices:
        inductive = g.g_decompose_extreme_inductive(vertex)
        flow = g.g_decompose(vertex, "stochastic")
        assert g.verify_decomposition(vertex, inductive.X, "stochastic")
        assert g.verify_decomposition(vertex, flow.X, "stochastic")
    _report(
        8,
        "inductive and flow constructions both verify on all %d saturated "
        "vertices of order 3" % len(vertices),
    )


def test_criterion_9_quadratic_form_bridge(grid3_verdicts):
    confirmed = 0
    violated = 0
    for A, verdict in grid3_verdicts:
        upper = g.check_Um_upper(A)
        if upper.member:
            result = g.qf_bounds_certificate(A, trials=1000, seed=0)
            assert result.confirmed and not result.inconclusive
            confirmed += 1
        elif not verdict.member:
            cert = verdict.certificate
            result = g.qf_bounds_certificate(A, trials=0, seed=0)
            assert not result.confirmed
            x = result.counterexample
            assert x is not None
            value = g.quadratic_form(A.entries, x.coordinates)
            assert value > max(x.coordinates)  # exact violation of the upper bound
            violated += 1
    assert confirmed > 0 and violated > 0
    _report(
        9,
        "bounds hold on 1000 samples for all %d saturated members; uniform "
        "certificates violate exactly on all %d matrices with a violating "
        "subset" % (confirmed, violated),
    )


def test_criterion_10_conjecture_scan():
    start = time.monotonic()
    for m in (1, 2, 3, 4):
        report = g.conjecture_scan(m)
        assert report.conjecture1_counterexamples == ()
        assert report.conjecture2_counterexamples == ()
        assert report.grid_count == g.scan_grid_size(m)
    elapsed = time.monotonic() - start
    assert elapsed < 300.0, "budget 5 min exceeded: %.1f s" % elapsed
    _report(
        10,
        "zero counterexamples to both conjectures for m <= 4 (%.2f s)" % elapsed,
    )
